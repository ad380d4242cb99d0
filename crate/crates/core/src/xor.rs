//! XOR formulas: diverse pairs through heavy kernel vectors, dissimilar
//! pairs by guessing the agreeing positions, and the even-set encoding.
//!
//! Two solutions of `A·x = b` differ by a kernel vector of `A`, and every
//! kernel vector `y` pairs a solution `x` with `x ⊕ y`, so the largest pair
//! distance is the largest kernel weight.

use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;

use crate::diverse::{DiversePairResult, SearchStats};
use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::formula::dimacs::{content_lines, parse_count};
use crate::formula::{BitVector, Literal, XorClause, XorFormula};
use crate::sat::{gauss_solve, F2System};

const CHUNK: usize = 512;

/// Limits for exhaustive kernel search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelSearchConfig {
    /// Largest kernel dimension enumerated.
    pub enumeration_cap: usize,
    /// Enumerate the spans of two halves of the basis and combine them,
    /// skipping combinations whose weight sum cannot reach the target.
    pub meet_in_middle: bool,
}

impl Default for KernelSearchConfig {
    fn default() -> Self {
        Self {
            enumeration_cap: 24,
            meet_in_middle: false,
        }
    }
}

/// One row per clause; the right-hand side is the clause parity.
pub fn xor_to_system(phi: &XorFormula) -> F2System {
    let n = phi.num_vars();
    let (rows, rhs) = phi
        .clauses()
        .iter()
        .map(|c| {
            let mut row = BitVector::zeros(n);
            for &v in c.vars() {
                row.set(v - 1, true);
            }
            (row, c.rhs())
        })
        .unzip();
    F2System::new(n, rows, rhs).expect("rows built at the formula width")
}

/// A kernel vector of weight at least `d`, if one exists.
///
/// Vectors are visited in Gray-code order over the kernel basis (or over
/// pairs of half-spans with `meet_in_middle`) and the first hit is returned.
pub fn max_weight_kernel_vector(
    sys: &F2System,
    d: usize,
    cfg: KernelSearchConfig,
) -> Result<Option<BitVector>> {
    let basis = gauss_solve(sys).kernel_basis;
    search_span(sys.num_vars(), &basis, d, cfg)
}

/// The heaviest kernel vector (the zero vector for a trivial kernel).
pub fn heaviest_kernel_vector(sys: &F2System, cfg: KernelSearchConfig) -> Result<BitVector> {
    let basis = gauss_solve(sys).kernel_basis;
    let n = sys.num_vars();
    let mut best = BitVector::zeros(n);
    // Targets only go up, so each probe starts past the last hit.
    while let Some(v) = search_span(n, &basis, best.weight() + 1, cfg)? {
        best = v;
    }
    Ok(best)
}

fn search_span(
    n: usize,
    basis: &[BitVector],
    target: usize,
    cfg: KernelSearchConfig,
) -> Result<Option<BitVector>> {
    if basis.len() > cfg.enumeration_cap {
        return Err(Error::CapExceeded {
            what: "kernel dimension",
            value: basis.len() as u64,
            cap: cfg.enumeration_cap as u64,
        });
    }
    if target == 0 {
        return Ok(Some(BitVector::zeros(n)));
    }
    if target > n {
        return Ok(None);
    }
    if cfg.meet_in_middle && basis.len() >= 2 {
        Ok(meet_in_middle(n, basis, target))
    } else {
        Ok(gray_code(n, basis, target))
    }
}

fn gray_code(n: usize, basis: &[BitVector], target: usize) -> Option<BitVector> {
    let mut v = BitVector::zeros(n);
    for step in 1u64..(1u64 << basis.len()) {
        v.xor_assign(&basis[step.trailing_zeros() as usize]);
        if v.weight() >= target {
            return Some(v);
        }
    }
    None
}

fn span(n: usize, basis: &[BitVector]) -> Vec<BitVector> {
    let mut out = Vec::with_capacity(1 << basis.len());
    let mut v = BitVector::zeros(n);
    out.push(v.clone());
    for step in 1u64..(1u64 << basis.len()) {
        v.xor_assign(&basis[step.trailing_zeros() as usize]);
        out.push(v.clone());
    }
    out
}

fn meet_in_middle(n: usize, basis: &[BitVector], target: usize) -> Option<BitVector> {
    let (lo, hi) = basis.split_at(basis.len() / 2);
    let left = span(n, lo);
    let mut right: Vec<(usize, BitVector)> =
        span(n, hi).into_iter().map(|v| (v.weight(), v)).collect();
    right.sort_by_key(|r| std::cmp::Reverse(r.0));
    for u in &left {
        let wu = u.weight();
        // |u ⊕ v| ≤ |u| + |v|, and `right` is sorted by decreasing weight.
        for (wv, v) in &right {
            if wu + wv < target {
                break;
            }
            let mut w = u.clone();
            w.xor_assign(v);
            if w.weight() >= target {
                return Some(w);
            }
        }
    }
    None
}

/// Diverse pair `(x*, x* ⊕ y*)` from a particular solution and a heavy
/// kernel vector.
pub fn diverse_pair_xor(
    phi: &XorFormula,
    d: usize,
    cfg: KernelSearchConfig,
) -> Result<DiversePairResult> {
    let sys = xor_to_system(phi);
    let sol = gauss_solve(&sys);
    let stats = SearchStats::default();
    let Some(x) = sol.particular else {
        return Ok(DiversePairResult::not_found(stats));
    };
    match search_span(sys.num_vars(), &sol.kernel_basis, d, cfg)? {
        Some(y) => {
            let other = x.xor(&y)?;
            Ok(DiversePairResult::with_pair(x, other, stats))
        }
        None => Ok(DiversePairResult::not_found(stats)),
    }
}

/// Dissimilar pair: for each set `C` of `min(s, n)` positions allowed to
/// agree, solve `φ(x) ∧ φ(y) ∧ ⋀_{i ∉ C} (xᵢ ⊕ yᵢ = 1)` over `2n` variables.
/// `s > n` acts as `s = n`.
pub fn dissimilar_pair_xor(phi: &XorFormula, s: usize) -> Result<DiversePairResult> {
    let n = phi.num_vars();
    let base = xor_to_system(phi);
    if gauss_solve(&base).particular.is_none() {
        return Ok(DiversePairResult::not_found(SearchStats::default()));
    }
    let size = s.min(n);
    let mut guesses = 0u64;
    let mut candidates = (1..=n).combinations(size);
    loop {
        let chunk: Vec<Vec<usize>> = candidates.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let hit = chunk
            .par_iter()
            .enumerate()
            .map(|(i, c)| (i, doubled_system(&base, c)))
            .find_map_first(|(i, sys)| gauss_solve(&sys).particular.map(|beta| (i, beta)));
        match hit {
            Some((i, beta)) => {
                guesses += i as u64 + 1;
                let stats = SearchStats {
                    guesses,
                    branches: 0,
                };
                let (a1, a2) = (beta.slice(0, n), beta.slice(n, n));
                return Ok(DiversePairResult::with_pair(a1, a2, stats));
            }
            None => guesses += chunk.len() as u64,
        }
    }
    Ok(DiversePairResult::not_found(SearchStats {
        guesses,
        branches: 0,
    }))
}

fn doubled_system(base: &F2System, agree: &[usize]) -> F2System {
    let n = base.num_vars();
    let lift = |row: &BitVector, offset: usize| {
        let mut out = BitVector::zeros(2 * n);
        for i in row.ones_iter() {
            out.set(offset + i, true);
        }
        out
    };
    let mut rows = Vec::with_capacity(2 * base.num_rows() + n);
    let mut rhs = Vec::with_capacity(rows.capacity());
    for offset in [0, n] {
        for (row, &b) in base.rows().iter().zip(base.rhs()) {
            rows.push(lift(row, offset));
            rhs.push(b);
        }
    }
    let mut in_c = vec![false; n];
    for &v in agree {
        in_c[v - 1] = true;
    }
    for i in (0..n).filter(|&i| !in_c[i]) {
        let mut row = BitVector::zeros(2 * n);
        row.set(i, true);
        row.set(n + i, true);
        rows.push(row);
        rhs.push(true);
    }
    F2System::new(2 * n, rows, rhs).expect("rows built at width 2n")
}

/// Encodes `A·x = 0` as an XOR formula: each row's support becomes a clause
/// with its highest-index literal negated.
pub fn evenset_to_xor(sys: &F2System) -> Result<XorFormula> {
    let mut clauses = Vec::with_capacity(sys.num_rows());
    for (i, row) in sys.rows().iter().enumerate() {
        let support: Vec<usize> = row.ones_iter().map(|j| j + 1).collect();
        let Some((&last, rest)) = support.split_last() else {
            return Err(Error::InvalidParams(format!("row {} is zero", i + 1)));
        };
        let mut lits: Vec<Literal> = rest.iter().map(|&v| Literal::pos(v)).collect();
        lits.push(Literal::neg(last));
        clauses.push(XorClause::from_literals(&lits)?);
    }
    XorFormula::new(sys.num_vars(), clauses)
}

/// Parses `rows cols`, then `rows` lines of `cols` bits, then an optional
/// `b` line with `rows` bits. Bits may be separated by spaces or not.
pub fn parse_matrix(input: &[u8]) -> std::result::Result<F2System, ParseError> {
    let lines = content_lines(input)?;
    let mut it = lines.iter().copied();
    let Some((hline, header)) = it.next() else {
        return Err(ParseError::new(
            1,
            ParseErrorKind::Header("missing `rows cols` line".into()),
        ));
    };
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, c] = dims.as_slice() else {
        return Err(ParseError::new(
            hline,
            ParseErrorKind::Header("expected `rows cols`".into()),
        ));
    };
    let (num_rows, num_cols) = (parse_count(r, hline)?, parse_count(c, hline)?);

    let mut rows = Vec::with_capacity(num_rows.min(1 << 16));
    let mut rhs = None;
    let mut last_line = hline;
    for (line, content) in it {
        last_line = line;
        if rhs.is_some() {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Malformed("content after the `b` line".into()),
            ));
        }
        if let Some(rest) = content.strip_prefix('b') {
            let bits = parse_bits(rest, num_rows, line)?;
            rhs = Some(bits.iter().collect::<Vec<bool>>());
            continue;
        }
        if rows.len() == num_rows {
            return Err(ParseError::new(
                line,
                ParseErrorKind::CountMismatch {
                    declared: num_rows,
                    found: num_rows + 1,
                },
            ));
        }
        rows.push(parse_bits(content, num_cols, line)?);
    }
    if rows.len() != num_rows {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::CountMismatch {
                declared: num_rows,
                found: rows.len(),
            },
        ));
    }
    let rhs = rhs.unwrap_or_else(|| vec![false; num_rows]);
    F2System::new(num_cols, rows, rhs)
        .map_err(|e| ParseError::new(last_line, ParseErrorKind::Malformed(e.to_string())))
}

fn parse_bits(
    text: &str,
    expected: usize,
    line: usize,
) -> std::result::Result<BitVector, ParseError> {
    let mut bits = Vec::with_capacity(expected);
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '0' => bits.push(false),
            '1' => bits.push(true),
            other => {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::Token(other.to_string()),
                ))
            }
        }
    }
    if bits.len() != expected {
        return Err(ParseError::new(
            line,
            ParseErrorKind::CountMismatch {
                declared: expected,
                found: bits.len(),
            },
        ));
    }
    Ok(BitVector::from_bools(bits))
}

/// Inverse of [`parse_matrix`]; the `b` line is omitted for homogeneous systems.
pub fn emit_matrix(sys: &F2System) -> String {
    let bits = |it: &mut dyn Iterator<Item = bool>| it.map(|b| if b { "1" } else { "0" }).join(" ");
    let mut out = String::new();
    writeln!(out, "{} {}", sys.num_rows(), sys.num_vars()).unwrap();
    for row in sys.rows() {
        writeln!(out, "{}", bits(&mut row.iter())).unwrap();
    }
    if sys.rhs().iter().any(|&b| b) {
        writeln!(out, "b {}", bits(&mut sys.rhs().iter().copied())).unwrap();
    }
    out
}

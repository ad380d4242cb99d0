//! Diverse pairs: the `n^O(d)` guessing algorithm for 2CNF, Horn and dual
//! Horn formulas, and the lattice algorithm for double Horn formulas.

use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formula::{classify, Assignment, CnfFormula};
use crate::sat::{
    double_horn_bounds, restrict, solve_2sat, solve_dual_horn, solve_horn, PartialAssignment,
    Restriction,
};

/// Work counters reported alongside a result.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// `(X′, α′)` guesses (or candidate sets) examined.
    pub guesses: u64,
    /// Branching nodes of the vertex-cover search.
    pub branches: u64,
}

/// Answer to a diverse/dissimilar pair query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiversePairResult {
    /// Two satisfying assignments, present iff the threshold is met.
    pub pair: Option<(Assignment, Assignment)>,
    /// Hamming distance of `pair`, or 0 when absent.
    pub distance: usize,
    pub stats: SearchStats,
}

impl DiversePairResult {
    pub fn found(&self) -> bool {
        self.pair.is_some()
    }

    pub(crate) fn not_found(stats: SearchStats) -> Self {
        Self {
            pair: None,
            distance: 0,
            stats,
        }
    }

    pub(crate) fn with_pair(a1: Assignment, a2: Assignment, stats: SearchStats) -> Self {
        let distance = a1.hamming(&a2).expect("pair assignments share a length");
        Self {
            pair: Some((a1, a2)),
            distance,
            stats,
        }
    }
}

/// Tractable class used to decide the restricted formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XpClass {
    TwoCnf,
    Horn,
    DualHorn,
}

impl XpClass {
    /// 2CNF first, then Horn, then dual Horn.
    pub fn detect(phi: &CnfFormula) -> Result<Self> {
        let c = classify(phi);
        if c.is_2cnf() {
            Ok(Self::TwoCnf)
        } else if c.horn {
            Ok(Self::Horn)
        } else if c.dual_horn {
            Ok(Self::DualHorn)
        } else {
            Err(Error::UnsupportedClass(format!(
                "diverse pair guessing needs 2CNF, Horn or dual Horn, got {c}"
            )))
        }
    }

    fn solve(self, phi: &CnfFormula) -> Result<Option<Assignment>> {
        match self {
            Self::TwoCnf => solve_2sat(phi),
            Self::Horn => solve_horn(phi),
            Self::DualHorn => solve_dual_horn(phi),
        }
    }
}

const CHUNK: usize = 512;

/// Decides whether `phi` has two satisfying assignments at distance `≥ d`.
///
/// Guesses a set `X′` of `d` variables and a pattern `α′` on it, fixes `α′`
/// in one copy and its complement in the other, and decides both restricted
/// formulas. Guesses are tried in lexicographic order and the first success
/// is returned; `α′` and `ᾱ′` give the same pair swapped, so only patterns
/// with the first variable of `X′` false are tried.
pub fn diverse_pair_xp(phi: &CnfFormula, d: usize) -> Result<DiversePairResult> {
    let class = XpClass::detect(phi)?;
    let n = phi.num_vars();
    let mut stats = SearchStats::default();
    if d > n {
        return Ok(DiversePairResult::not_found(stats));
    }
    let Some(base) = class.solve(phi)? else {
        return Ok(DiversePairResult::not_found(stats));
    };
    if d == 0 {
        return Ok(DiversePairResult::with_pair(base.clone(), base, stats));
    }
    if class == XpClass::TwoCnf {
        let other = solve_2sat(&phi.flip_polarity())?
            .expect("polarity flip preserves satisfiability")
            .complement();
        if base.hamming(&other)? >= d {
            return Ok(DiversePairResult::with_pair(base, other, stats));
        }
    }

    let guesses = AtomicU64::new(0);
    let mut subsets = (1..=n).combinations(d);
    loop {
        let chunk: Vec<Vec<usize>> = subsets.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let hit = chunk
            .par_iter()
            .map(|subset| try_subset(phi, class, subset, &guesses))
            .find_map_first(|r| r.transpose());
        if let Some(pair) = hit {
            let (a1, a2) = pair?;
            stats.guesses = guesses.into_inner();
            return Ok(DiversePairResult::with_pair(a1, a2, stats));
        }
    }
    stats.guesses = guesses.into_inner();
    Ok(DiversePairResult::not_found(stats))
}

fn try_subset(
    phi: &CnfFormula,
    class: XpClass,
    subset: &[usize],
    guesses: &AtomicU64,
) -> Result<Option<(Assignment, Assignment)>> {
    let n = phi.num_vars();
    let d = subset.len();
    // Pattern bits: subset[0] is the most significant, and it stays 0.
    for pattern in 0u64..(1u64 << (d - 1)) {
        guesses.fetch_add(1, Ordering::Relaxed);
        let pa = PartialAssignment::from_pairs(
            n,
            subset
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, pattern >> (d - 1 - i) & 1 == 1)),
        );
        let Some(a1) = solve_restricted(phi, class, &pa)? else {
            continue;
        };
        let co = pa.complement();
        let Some(a2) = solve_restricted(phi, class, &co)? else {
            continue;
        };
        return Ok(Some((a1, a2)));
    }
    Ok(None)
}

fn solve_restricted(
    phi: &CnfFormula,
    class: XpClass,
    pa: &PartialAssignment,
) -> Result<Option<Assignment>> {
    let Restriction::Formula(rest) = restrict(phi, pa) else {
        return Ok(None);
    };
    Ok(class.solve(&rest)?.map(|mut alpha| {
        for var in pa.domain() {
            alpha.set(var - 1, pa.get(var).unwrap());
        }
        alpha
    }))
}

/// Diverse pair for double Horn formulas: the least and greatest models
/// are the farthest pair, since every model lies between them.
pub fn diverse_pair_double_horn(phi: &CnfFormula, d: usize) -> Result<DiversePairResult> {
    let stats = SearchStats::default();
    let Some((lower, upper)) = double_horn_bounds(phi)? else {
        return Ok(DiversePairResult::not_found(stats));
    };
    if lower.hamming(&upper)? >= d {
        Ok(DiversePairResult::with_pair(lower, upper, stats))
    } else {
        Ok(DiversePairResult::not_found(stats))
    }
}

/// `k` models maximizing the sum of pairwise distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTupleResult {
    pub assignments: Vec<Assignment>,
    pub objective: u64,
}

/// Optimal `k`-tuple for a double Horn formula: `⌊k/2⌋` copies of the
/// least model followed by `⌈k/2⌉` copies of the greatest.
pub fn k_diverse_double_horn(phi: &CnfFormula, k: usize) -> Result<KTupleResult> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let (lower, upper) = double_horn_bounds(phi)?.ok_or(Error::Unsatisfiable)?;
    // A single assignment is the least solution.
    let low_count = if k == 1 { 1 } else { k / 2 };
    let mut assignments = vec![lower; low_count];
    assignments.extend(std::iter::repeat_n(upper, k - low_count));
    let objective = chain_objective(&assignments)?;
    Ok(KTupleResult {
        assignments,
        objective,
    })
}

/// Sum of pairwise distances of a chain `x₁ ≼ … ≼ x_k`, computed as
/// `Σᵢ (2i − k − 1)·|xᵢ|` (1-based `i`).
pub fn chain_objective(chain: &[Assignment]) -> Result<u64> {
    let k = chain.len() as i64;
    for pair in chain.windows(2) {
        if !pair[0].is_below(&pair[1])? {
            return Err(Error::ContractViolation("tuple is not a chain".into()));
        }
    }
    let total: i64 = chain
        .iter()
        .enumerate()
        .map(|(i, x)| (2 * (i as i64 + 1) - k - 1) * x.weight() as i64)
        .sum();
    Ok(total as u64)
}

pub use crate::formula::sum_pairwise_distance;

/// Replaces positions `i < j` (0-based) by their meet and join.
pub fn chain_uncross(tuple: &[Assignment], i: usize, j: usize) -> Result<Vec<Assignment>> {
    if j >= tuple.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            limit: tuple.len(),
        });
    }
    if i >= j {
        return Err(Error::IndexOutOfRange { index: i, limit: j });
    }
    let mut out = tuple.to_vec();
    out[i] = tuple[i].and(&tuple[j])?;
    out[j] = tuple[i].or(&tuple[j])?;
    Ok(out)
}

/// Uncrosses incomparable pairs until the tuple is a chain.
pub fn uncross_to_chain(tuple: &[Assignment]) -> Result<Vec<Assignment>> {
    let mut out = tuple.to_vec();
    // Each pass sorts like a bubble sort; meet/join never un-orders a pair.
    for end in (1..out.len()).rev() {
        for i in 0..end {
            if !out[i].is_below(&out[i + 1])? {
                out = chain_uncross(&out, i, i + 1)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;

    fn cnf(n: usize, clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(n, clauses).unwrap()
    }

    fn bv(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    fn bvs(items: &[&str]) -> Vec<Assignment> {
        items.iter().map(|s| bv(s)).collect()
    }

    #[test]
    fn xp_path_formula_reaches_full_distance() {
        // Solutions of (¬x1∨¬x2)∧(¬x2∨¬x3): 000 001 010 100 101; best pair 101/010.
        let phi = cnf(3, &[&[-1, -2], &[-2, -3]]);
        let r = diverse_pair_xp(&phi, 3).unwrap();
        let (a1, a2) = r.pair.clone().unwrap();
        assert_eq!(r.distance, 3);
        assert!(phi.eval(&a1).unwrap() && phi.eval(&a2).unwrap());
    }

    #[test]
    fn xp_threshold_above_n() {
        let phi = cnf(3, &[&[-1, -2]]);
        assert!(!diverse_pair_xp(&phi, 4).unwrap().found());
    }

    #[test]
    fn xp_unsat() {
        assert!(!diverse_pair_xp(&cnf(1, &[&[1], &[-1]]), 0).unwrap().found());
    }

    #[test]
    fn xp_horn_and_dual_horn_paths() {
        // Horn, width 3: (¬x1∨¬x2∨x3) ∧ x1 ⇒ solutions 100 101 111; max distance 2.
        let phi = cnf(3, &[&[-1, -2, 3], &[1]]);
        assert_eq!(XpClass::detect(&phi).unwrap(), XpClass::Horn);
        assert!(diverse_pair_xp(&phi, 2).unwrap().found());
        assert!(!diverse_pair_xp(&phi, 3).unwrap().found());
        let dual = phi.flip_polarity();
        assert_eq!(XpClass::detect(&dual).unwrap(), XpClass::DualHorn);
        assert!(diverse_pair_xp(&dual, 2).unwrap().found());
        assert!(!diverse_pair_xp(&dual, 3).unwrap().found());
    }

    #[test]
    fn xp_rejects_general_cnf() {
        let phi = cnf(3, &[&[1, 2, 3], &[-1, -2, -3]]);
        assert!(matches!(
            diverse_pair_xp(&phi, 1),
            Err(Error::UnsupportedClass(_))
        ));
    }

    #[test]
    fn double_horn_pair() {
        let phi = cnf(2, &[&[1, -2], &[-1, 2]]);
        let r = diverse_pair_double_horn(&phi, 2).unwrap();
        assert_eq!(r.pair, Some((bv("00"), bv("11"))));
        assert!(!diverse_pair_double_horn(&phi, 3).unwrap().found());
        let forced = cnf(2, &[&[1, -2], &[-1, 2], &[1]]);
        assert!(!diverse_pair_double_horn(&forced, 1).unwrap().found());
    }

    #[test]
    fn k_tuples() {
        let phi = cnf(2, &[&[1, -2], &[-1, 2]]);
        let r = k_diverse_double_horn(&phi, 3).unwrap();
        assert_eq!(r.assignments, bvs(&["00", "11", "11"]));
        assert_eq!(r.objective, 4);
        let r = k_diverse_double_horn(&phi, 1).unwrap();
        assert_eq!((r.assignments, r.objective), (bvs(&["00"]), 0));
        assert_eq!(k_diverse_double_horn(&phi, 2).unwrap().objective, 2);
        assert!(k_diverse_double_horn(&phi, 0).is_err());
        assert_eq!(
            k_diverse_double_horn(&cnf(1, &[&[1], &[-1]]), 2),
            Err(Error::Unsatisfiable)
        );
    }

    #[test]
    fn uncross_examples() {
        assert_eq!(
            chain_uncross(&bvs(&["01", "10"]), 0, 1).unwrap(),
            bvs(&["00", "11"])
        );
        assert_eq!(
            chain_uncross(&bvs(&["00", "11"]), 0, 1).unwrap(),
            bvs(&["00", "11"])
        );
        assert_eq!(
            chain_uncross(&bvs(&["011", "101", "110"]), 0, 2).unwrap(),
            bvs(&["010", "101", "111"])
        );
        assert!(chain_uncross(&bvs(&["01", "10"]), 1, 1).is_err());
        assert!(chain_uncross(&bvs(&["01", "10"]), 0, 2).is_err());
    }

    #[test]
    fn uncross_to_chain_keeps_objective() {
        let t = bvs(&["0110", "1010", "0001", "1100"]);
        let chain = uncross_to_chain(&t).unwrap();
        assert_eq!(
            sum_pairwise_distance(&t).unwrap(),
            sum_pairwise_distance(&chain).unwrap()
        );
        assert_eq!(
            chain_objective(&chain).unwrap(),
            sum_pairwise_distance(&chain).unwrap()
        );
    }

    #[test]
    fn chain_objective_rejects_antichain() {
        assert!(chain_objective(&bvs(&["01", "10"])).is_err());
    }
}

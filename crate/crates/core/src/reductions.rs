//! Hardness gadgets (set splitting, independent sets) and seeded random
//! instance generators.
//!
//! Generators draw from ChaCha8 so a seed reproduces the same instance on
//! every platform.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::formula::dimacs::{content_lines, parse_count, parse_header};
use crate::formula::{Assignment, Clause, CnfFormula, Literal, XorClause, XorFormula};
use crate::graph::Graph;

const MAX_REDRAWS: usize = 1000;

/// Largest set size accepted in a [`SetSystem`].
pub const MAX_SET_SIZE: usize = 3;

/// Subsets of `1..=universe_size`, each of size 1 to 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    universe_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Sorts and dedups each set.
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(sets.len());
        for mut set in sets {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() || set.len() > MAX_SET_SIZE {
                return Err(Error::InvalidParams(format!(
                    "set sizes must be in 1..={MAX_SET_SIZE}, got {}",
                    set.len()
                )));
            }
            if let Some(&bad) = set.iter().find(|&&e| e == 0 || e > universe_size) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    limit: universe_size,
                });
            }
            out.push(set);
        }
        Ok(Self {
            universe_size,
            sets: out,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Whether `side` (bit `e - 1` for element `e`) splits every set.
    pub fn is_split_by(&self, side: &Assignment) -> bool {
        self.sets.iter().all(|set| {
            let first = side.var(set[0]);
            set.iter().any(|&e| side.var(e) != first)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Only negative literals.
    Antimonotone,
    /// Only positive literals.
    Monotone,
}

impl Polarity {
    fn literal(self, var: usize) -> Literal {
        match self {
            Polarity::Antimonotone => Literal::neg(var),
            Polarity::Monotone => Literal::pos(var),
        }
    }
}

/// One clause per set over the set's elements.
pub fn set_splitting_to_cnf(ss: &SetSystem, polarity: Polarity) -> CnfFormula {
    let clauses = ss
        .sets
        .iter()
        .map(|set| Clause::new(set.iter().map(|&e| polarity.literal(e)).collect()))
        .collect::<Result<Vec<_>>>()
        .expect("sets are nonempty");
    CnfFormula::new(ss.universe_size, clauses).expect("elements are in range")
}

/// One clause per edge; vertex `v` becomes variable `v + 1`.
pub fn graph_to_2cnf(g: &Graph, polarity: Polarity) -> CnfFormula {
    let clauses = g
        .edges()
        .iter()
        .map(|&(u, v)| Clause::new(vec![polarity.literal(u + 1), polarity.literal(v + 1)]))
        .collect::<Result<Vec<_>>>()
        .expect("edges have two endpoints");
    CnfFormula::new(g.num_vertices(), clauses).expect("endpoints are in range")
}

/// Characteristic vector of a 1-based subset of `1..=n`.
pub fn indicator_assignment(subset: &[usize], n: usize) -> Result<Assignment> {
    let mut alpha = Assignment::zeros(n);
    for &v in subset {
        if v == 0 || v > n {
            return Err(Error::IndexOutOfRange { index: v, limit: n });
        }
        alpha.set(v - 1, true);
    }
    Ok(alpha)
}

/// Parses an optional `p sets U F` header followed by one set per line.
/// Without a header the universe is the largest element seen.
pub fn parse_set_system(input: &[u8]) -> std::result::Result<SetSystem, ParseError> {
    let lines = content_lines(input)?;
    let mut body = &lines[..];
    let mut declared = None;
    if let Some(&(line, content)) = lines.first() {
        if content.starts_with('p') {
            declared = Some((line, parse_header(line, content, "sets")?));
            body = &lines[1..];
        }
    }
    let mut sets = Vec::with_capacity(body.len());
    let mut last_line = declared.map_or(1, |(l, _)| l);
    for &(line, content) in body {
        last_line = line;
        let set = content
            .split_whitespace()
            .map(|tok| parse_count(tok, line))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if set.is_empty() || set.len() > MAX_SET_SIZE {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Malformed(format!("set of size {}", set.len())),
            ));
        }
        if let Some(&(_, (universe, _))) = declared.as_ref() {
            if let Some(&bad) = set.iter().find(|&&e| e == 0 || e > universe) {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::OutOfRange {
                        index: bad as u64,
                        max: universe,
                    },
                ));
            }
        } else if set.contains(&0) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::OutOfRange { index: 0, max: 0 },
            ));
        }
        sets.push(set);
    }
    let universe = match declared {
        Some((_, (universe, count))) => {
            if count != sets.len() {
                return Err(ParseError::new(
                    last_line,
                    ParseErrorKind::CountMismatch {
                        declared: count,
                        found: sets.len(),
                    },
                ));
            }
            universe
        }
        None => sets.iter().flatten().copied().max().unwrap_or(0),
    };
    SetSystem::new(universe, sets)
        .map_err(|e| ParseError::new(last_line, ParseErrorKind::Malformed(e.to_string())))
}

pub fn emit_set_system(ss: &SetSystem) -> String {
    let mut out = String::new();
    writeln!(out, "p sets {} {}", ss.universe_size, ss.sets.len()).unwrap();
    for set in &ss.sets {
        let items: Vec<String> = set.iter().map(usize::to_string).collect();
        writeln!(out, "{}", items.join(" ")).unwrap();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    TwoCnf,
    Horn,
    DualHorn,
    DoubleHorn,
    Xor,
    Graph,
    SetSystem,
}

impl std::str::FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "2cnf" => InstanceKind::TwoCnf,
            "horn" => InstanceKind::Horn,
            "dual_horn" => InstanceKind::DualHorn,
            "double_horn" => InstanceKind::DoubleHorn,
            "xor" => InstanceKind::Xor,
            "graph" => InstanceKind::Graph,
            "set_system" | "sets" => InstanceKind::SetSystem,
            _ => return Err(Error::InvalidParams(format!("unknown instance kind {s:?}"))),
        })
    }
}

/// Size knobs for [`random_instance`]. For graphs `num_clauses` is the edge
/// count, for set systems the number of sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub num_vars: usize,
    pub num_clauses: usize,
    /// Widest clause (or set) drawn; 2CNF and double Horn ignore it.
    pub max_width: usize,
    /// Draw a hidden assignment and keep only clauses it satisfies, so
    /// formulas are satisfiable by construction.
    pub planted: bool,
}

impl GenParams {
    pub fn new(num_vars: usize, num_clauses: usize) -> Self {
        Self {
            num_vars,
            num_clauses,
            max_width: 3,
            planted: false,
        }
    }

    pub fn planted(self) -> Self {
        Self {
            planted: true,
            ..self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Cnf(CnfFormula),
    Xor(XorFormula),
    Graph(Graph),
    Sets(SetSystem),
}

/// Deterministic random instance of the requested kind.
pub fn random_instance(kind: InstanceKind, params: GenParams, seed: u64) -> Result<Instance> {
    let GenParams {
        num_vars: n,
        num_clauses: m,
        max_width,
        ..
    } = params;
    if n == 0 && m > 0 {
        return Err(Error::InvalidParams(
            "clauses need at least one variable".into(),
        ));
    }
    if max_width == 0
        && matches!(
            kind,
            InstanceKind::Horn
                | InstanceKind::DualHorn
                | InstanceKind::Xor
                | InstanceKind::SetSystem
        )
    {
        return Err(Error::InvalidParams("max_width must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    let hidden: Option<Vec<bool>> = params.planted.then(|| (0..n).map(|_| rng.gen()).collect());
    let satisfies = |lits: &[Literal]| {
        hidden
            .as_ref()
            .is_none_or(|h| lits.iter().any(|l| h[l.var() - 1] != l.is_negated()))
    };
    let draw_clauses = |rng: &mut ChaCha8Rng, draw: &dyn Fn(&mut ChaCha8Rng) -> Vec<Literal>| {
        (0..m)
            .map(|_| {
                for _ in 0..MAX_REDRAWS {
                    let lits = draw(rng);
                    if satisfies(&lits) {
                        return Ok(lits);
                    }
                }
                Err(Error::InvalidParams(
                    "no clause of this shape agrees with the planted assignment".into(),
                ))
            })
            .collect::<Result<Vec<_>>>()
    };
    Ok(match kind {
        InstanceKind::TwoCnf => {
            let clauses = draw_clauses(rng, &|rng| {
                let width = if n >= 2 && rng.gen_bool(0.85) { 2 } else { 1 };
                random_vars(rng, n, width)
                    .into_iter()
                    .map(|v| Literal::new(v, rng.gen()))
                    .collect()
            })?;
            Instance::Cnf(cnf(n, clauses)?)
        }
        InstanceKind::Horn | InstanceKind::DualHorn => {
            // Dual Horn clauses are Horn clauses with every sign flipped.
            let dual = kind == InstanceKind::DualHorn;
            let clauses = draw_clauses(rng, &|rng| {
                let width = rng.gen_range(1..=max_width.min(n));
                let vars = random_vars(rng, n, width);
                let special = rng.gen_bool(0.5).then(|| rng.gen_range(0..width));
                vars.into_iter()
                    .enumerate()
                    .map(|(i, v)| Literal::new(v, (Some(i) != special) != dual))
                    .collect()
            })?;
            Instance::Cnf(cnf(n, clauses)?)
        }
        InstanceKind::DoubleHorn => {
            let clauses = draw_clauses(rng, &|rng| {
                if n < 2 || rng.gen_bool(0.2) {
                    vec![Literal::new(rng.gen_range(1..=n), rng.gen())]
                } else {
                    let vars = random_vars(rng, n, 2);
                    let (a, b) = if rng.gen() {
                        (vars[0], vars[1])
                    } else {
                        (vars[1], vars[0])
                    };
                    vec![Literal::pos(a), Literal::neg(b)]
                }
            })?;
            Instance::Cnf(cnf(n, clauses)?)
        }
        InstanceKind::Xor => {
            let clauses = (0..m)
                .map(|_| {
                    let width = rng.gen_range(1..=max_width.min(n));
                    let vars = random_vars(rng, n, width);
                    let rhs = match &hidden {
                        Some(h) => vars.iter().fold(false, |acc, &v| acc ^ h[v - 1]),
                        None => rng.gen(),
                    };
                    XorClause::new(vars, rhs)
                })
                .collect::<Result<Vec<_>>>()?;
            Instance::Xor(XorFormula::new(n, clauses)?)
        }
        InstanceKind::Graph => {
            let pairs = n * n.saturating_sub(1) / 2;
            if m > pairs {
                return Err(Error::InvalidParams(format!(
                    "{m} edges requested on {n} vertices (at most {pairs})"
                )));
            }
            let all: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let picked = sample(rng, pairs, m).into_iter().map(|i| all[i]);
            Instance::Graph(Graph::new(n, picked)?)
        }
        InstanceKind::SetSystem => {
            let sets = (0..m)
                .map(|_| {
                    let width = rng.gen_range(1..=max_width.min(n).min(MAX_SET_SIZE));
                    random_vars(rng, n, width)
                })
                .collect();
            Instance::Sets(SetSystem::new(n, sets)?)
        }
    })
}

/// `width` distinct 1-based variables in increasing order.
fn random_vars(rng: &mut ChaCha8Rng, n: usize, width: usize) -> Vec<usize> {
    let mut vars: Vec<usize> = sample(rng, n, width).into_iter().map(|i| i + 1).collect();
    vars.sort_unstable();
    vars
}

fn cnf(n: usize, clauses: Vec<Vec<Literal>>) -> Result<CnfFormula> {
    let clauses = clauses
        .into_iter()
        .map(Clause::new)
        .collect::<Result<_>>()?;
    CnfFormula::new(n, clauses)
}

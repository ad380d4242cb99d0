//! CNF and XOR formulas, class recognition and evaluation.

mod assignment;
pub mod dimacs;

use std::fmt;

pub use assignment::{hamming, sum_pairwise_distance, Assignment, BitVector};

use crate::error::{Error, Result};

/// A variable (1-based) or its negation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: usize,
    negated: bool,
}

impl Literal {
    pub fn new(var: usize, negated: bool) -> Self {
        assert!(var >= 1, "variables are 1-based");
        Self { var, negated }
    }

    pub fn pos(var: usize) -> Self {
        Self::new(var, false)
    }

    pub fn neg(var: usize) -> Self {
        Self::new(var, true)
    }

    /// Signed DIMACS encoding; `0` is rejected.
    pub fn from_dimacs(lit: i64) -> Option<Self> {
        (lit != 0).then(|| Self::new(lit.unsigned_abs() as usize, lit < 0))
    }

    pub fn to_dimacs(self) -> i64 {
        if self.negated {
            -(self.var as i64)
        } else {
            self.var as i64
        }
    }

    pub fn var(self) -> usize {
        self.var
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn is_positive(self) -> bool {
        !self.negated
    }

    pub fn negate(self) -> Self {
        Self {
            var: self.var,
            negated: !self.negated,
        }
    }

    /// Truth value under `alpha`.
    #[inline]
    pub fn eval(self, alpha: &Assignment) -> bool {
        alpha.var(self.var) != self.negated
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// Disjunction of one or more literals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Result<Self> {
        if literals.is_empty() {
            return Err(Error::InvalidParams("empty clause".into()));
        }
        Ok(Self { literals })
    }

    pub fn from_dimacs(lits: &[i64]) -> Result<Self> {
        let literals = lits
            .iter()
            .map(|&l| {
                Literal::from_dimacs(l).ok_or_else(|| Error::InvalidParams("literal 0".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(literals)
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    /// Number of literal occurrences as written.
    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    /// Distinct literals in first-occurrence order.
    pub fn distinct_literals(&self) -> Vec<Literal> {
        let mut out: Vec<Literal> = Vec::with_capacity(self.literals.len());
        for &l in &self.literals {
            if !out.contains(&l) {
                out.push(l);
            }
        }
        out
    }

    pub fn is_tautology(&self) -> bool {
        self.literals
            .iter()
            .any(|l| self.literals.contains(&l.negate()))
    }

    pub fn eval(&self, alpha: &Assignment) -> bool {
        self.literals.iter().any(|l| l.eval(alpha))
    }
}

/// Conjunction of clauses over variables `1..=num_vars`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        for c in &clauses {
            for l in c.literals() {
                if l.var() > num_vars {
                    return Err(Error::IndexOutOfRange {
                        index: l.var(),
                        limit: num_vars,
                    });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// Builds a formula from signed DIMACS literals, e.g. `&[&[1, -2]]`.
    pub fn from_dimacs_clauses(num_vars: usize, clauses: &[&[i64]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| Clause::from_dimacs(c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(num_vars, clauses)
    }

    pub fn empty(num_vars: usize) -> Self {
        Self {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn into_clauses(self) -> Vec<Clause> {
        self.clauses
    }

    /// Every literal negated. Maps Horn to dual Horn and solutions `α` to `ᾱ`.
    pub fn flip_polarity(&self) -> Self {
        Self {
            num_vars: self.num_vars,
            clauses: self
                .clauses
                .iter()
                .map(|c| Clause {
                    literals: c.literals.iter().map(|l| l.negate()).collect(),
                })
                .collect(),
        }
    }

    pub fn classify(&self) -> FormulaClassSet {
        classify(self)
    }
}

/// Parity constraint: XOR of `vars` equals `rhs`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XorClause {
    vars: Vec<usize>,
    rhs: bool,
}

impl XorClause {
    /// Canonicalizes: sorts variables and cancels equal pairs.
    pub fn new(vars: impl IntoIterator<Item = usize>, rhs: bool) -> Result<Self> {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        if vars.contains(&0) {
            return Err(Error::InvalidParams("variables are 1-based".into()));
        }
        vars.sort_unstable();
        let mut canon: Vec<usize> = Vec::with_capacity(vars.len());
        for v in vars {
            if canon.last() == Some(&v) {
                canon.pop();
            } else {
                canon.push(v);
            }
        }
        if canon.is_empty() {
            return Err(Error::InvalidParams(
                "xor clause cancels to no variables".into(),
            ));
        }
        Ok(Self { vars: canon, rhs })
    }

    /// From literals whose XOR must be true; each negation flips the parity.
    pub fn from_literals(lits: &[Literal]) -> Result<Self> {
        let rhs = lits.iter().fold(true, |acc, l| acc ^ l.is_negated());
        Self::new(lits.iter().map(|l| l.var()), rhs)
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn rhs(&self) -> bool {
        self.rhs
    }

    pub fn eval(&self, alpha: &Assignment) -> bool {
        self.vars.iter().fold(false, |acc, &v| acc ^ alpha.var(v)) == self.rhs
    }
}

/// Conjunction of XOR clauses.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XorFormula {
    num_vars: usize,
    clauses: Vec<XorClause>,
}

impl XorFormula {
    pub fn new(num_vars: usize, clauses: Vec<XorClause>) -> Result<Self> {
        for c in &clauses {
            if let Some(&v) = c.vars.last() {
                if v > num_vars {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        limit: num_vars,
                    });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[XorClause] {
        &self.clauses
    }
}

/// Common evaluation surface of CNF and XOR formulas.
pub trait Formula {
    fn num_vars(&self) -> usize;

    /// Whether `alpha` satisfies every clause.
    fn eval(&self, alpha: &Assignment) -> Result<bool>;
}

fn check_assignment_len(n: usize, alpha: &Assignment) -> Result<()> {
    if alpha.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: alpha.len(),
        });
    }
    Ok(())
}

impl Formula for CnfFormula {
    fn num_vars(&self) -> usize {
        self.num_vars
    }

    fn eval(&self, alpha: &Assignment) -> Result<bool> {
        check_assignment_len(self.num_vars, alpha)?;
        Ok(self.clauses.iter().all(|c| c.eval(alpha)))
    }
}

impl Formula for XorFormula {
    fn num_vars(&self) -> usize {
        self.num_vars
    }

    fn eval(&self, alpha: &Assignment) -> Result<bool> {
        check_assignment_len(self.num_vars, alpha)?;
        Ok(self.clauses.iter().all(|c| c.eval(alpha)))
    }
}

/// Syntactic class flags of a CNF formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct FormulaClassSet {
    pub max_clause_width: usize,
    pub horn: bool,
    pub dual_horn: bool,
    pub double_horn: bool,
    pub monotone: bool,
    pub antimonotone: bool,
}

impl FormulaClassSet {
    pub fn is_2cnf(&self) -> bool {
        self.max_clause_width <= 2
    }

    /// Space-separated tags, e.g. `2cnf antimonotone horn`.
    pub fn tags(&self) -> Vec<String> {
        let mut tags = vec![format!("{}cnf", self.max_clause_width)];
        let flags = [
            (self.monotone, "monotone"),
            (self.antimonotone, "antimonotone"),
            (self.horn, "horn"),
            (self.dual_horn, "dual-horn"),
            (self.double_horn, "double-horn"),
        ];
        tags.extend(
            flags
                .iter()
                .filter(|(on, _)| *on)
                .map(|(_, t)| t.to_string()),
        );
        tags
    }
}

impl fmt::Display for FormulaClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tags().join(" "))
    }
}

/// Computes every class flag in one pass over the clauses.
///
/// Clauses are read as literal sets: a repeated literal such as the two
/// halves of `(x ∨ x)` counts once toward the width and the polarity counts.
pub fn classify(phi: &CnfFormula) -> FormulaClassSet {
    let mut set = FormulaClassSet {
        max_clause_width: 0,
        horn: true,
        dual_horn: true,
        double_horn: true,
        monotone: true,
        antimonotone: true,
    };
    for clause in phi.clauses() {
        let lits = clause.distinct_literals();
        let pos = lits.iter().filter(|l| l.is_positive()).count();
        let neg = lits.len() - pos;
        set.max_clause_width = set.max_clause_width.max(lits.len());
        set.horn &= pos <= 1;
        set.dual_horn &= neg <= 1;
        set.monotone &= neg == 0;
        set.antimonotone &= pos == 0;
    }
    set.double_horn = set.horn && set.dual_horn;
    set
}

/// Evaluates a CNF or XOR formula.
pub fn eval<F: Formula + ?Sized>(phi: &F, alpha: &Assignment) -> Result<bool> {
    phi.eval(alpha)
}

use crate::formula::{Clause, CnfFormula, Literal};

/// Truth values for a subset of the variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialAssignment {
    values: Vec<Option<bool>>,
}

impl PartialAssignment {
    pub fn new(num_vars: usize) -> Self {
        Self {
            values: vec![None; num_vars],
        }
    }

    pub fn from_pairs(num_vars: usize, pairs: impl IntoIterator<Item = (usize, bool)>) -> Self {
        let mut pa = Self::new(num_vars);
        for (var, value) in pairs {
            pa.set(var, value);
        }
        pa
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    /// Sets the 1-based variable `var`.
    pub fn set(&mut self, var: usize, value: bool) {
        self.values[var - 1] = Some(value);
    }

    pub fn get(&self, var: usize) -> Option<bool> {
        self.values.get(var.wrapping_sub(1)).copied().flatten()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|_| i + 1))
    }

    /// Every assigned value flipped.
    pub fn complement(&self) -> Self {
        Self {
            values: self.values.iter().map(|v| v.map(|b| !b)).collect(),
        }
    }

    fn eval(&self, l: Literal) -> Option<bool> {
        self.get(l.var()).map(|b| b != l.is_negated())
    }
}

/// Outcome of fixing variables in a formula.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Restriction {
    /// Residual formula over the same variable indices.
    Formula(CnfFormula),
    /// Some clause had all its literals falsified.
    Unsat,
}

/// Simplifies `phi` under `pa`: satisfied clauses are dropped and falsified
/// literals deleted. Never produces an empty clause; a clause that would
/// become empty makes the result [`Restriction::Unsat`].
pub fn restrict(phi: &CnfFormula, pa: &PartialAssignment) -> Restriction {
    let mut clauses = Vec::with_capacity(phi.num_clauses());
    for clause in phi.clauses() {
        let mut kept = Vec::with_capacity(clause.len());
        let mut satisfied = false;
        for &l in clause.literals() {
            match pa.eval(l) {
                Some(true) => {
                    satisfied = true;
                    break;
                }
                Some(false) => {}
                None => kept.push(l),
            }
        }
        if satisfied {
            continue;
        }
        match Clause::new(kept) {
            Ok(c) => clauses.push(c),
            Err(_) => return Restriction::Unsat,
        }
    }
    Restriction::Formula(
        CnfFormula::new(phi.num_vars(), clauses).expect("restriction keeps variable indices"),
    )
}

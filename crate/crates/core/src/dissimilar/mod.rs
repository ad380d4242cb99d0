//! Dissimilar pairs of 2CNF solutions.
//!
//! The formula is doubled into `φ ∧ φ′` over fresh copies `y` of the
//! variables and joined by asynchronous clauses `(xᵢ ∨ yᵢ) ∧ (¬xᵢ ∨ ¬yᵢ)`.
//! Two solutions within distance `n − s` of each other exist iff at most
//! `s` asynchronous clauses need deleting, which is decided by vertex cover
//! above a perfect matching on the gadget graph.

mod gadget;
mod vertex_cover;

pub use gadget::{
    build_gadget_graph, extract_assignment, EdgeKind, GadgetGraph, GadgetVertex, OccurrenceIndex,
};
pub use vertex_cover::{lp_relaxation, vc_above_lp, CoverResult, HalfIntegralLp};

use crate::diverse::{DiversePairResult, SearchStats};
use crate::error::{Error, Result};
use crate::formula::{classify, Assignment, Clause, CnfFormula, Literal};
use crate::sat::solve_2sat;

/// `φ*` together with the indices of its asynchronous clauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsyncInstance {
    /// Variables `1..=n` are the `x`s, `n+1..=2n` the `y`s.
    pub phi_star: CnfFormula,
    /// Sorted indices of the asynchronous clauses in `phi_star`.
    pub soft: Vec<usize>,
    pub n: usize,
}

/// Soft clauses to delete and a model of what remains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftDeletion {
    pub deleted: Vec<usize>,
    pub beta: Assignment,
}

fn require_2cnf(phi: &CnfFormula) -> Result<()> {
    if classify(phi).is_2cnf() {
        Ok(())
    } else {
        Err(Error::UnsupportedClass(format!(
            "expected a 2CNF formula, got clause width {}",
            classify(phi).max_clause_width
        )))
    }
}

pub fn build_async_formula(phi: &CnfFormula) -> Result<AsyncInstance> {
    require_2cnf(phi)?;
    let n = phi.num_vars();
    let mut clauses: Vec<Clause> = phi.clauses().to_vec();
    let shift = |l: &Literal| Literal::new(l.var() + n, l.is_negated());
    for c in phi.clauses() {
        clauses.push(Clause::new(c.literals().iter().map(shift).collect())?);
    }
    let mut soft = Vec::with_capacity(2 * n);
    for i in 1..=n {
        soft.push(clauses.len());
        clauses.push(Clause::new(vec![Literal::pos(i), Literal::pos(i + n)])?);
        soft.push(clauses.len());
        clauses.push(Clause::new(vec![Literal::neg(i), Literal::neg(i + n)])?);
    }
    Ok(AsyncInstance {
        phi_star: CnfFormula::new(2 * n, clauses)?,
        soft,
        n,
    })
}

/// Almost 2SAT with hard constraints: delete at most `s` clauses from
/// `soft` so that `phi` becomes satisfiable.
pub fn delete_soft_clauses(
    phi: &CnfFormula,
    soft: &[usize],
    s: usize,
) -> Result<Option<SoftDeletion>> {
    Ok(search_deletions(phi, soft, s)?.0)
}

/// Also returns the number of vertex-cover search nodes.
fn search_deletions(
    phi: &CnfFormula,
    soft: &[usize],
    s: usize,
) -> Result<(Option<SoftDeletion>, u64)> {
    let g = build_gadget_graph(phi, soft, s)?;
    let outcome = vc_above_lp(&g.to_graph(), g.budget());
    let Some(cover) = outcome.cover else {
        return Ok((None, outcome.branches));
    };
    let (beta, deleted) = extract_assignment(&cover, &g)?;
    Ok((Some(SoftDeletion { deleted, beta }), outcome.branches))
}

/// At most `s` asynchronous clauses whose removal makes `φ*` satisfiable.
pub fn min_soft_deletions(inst: &AsyncInstance, s: usize) -> Result<Option<SoftDeletion>> {
    delete_soft_clauses(&inst.phi_star, &inst.soft, s.min(inst.soft.len()))
}

/// Two solutions at Hamming distance at least `n − s`; `s > n` acts as `s = n`.
pub fn dissimilar_pair_2sat(phi: &CnfFormula, s: usize) -> Result<DiversePairResult> {
    require_2cnf(phi)?;
    let n = phi.num_vars();
    let s = s.min(n);
    if solve_2sat(phi)?.is_none() {
        return Ok(DiversePairResult::not_found(SearchStats::default()));
    }
    let inst = build_async_formula(phi)?;
    let (found, branches) = search_deletions(&inst.phi_star, &inst.soft, s)?;
    let stats = SearchStats {
        guesses: 1,
        branches,
    };
    let Some(found) = found else {
        return Ok(DiversePairResult::not_found(stats));
    };
    let a1 = found.beta.slice(0, n);
    let a2 = found.beta.slice(n, n);
    debug_assert!(a1.hamming(&a2)? + s >= n);
    Ok(DiversePairResult::with_pair(a1, a2, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::eval;

    fn cnf(n: usize, clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(n, clauses).unwrap()
    }

    #[test]
    fn async_formula_layout() {
        let inst = build_async_formula(&cnf(2, &[&[1, 2]])).unwrap();
        let expected = cnf(
            4,
            &[&[1, 2], &[3, 4], &[1, 3], &[-1, -3], &[2, 4], &[-2, -4]],
        );
        assert_eq!(inst.phi_star, expected);
        assert_eq!(inst.soft, vec![2, 3, 4, 5]);
        assert!(eval(&inst.phi_star, &"0110".parse().unwrap()).unwrap());

        let empty = build_async_formula(&CnfFormula::empty(0)).unwrap();
        assert_eq!(empty.phi_star.num_clauses(), 0);
        assert!(empty.soft.is_empty());
        assert!(build_async_formula(&cnf(3, &[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn soft_deletion_examples() {
        let inst = build_async_formula(&cnf(2, &[&[-1, -2]])).unwrap();
        let d = min_soft_deletions(&inst, 0).unwrap().unwrap();
        assert!(d.deleted.is_empty());
        assert!(eval(&inst.phi_star, &d.beta).unwrap());

        let inst = build_async_formula(&cnf(2, &[&[1], &[2]])).unwrap();
        assert!(min_soft_deletions(&inst, 0).unwrap().is_none());
        assert!(min_soft_deletions(&inst, 1).unwrap().is_none());
        let d = min_soft_deletions(&inst, 2).unwrap().unwrap();
        assert_eq!(d.deleted.len(), 2);
        assert_eq!(d.beta, "1111".parse().unwrap());
    }

    #[test]
    fn pair_examples() {
        let r = dissimilar_pair_2sat(&cnf(2, &[&[-1, -2]]), 0).unwrap();
        let (a, b) = r.pair.unwrap();
        assert_eq!(r.distance, 2);
        let mut pair = [a.to_string(), b.to_string()];
        pair.sort();
        assert_eq!(pair, ["01", "10"]);

        let forced = cnf(2, &[&[1], &[2]]);
        assert!(!dissimilar_pair_2sat(&forced, 0).unwrap().found());
        let r = dissimilar_pair_2sat(&forced, 2).unwrap();
        assert_eq!(
            r.pair.unwrap(),
            ("11".parse().unwrap(), "11".parse().unwrap())
        );
        assert!(dissimilar_pair_2sat(&forced, 9).unwrap().found());

        let unsat = cnf(1, &[&[1], &[-1]]);
        for s in 0..3 {
            assert!(!dissimilar_pair_2sat(&unsat, s).unwrap().found());
        }
    }

    #[test]
    fn sample_gadget_covers_at_matching_size() {
        let phi = cnf(4, &[&[1, -2], &[2, 3], &[3, -4]]);
        let g = build_gadget_graph(&phi, &[1, 2], 1).unwrap();
        assert!(vc_above_lp(&g.to_graph(), 12).found());
        assert!(!vc_above_lp(&g.to_graph(), 11).found());
    }
}

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::formula::{classify, Assignment, CnfFormula};

/// Least model of a Horn formula by forward chaining.
///
/// Every variable starts false. A clause whose body (negative literals) is
/// entirely true fires: its head becomes true, or, with no head, the formula
/// is unsatisfiable. Fired clauses are processed in FIFO order of clause index.
pub fn solve_horn(phi: &CnfFormula) -> Result<Option<Assignment>> {
    if !classify(phi).horn {
        return Err(Error::UnsupportedClass(
            "Horn solver needs at most one positive literal per clause".into(),
        ));
    }
    let n = phi.num_vars();
    let mut heads: Vec<Option<usize>> = Vec::with_capacity(phi.num_clauses());
    let mut pending: Vec<usize> = Vec::with_capacity(phi.num_clauses());
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut queue = VecDeque::new();

    for (ci, clause) in phi.clauses().iter().enumerate() {
        let lits = clause.distinct_literals();
        let tautology = clause.is_tautology();
        let head = lits.iter().find(|l| l.is_positive()).map(|l| l.var());
        let mut body = 0;
        if !tautology {
            for l in lits.iter().filter(|l| l.is_negated()) {
                watchers[l.var()].push(ci);
                body += 1;
            }
        }
        heads.push(head);
        pending.push(body);
        if !tautology && body == 0 {
            queue.push_back(ci);
        }
    }

    let mut model = Assignment::zeros(n);
    while let Some(ci) = queue.pop_front() {
        let Some(h) = heads[ci] else {
            return Ok(None);
        };
        if model.var(h) {
            continue;
        }
        model.set(h - 1, true);
        for &cj in &watchers[h] {
            pending[cj] -= 1;
            if pending[cj] == 0 {
                queue.push_back(cj);
            }
        }
    }
    Ok(Some(model))
}

/// Greatest model of a dual Horn formula.
pub fn solve_dual_horn(phi: &CnfFormula) -> Result<Option<Assignment>> {
    if !classify(phi).dual_horn {
        return Err(Error::UnsupportedClass(
            "dual Horn solver needs at most one negative literal per clause".into(),
        ));
    }
    Ok(solve_horn(&phi.flip_polarity())?.map(|m| m.complement()))
}

/// Least and greatest models `(l*, u*)` of a double Horn formula.
pub fn double_horn_bounds(phi: &CnfFormula) -> Result<Option<(Assignment, Assignment)>> {
    if !classify(phi).double_horn {
        return Err(Error::UnsupportedClass("formula is not double Horn".into()));
    }
    let Some(lower) = solve_horn(phi)? else {
        return Ok(None);
    };
    let upper = solve_dual_horn(phi)?.expect("Horn and dual Horn solvers agree on satisfiability");
    Ok(Some((lower, upper)))
}

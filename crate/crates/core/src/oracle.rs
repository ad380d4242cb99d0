//! Exhaustive reference answers for small instances.
//!
//! Assignments are scanned as integers counting up, with variable `i` at
//! bit `n − i`, so the scan order is lexicographic in `x₁ x₂ … xₙ`.

use crate::dissimilar::AsyncInstance;
use crate::error::{Error, Result};
use crate::formula::{Assignment, CnfFormula, XorFormula};
use crate::graph::Graph;

/// Size limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    /// Most variables scanned (`2^max_vars` assignments).
    pub max_vars: usize,
    /// Most vertices for graph searches; at most 128.
    pub max_graph_vertices: usize,
    /// Most tuples `|solutions|^k` a tuple search may range over.
    pub max_tuple_base: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            max_vars: 20,
            max_graph_vertices: 18,
            max_tuple_base: 1 << 24,
        }
    }
}

/// Minimum that may not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(usize),
    Unbounded,
}

/// A formula compiled to per-clause bit masks.
pub trait Enumerable {
    fn num_vars(&self) -> usize;
    #[doc(hidden)]
    fn compile(&self) -> Vec<MaskClause>;
}

#[doc(hidden)]
#[derive(Clone, Copy, Debug)]
pub enum MaskClause {
    Or { pos: u64, neg: u64 },
    Xor { vars: u64, odd: bool },
}

impl MaskClause {
    #[inline]
    fn holds(self, a: u64) -> bool {
        match self {
            MaskClause::Or { pos, neg } => a & pos != 0 || !a & neg != 0,
            MaskClause::Xor { vars, odd } => ((a & vars).count_ones() & 1 == 1) == odd,
        }
    }
}

#[inline]
fn bit(n: usize, var: usize) -> u64 {
    1 << (n - var)
}

impl Enumerable for CnfFormula {
    fn num_vars(&self) -> usize {
        CnfFormula::num_vars(self)
    }

    fn compile(&self) -> Vec<MaskClause> {
        let n = CnfFormula::num_vars(self);
        self.clauses()
            .iter()
            .map(|c| {
                let (mut pos, mut neg) = (0, 0);
                for l in c.literals() {
                    if l.is_negated() {
                        neg |= bit(n, l.var());
                    } else {
                        pos |= bit(n, l.var());
                    }
                }
                MaskClause::Or { pos, neg }
            })
            .collect()
    }
}

impl Enumerable for XorFormula {
    fn num_vars(&self) -> usize {
        XorFormula::num_vars(self)
    }

    fn compile(&self) -> Vec<MaskClause> {
        let n = XorFormula::num_vars(self);
        self.clauses()
            .iter()
            .map(|c| MaskClause::Xor {
                vars: c.vars().iter().fold(0, |m, &v| m | bit(n, v)),
                odd: c.rhs(),
            })
            .collect()
    }
}

fn check_vars(n: usize, caps: &OracleCaps) -> Result<()> {
    if n > caps.max_vars.min(63) {
        return Err(Error::CapExceeded {
            what: "variables",
            value: n as u64,
            cap: caps.max_vars.min(63) as u64,
        });
    }
    Ok(())
}

fn to_assignment(n: usize, mask: u64) -> Assignment {
    Assignment::from_bools((1..=n).map(|v| mask & bit(n, v) != 0))
}

fn solution_masks<F: Enumerable + ?Sized>(phi: &F, caps: &OracleCaps) -> Result<Vec<u64>> {
    let n = phi.num_vars();
    check_vars(n, caps)?;
    let clauses = phi.compile();
    Ok((0..1u64 << n)
        .filter(|&a| clauses.iter().all(|c| c.holds(a)))
        .collect())
}

/// All satisfying assignments in lexicographic order.
pub fn enumerate_solutions<F: Enumerable + ?Sized>(
    phi: &F,
    caps: &OracleCaps,
) -> Result<Vec<Assignment>> {
    let n = phi.num_vars();
    Ok(solution_masks(phi, caps)?
        .into_iter()
        .map(|m| to_assignment(n, m))
        .collect())
}

/// A farthest pair of solutions and its distance; `None` when unsatisfiable.
/// Ties go to the lexicographically first pair.
pub fn max_hamming_pair<F: Enumerable + ?Sized>(
    phi: &F,
    caps: &OracleCaps,
) -> Result<Option<((Assignment, Assignment), usize)>> {
    let n = phi.num_vars();
    let sols = solution_masks(phi, caps)?;
    let mut best: Option<(u64, u64, u32)> = None;
    'outer: for (i, &a) in sols.iter().enumerate() {
        for &b in &sols[i..] {
            let d = (a ^ b).count_ones();
            if best.is_none_or(|(_, _, bd)| d > bd) {
                best = Some((a, b, d));
                if d as usize == n {
                    break 'outer;
                }
            }
        }
    }
    Ok(best.map(|(a, b, d)| ((to_assignment(n, a), to_assignment(n, b)), d as usize)))
}

/// Fewest clauses of `soft` whose deletion leaves `phi` satisfiable.
pub fn min_deletions_bruteforce(
    phi: &CnfFormula,
    soft: &[usize],
    caps: &OracleCaps,
) -> Result<Bound> {
    let n = phi.num_vars();
    check_vars(n, caps)?;
    let clauses = phi.compile();
    let mut is_soft = vec![false; clauses.len()];
    for &c in soft {
        *is_soft.get_mut(c).ok_or(Error::IndexOutOfRange {
            index: c,
            limit: clauses.len(),
        })? = true;
    }
    let (hard, soft): (Vec<_>, Vec<_>) = clauses.iter().zip(&is_soft).partition(|&(_, &s)| !s);
    let mut best = Bound::Unbounded;
    for a in 0..1u64 << n {
        if hard.iter().all(|(c, _)| c.holds(a)) {
            let violated = soft.iter().filter(|(c, _)| !c.holds(a)).count();
            best = best.min(Bound::Finite(violated));
        }
    }
    Ok(best)
}

/// Fewest asynchronous clauses whose deletion makes `φ*` satisfiable.
pub fn min_soft_deletions_bruteforce(inst: &AsyncInstance, caps: &OracleCaps) -> Result<Bound> {
    min_deletions_bruteforce(&inst.phi_star, &inst.soft, caps)
}

fn check_vertices(g: &Graph, caps: &OracleCaps) -> Result<()> {
    let cap = caps.max_graph_vertices.min(128);
    if g.num_vertices() > cap {
        return Err(Error::CapExceeded {
            what: "graph vertices",
            value: g.num_vertices() as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

fn neighbor_masks(g: &Graph) -> Vec<u128> {
    let mut nb = vec![0u128; g.num_vertices()];
    for &(u, v) in g.edges() {
        nb[u] |= 1 << v;
        nb[v] |= 1 << u;
    }
    nb
}

/// Largest independent set inside `cand`, by branching on a vertex
/// (include it and drop its neighbors, or drop it). A vertex with at most
/// one candidate neighbor is always taken: swapping it for that neighbor
/// never shrinks an independent set.
fn max_independent(nb: &[u128], cand: u128, size: u32, best: &mut u32) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() <= *best {
        return;
    }
    let mut rest = cand;
    let mut pick = None;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (nb[v] & cand).count_ones();
        if deg <= 1 {
            max_independent(nb, cand & !(1 << v) & !nb[v], size + 1, best);
            return;
        }
        if pick.is_none_or(|(_, d)| deg > d) {
            pick = Some((v, deg));
        }
    }
    let (v, _) = pick.expect("cand is nonempty");
    max_independent(nb, cand & !(1 << v) & !nb[v], size + 1, best);
    max_independent(nb, cand & !(1 << v), size, best);
}

/// Size of a minimum vertex cover (vertex count minus maximum independent set).
pub fn min_vertex_cover_bruteforce(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    check_vertices(g, caps)?;
    let n = g.num_vertices();
    let all = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut best = 0;
    max_independent(&neighbor_masks(g), all, 0, &mut best);
    Ok(n - best as usize)
}

/// Size of the largest vertex set inducing a bipartite subgraph.
pub fn max_induced_bipartite_bruteforce(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    check_vertices(g, caps)?;
    let n = g.num_vertices();
    if n > 31 {
        return Err(Error::CapExceeded {
            what: "graph vertices",
            value: n as u64,
            cap: 31,
        });
    }
    let nb: Vec<u32> = neighbor_masks(g).into_iter().map(|m| m as u32).collect();
    let mut best = 0;
    for set in 0u32..1 << n {
        if set.count_ones() > best && is_bipartite(&nb, set) {
            best = set.count_ones();
        }
    }
    Ok(best as usize)
}

fn is_bipartite(nb: &[u32], set: u32) -> bool {
    let mut color = [0u8; 32];
    let mut stack = Vec::new();
    let mut rest = set;
    while rest != 0 {
        let root = rest.trailing_zeros() as usize;
        color[root] = 1;
        stack.push(root);
        rest &= !(1 << root);
        while let Some(u) = stack.pop() {
            let mut adj = nb[u] & set;
            while adj != 0 {
                let v = adj.trailing_zeros() as usize;
                adj &= adj - 1;
                if color[v] == 0 {
                    color[v] = 3 - color[u];
                    rest &= !(1 << v);
                    stack.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// A solution `k`-tuple maximizing the sum of pairwise distances, with
/// that sum. Tuples are tried as nondecreasing index sequences into the
/// lexicographic solution list; the first maximum wins.
pub fn best_k_tuple_bruteforce(
    phi: &CnfFormula,
    k: usize,
    caps: &OracleCaps,
) -> Result<(Vec<Assignment>, u64)> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let n = CnfFormula::num_vars(phi);
    let sols = solution_masks(phi, caps)?;
    if sols.is_empty() {
        return Err(Error::Unsatisfiable);
    }
    let base = (sols.len() as u64).checked_pow(k as u32);
    if base.is_none_or(|b| b > caps.max_tuple_base) {
        return Err(Error::CapExceeded {
            what: "solution tuples",
            value: base.unwrap_or(u64::MAX),
            cap: caps.max_tuple_base,
        });
    }
    let mut idx = vec![0usize; k];
    let mut best: Option<(Vec<usize>, u64)> = None;
    loop {
        let mut f = 0u64;
        for i in 0..k {
            for j in i + 1..k {
                f += (sols[idx[i]] ^ sols[idx[j]]).count_ones() as u64;
            }
        }
        if best.as_ref().is_none_or(|(_, bf)| f > *bf) {
            best = Some((idx.clone(), f));
        }
        // Next nondecreasing sequence.
        let Some(pos) = (0..k).rev().find(|&p| idx[p] + 1 < sols.len()) else {
            break;
        };
        let next = idx[pos] + 1;
        for slot in &mut idx[pos..] {
            *slot = next;
        }
    }
    let (idx, f) = best.expect("at least one tuple");
    Ok((
        idx.into_iter().map(|i| to_assignment(n, sols[i])).collect(),
        f,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dissimilar::build_async_formula;
    use crate::formula::XorClause;

    fn cnf(n: usize, clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(n, clauses).unwrap()
    }

    fn strings(v: &[Assignment]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    #[test]
    fn enumeration() {
        let sols = enumerate_solutions(&cnf(2, &[&[-1, -2]]), &caps()).unwrap();
        assert_eq!(strings(&sols), ["00", "01", "10"]);
        assert!(enumerate_solutions(&cnf(1, &[&[1], &[-1]]), &caps())
            .unwrap()
            .is_empty());
        let sols = enumerate_solutions(&CnfFormula::empty(1), &caps()).unwrap();
        assert_eq!(strings(&sols), ["0", "1"]);
        let xor = XorFormula::new(3, vec![XorClause::new([1, 3], true).unwrap()]).unwrap();
        let sols = enumerate_solutions(&xor, &caps()).unwrap();
        assert_eq!(strings(&sols), ["001", "011", "100", "110"]);
        let big = CnfFormula::empty(21);
        assert!(matches!(
            enumerate_solutions(&big, &caps()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn farthest_pairs() {
        let p3 = cnf(3, &[&[-1, -2], &[-2, -3]]);
        let ((a, b), d) = max_hamming_pair(&p3, &caps()).unwrap().unwrap();
        assert_eq!(d, 3);
        assert_eq!((a.to_string(), b.to_string()), ("010".into(), "101".into()));
        let unique = cnf(2, &[&[1], &[-2]]);
        assert_eq!(max_hamming_pair(&unique, &caps()).unwrap().unwrap().1, 0);
        assert!(max_hamming_pair(&cnf(1, &[&[1], &[-1]]), &caps())
            .unwrap()
            .is_none());
    }

    #[test]
    fn soft_deletions() {
        let inst = build_async_formula(&cnf(2, &[&[-1, -2]])).unwrap();
        assert_eq!(
            min_soft_deletions_bruteforce(&inst, &caps()).unwrap(),
            Bound::Finite(0)
        );
        let inst = build_async_formula(&cnf(2, &[&[1], &[2]])).unwrap();
        assert_eq!(
            min_soft_deletions_bruteforce(&inst, &caps()).unwrap(),
            Bound::Finite(2)
        );
        let inst = build_async_formula(&cnf(1, &[&[1], &[-1]])).unwrap();
        assert_eq!(
            min_soft_deletions_bruteforce(&inst, &caps()).unwrap(),
            Bound::Unbounded
        );
        assert!(min_deletions_bruteforce(&cnf(1, &[&[1]]), &[3], &caps()).is_err());
    }

    #[test]
    fn vertex_covers() {
        assert_eq!(
            min_vertex_cover_bruteforce(&Graph::complete(3), &caps()).unwrap(),
            2
        );
        let k22 = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(min_vertex_cover_bruteforce(&k22, &caps()).unwrap(), 2);
        let edgeless = Graph::new(5, []).unwrap();
        assert_eq!(min_vertex_cover_bruteforce(&edgeless, &caps()).unwrap(), 0);
        assert_eq!(
            min_vertex_cover_bruteforce(&Graph::complete(6), &caps()).unwrap(),
            5
        );
        assert!(min_vertex_cover_bruteforce(&Graph::complete(19), &caps()).is_err());
    }

    #[test]
    fn vertex_cover_matches_subset_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(0..=10);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let scan = (0u32..1 << n)
                .filter(|&s| {
                    g.edges()
                        .iter()
                        .all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1)
                })
                .map(u32::count_ones)
                .min()
                .unwrap() as usize;
            assert_eq!(min_vertex_cover_bruteforce(&g, &caps()).unwrap(), scan);
        }
    }

    #[test]
    fn induced_bipartite() {
        assert_eq!(
            max_induced_bipartite_bruteforce(&Graph::complete(3), &caps()).unwrap(),
            2
        );
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(max_induced_bipartite_bruteforce(&p3, &caps()).unwrap(), 3);
        assert_eq!(
            max_induced_bipartite_bruteforce(&Graph::complete(4), &caps()).unwrap(),
            2
        );
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(max_induced_bipartite_bruteforce(&c5, &caps()).unwrap(), 4);
    }

    #[test]
    fn tuples() {
        let phi = cnf(2, &[&[1, -2], &[-1, 2]]);
        assert_eq!(best_k_tuple_bruteforce(&phi, 2, &caps()).unwrap().1, 2);
        assert_eq!(best_k_tuple_bruteforce(&phi, 1, &caps()).unwrap().1, 0);
        let chain = cnf(2, &[&[1, -2]]);
        let (tuple, f) = best_k_tuple_bruteforce(&chain, 3, &caps()).unwrap();
        assert_eq!(f, 4);
        assert_eq!(strings(&tuple), ["00", "00", "11"]);
        assert!(best_k_tuple_bruteforce(&phi, 0, &caps()).is_err());
        let tight = OracleCaps {
            max_tuple_base: 7,
            ..caps()
        };
        assert!(best_k_tuple_bruteforce(&phi, 3, &tight).is_err());
        assert_eq!(
            best_k_tuple_bruteforce(&cnf(1, &[&[1], &[-1]]), 2, &caps()),
            Err(Error::Unsatisfiable)
        );
    }
}

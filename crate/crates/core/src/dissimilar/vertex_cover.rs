//! Vertex cover parameterized above the LP lower bound.
//!
//! The half-integral LP optimum comes from a maximum matching on the
//! bipartite double cover `H` (vertex `v` has a left copy `Lv` and a right
//! copy `Rv`; edge `uv` becomes `Lu–Rv` and `Lv–Ru`). A minimum vertex cover
//! `C` of `H` gives the LP solution `x_v = |C ∩ {Lv, Rv}| / 2`.
//!
//! Minimum covers of `H` are exactly the closed sets of an implication
//! digraph over the matched edges, so one SCC pass tells whether all-½ is
//! the unique LP optimum, and a reachability closure produces an optimum
//! with some integral value otherwise. Such an optimum is applied by
//! persistency (its 1-vertices go to the cover, its 0-vertices are
//! dropped). Once all-½ is the unique optimum, branching on a vertex
//! raises the LP bound by at least ½ in both branches, so the search tree
//! has at most `4^(budget − LP)` leaves.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::sat::{tarjan_scc, Csr};

const NONE: usize = usize::MAX;

/// Outcome of [`vc_above_lp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    /// Sorted vertex cover of size at most the budget, if one exists.
    pub cover: Option<Vec<usize>>,
    /// Search-tree nodes visited.
    pub branches: u64,
    /// Twice the LP optimum of the input graph.
    pub lp_twice: usize,
}

impl CoverResult {
    pub fn found(&self) -> bool {
        self.cover.is_some()
    }
}

/// A half-integral optimum of the vertex cover LP.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralLp {
    /// `2·x_v` for each vertex: 0, 1 or 2.
    pub doubled: Vec<u8>,
    /// `2·Σ x_v`.
    pub twice_value: usize,
}

/// LP relaxation optimum via the double-cover matching.
pub fn lp_relaxation(g: &Graph) -> HalfIntegralLp {
    let adj = g.adjacency();
    let alive = vec![true; g.num_vertices()];
    let mut m = Matching::new(g.num_vertices());
    m.maximize(&adj, &alive);
    let doubled = koenig_values(&adj, &alive, &m);
    HalfIntegralLp {
        twice_value: doubled.iter().map(|&x| x as usize).sum(),
        doubled,
    }
}

/// Searches for a vertex cover of size at most `budget`.
pub fn vc_above_lp(g: &Graph, budget: usize) -> CoverResult {
    let adj = g.adjacency();
    let mut solver = Solver {
        adj: &adj,
        branches: 0,
    };
    let alive = vec![true; g.num_vertices()];
    let mut matching = Matching::new(g.num_vertices());
    matching.maximize(&adj, &alive);
    let lp_twice = matching.size;
    let cover = solver
        .search(alive, matching, budget, Vec::new())
        .map(|mut c| {
            c.sort_unstable();
            c
        });
    CoverResult {
        cover,
        branches: solver.branches,
        lp_twice,
    }
}

/// Maximum matching of the double cover; left and right copies share
/// vertex numbering.
#[derive(Clone)]
struct Matching {
    left: Vec<usize>,
    right: Vec<usize>,
    size: usize,
}

impl Matching {
    fn new(n: usize) -> Self {
        Self {
            left: vec![NONE; n],
            right: vec![NONE; n],
            size: 0,
        }
    }

    /// Drops matched pairs that touch a dead vertex.
    fn restrict(&mut self, alive: &[bool]) {
        for l in 0..self.left.len() {
            let r = self.left[l];
            if r != NONE && !(alive[l] && alive[r]) {
                self.left[l] = NONE;
                self.right[r] = NONE;
                self.size -= 1;
            }
        }
    }

    /// Hopcroft–Karp from the current matching.
    fn maximize(&mut self, adj: &[Vec<usize>], alive: &[bool]) {
        let n = self.left.len();
        let mut dist = vec![NONE; n];
        let mut next_edge = vec![0usize; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut via: Vec<usize> = Vec::new();
        loop {
            // Layered BFS from free left vertices.
            let mut queue = VecDeque::new();
            for u in 0..n {
                if alive[u] && self.left[u] == NONE {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = NONE;
                }
            }
            let mut reachable_free = false;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if !alive[v] {
                        continue;
                    }
                    let w = self.right[v];
                    if w == NONE {
                        reachable_free = true;
                    } else if dist[w] == NONE {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if !reachable_free {
                return;
            }
            next_edge.iter_mut().for_each(|e| *e = 0);
            for root in 0..n {
                if !(alive[root] && self.left[root] == NONE) {
                    continue;
                }
                stack.clear();
                via.clear();
                stack.push(root);
                while let Some(&u) = stack.last() {
                    if next_edge[u] == adj[u].len() {
                        dist[u] = NONE;
                        stack.pop();
                        via.pop();
                        continue;
                    }
                    let v = adj[u][next_edge[u]];
                    next_edge[u] += 1;
                    if !alive[v] {
                        continue;
                    }
                    let w = self.right[v];
                    if w == NONE {
                        via.push(v);
                        for (&a, &b) in stack.iter().zip(&via) {
                            self.left[a] = b;
                            self.right[b] = a;
                        }
                        self.size += 1;
                        break;
                    }
                    if dist[w] != NONE && dist[w] == dist[u] + 1 {
                        via.push(v);
                        stack.push(w);
                    }
                }
            }
        }
    }
}

/// LP values from the König cover reachable from free left vertices.
fn koenig_values(adj: &[Vec<usize>], alive: &[bool], m: &Matching) -> Vec<u8> {
    let n = adj.len();
    let mut seen_left = vec![false; n];
    let mut seen_right = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| alive[u] && m.left[u] == NONE).collect();
    for &u in &queue {
        seen_left[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if alive[v] && !seen_right[v] && m.left[u] != v {
                seen_right[v] = true;
                let w = m.right[v];
                if w != NONE && !seen_left[w] {
                    seen_left[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (0..n)
        .map(|v| {
            if !alive[v] {
                0
            } else {
                u8::from(!seen_left[v]) + u8::from(seen_right[v])
            }
        })
        .collect()
}

/// Where a literal of the closure problem sits relative to every valid set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    AlwaysIn,
    AlwaysOut,
    Free(usize),
}

/// Implication digraph whose closed sets (containing `TRUE`, avoiding
/// `FALSE`) are the minimum vertex covers of the double cover.
///
/// Node `p` stands for the matched pair with left end `pair_left[p]`; the
/// pair is "in" the set when its right end is in the cover.
struct CoverClosure {
    graph: Csr,
    reverse: Csr,
    pair_of_left: Vec<usize>,
    pair_of_right: Vec<usize>,
    pair_left: Vec<usize>,
    pair_right: Vec<usize>,
    truth: usize,
    falsity: usize,
}

impl CoverClosure {
    fn new(adj: &[Vec<usize>], alive: &[bool], m: &Matching) -> Self {
        let n = adj.len();
        let mut pair_of_left = vec![NONE; n];
        let mut pair_of_right = vec![NONE; n];
        let mut pair_left = Vec::with_capacity(m.size);
        let mut pair_right = Vec::with_capacity(m.size);
        for l in 0..n {
            if alive[l] && m.left[l] != NONE {
                pair_of_left[l] = pair_left.len();
                pair_of_right[m.left[l]] = pair_left.len();
                pair_left.push(l);
                pair_right.push(m.left[l]);
            }
        }
        let truth = pair_left.len();
        let falsity = truth + 1;
        let mut edges = Vec::new();
        for l in (0..n).filter(|&l| alive[l]) {
            for &r in &adj[l] {
                if !alive[r] || m.left[l] == r {
                    continue;
                }
                // Edge Ll–Rr: Ll leaves the cover ⇒ Rr joins it.
                let from = match pair_of_left[l] {
                    NONE => truth,
                    p => p,
                };
                let to = match pair_of_right[r] {
                    NONE => falsity,
                    p => p,
                };
                edges.push((from, to));
            }
        }
        let reversed: Vec<_> = edges.iter().map(|&(a, b)| (b, a)).collect();
        Self {
            graph: Csr::new(falsity + 1, &edges),
            reverse: Csr::new(falsity + 1, &reversed),
            pair_of_left,
            pair_of_right,
            pair_left,
            pair_right,
            truth,
            falsity,
        }
    }

    fn reach(g: &Csr, seeds: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; g.len()];
        let mut stack = Vec::new();
        for &s in seeds {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(u) = stack.pop() {
            for &v in &g.targets[g.start[u]..g.start[u + 1]] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// A minimum-cover LP optimum with some integral vertex, or `None` when
    /// all-½ is the unique optimum.
    fn integral_optimum(&self, alive: &[bool]) -> Option<Vec<u8>> {
        let forced_in = Self::reach(&self.graph, &[self.truth]);
        let forced_out = Self::reach(&self.reverse, &[self.falsity]);
        debug_assert!(!forced_in[self.falsity]);
        let comp = tarjan_scc(&self.graph);
        let status = |node: usize| {
            if forced_in[node] {
                Status::AlwaysIn
            } else if forced_out[node] {
                Status::AlwaysOut
            } else {
                Status::Free(node)
            }
        };

        for v in (0..alive.len()).filter(|&v| alive[v]) {
            // a: Lv is outside the cover; b: Rv is inside it. x_v = ½ iff a = b.
            let a = match self.pair_of_left[v] {
                NONE => self.truth,
                p => p,
            };
            let b = match self.pair_of_right[v] {
                NONE => self.falsity,
                p => p,
            };
            let extra =
                match (status(a), status(b)) {
                    (Status::AlwaysIn, Status::AlwaysIn)
                    | (Status::AlwaysOut, Status::AlwaysOut) => continue,
                    (Status::AlwaysIn, Status::AlwaysOut)
                    | (Status::AlwaysOut, Status::AlwaysIn) => None,
                    (Status::Free(p), Status::AlwaysIn | Status::AlwaysOut)
                    | (Status::AlwaysIn | Status::AlwaysOut, Status::Free(p)) => Some(p),
                    (Status::Free(p), Status::Free(q)) => {
                        if comp[p] == comp[q] {
                            continue;
                        }
                        // Seed the node whose closure cannot contain the other.
                        Some(if comp[q] > comp[p] { p } else { q })
                    }
                };
            let mut seeds = vec![self.truth];
            seeds.extend(extra);
            let closed = Self::reach(&self.graph, &seeds);
            debug_assert!(!closed[self.falsity]);
            return Some(self.values(alive, &closed));
        }
        None
    }

    fn values(&self, alive: &[bool], closed: &[bool]) -> Vec<u8> {
        let n = alive.len();
        let mut in_cover_left = vec![false; n];
        let mut in_cover_right = vec![false; n];
        for (p, (&l, &r)) in self.pair_left.iter().zip(&self.pair_right).enumerate() {
            if closed[p] {
                in_cover_right[r] = true;
            } else {
                in_cover_left[l] = true;
            }
        }
        (0..n)
            .map(|v| {
                if alive[v] {
                    u8::from(in_cover_left[v]) + u8::from(in_cover_right[v])
                } else {
                    0
                }
            })
            .collect()
    }
}

struct Solver<'a> {
    adj: &'a [Vec<usize>],
    branches: u64,
}

impl Solver<'_> {
    fn search(
        &mut self,
        mut alive: Vec<bool>,
        mut matching: Matching,
        mut budget: usize,
        mut cover: Vec<usize>,
    ) -> Option<Vec<usize>> {
        self.branches += 1;
        loop {
            matching.restrict(&alive);
            matching.maximize(self.adj, &alive);
            if 2 * budget < matching.size {
                return None;
            }
            let closure = CoverClosure::new(self.adj, &alive, &matching);
            let Some(values) = closure.integral_optimum(&alive) else {
                break;
            };
            for v in 0..alive.len() {
                if !alive[v] {
                    continue;
                }
                match values[v] {
                    2 => {
                        cover.push(v);
                        alive[v] = false;
                    }
                    0 => alive[v] = false,
                    _ => {}
                }
            }
            let taken = values.iter().filter(|&&x| x == 2).count();
            budget = budget.checked_sub(taken)?;
        }

        let Some(v) = (0..alive.len()).find(|&v| alive[v]) else {
            return Some(cover);
        };
        let neighbors: Vec<usize> = self.adj[v].iter().copied().filter(|&u| alive[u]).collect();
        debug_assert!(
            !neighbors.is_empty(),
            "isolated vertices are removed by persistency"
        );

        if budget >= 1 {
            let mut alive_in = alive.clone();
            alive_in[v] = false;
            let mut cover_in = cover.clone();
            cover_in.push(v);
            if let Some(c) = self.search(alive_in, matching.clone(), budget - 1, cover_in) {
                return Some(c);
            }
        }
        if neighbors.len() <= budget {
            alive[v] = false;
            for &u in &neighbors {
                alive[u] = false;
            }
            cover.extend(&neighbors);
            return self.search(alive, matching, budget - neighbors.len(), cover);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_min_cover(g: &Graph) -> usize {
        let n = g.num_vertices();
        (0u32..1 << n)
            .filter(|mask| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn k22() -> Graph {
        Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn complete_bipartite() {
        let r = vc_above_lp(&k22(), 2);
        let cover = r.cover.unwrap();
        assert_eq!(cover.len(), 2);
        assert!(k22().is_vertex_cover(&cover));
        assert!(!vc_above_lp(&k22(), 1).found());
    }

    #[test]
    fn triangle() {
        let t = Graph::complete(3);
        assert!(!vc_above_lp(&t, 1).found());
        assert_eq!(vc_above_lp(&t, 2).cover.unwrap().len(), 2);
        assert_eq!(lp_relaxation(&t).twice_value, 3);
    }

    #[test]
    fn edgeless_and_empty() {
        assert_eq!(
            vc_above_lp(&Graph::new(3, []).unwrap(), 0).cover,
            Some(vec![])
        );
        assert_eq!(vc_above_lp(&Graph::default(), 0).cover, Some(vec![]));
    }

    #[test]
    fn star_is_reduced_without_branching() {
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        let r = vc_above_lp(&star, 1);
        assert_eq!(r.cover, Some(vec![0]));
        assert_eq!(r.branches, 1);
    }

    #[test]
    fn petersen_graph() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(brute_min_cover(&g), 6);
        assert!(!vc_above_lp(&g, 5).found());
        let c = vc_above_lp(&g, 6).cover.unwrap();
        assert!(g.is_vertex_cover(&c) && c.len() <= 6);
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.7);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let best = brute_min_cover(&g);
            let lp = lp_relaxation(&g).twice_value;
            assert!(lp <= 2 * best && best <= lp);
            for budget in 0..=n {
                let r = vc_above_lp(&g, budget);
                assert_eq!(r.found(), best <= budget, "graph {g:?} budget {budget}");
                if let Some(c) = r.cover {
                    assert!(g.is_vertex_cover(&c) && c.len() <= budget);
                }
            }
        }
    }
}

use crate::error::{Error, Result};
use crate::formula::{Assignment, CnfFormula, Literal};

// Node layout: 2(v-1) is ¬x_v, 2(v-1)+1 is x_v. Negative literals come
// first so that an unconstrained variable ends up false.
#[inline]
fn node(l: Literal) -> usize {
    2 * (l.var() - 1) + usize::from(l.is_positive())
}

/// Compressed adjacency lists.
pub(crate) struct Csr {
    pub(crate) start: Vec<usize>,
    pub(crate) targets: Vec<usize>,
}

impl Csr {
    pub(crate) fn new(num_nodes: usize, edges: &[(usize, usize)]) -> Self {
        let mut start = vec![0usize; num_nodes + 1];
        for &(u, _) in edges {
            start[u + 1] += 1;
        }
        for i in 0..num_nodes {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut targets = vec![0usize; edges.len()];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
        }
        Self { start, targets }
    }

    pub(crate) fn len(&self) -> usize {
        self.start.len() - 1
    }
}

/// Iterative Tarjan. Component ids come out in reverse topological order:
/// if `u` reaches `v` in a different component then `comp[v] < comp[u]`.
pub(crate) fn tarjan_scc(g: &Csr) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = g.len();
    let mut comp = vec![UNSET; n];
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, g.start[root]));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (u, ref mut edge)) = call.last_mut() {
            if *edge < g.start[u + 1] {
                let v = g.targets[*edge];
                *edge += 1;
                if index[v] == UNSET {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, g.start[v]));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
            } else {
                call.pop();
                if low[u] == index[u] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == u {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[u]);
                }
            }
        }
    }
    comp
}

/// Satisfiability of a 2CNF formula via the implication graph.
///
/// Deterministic: `x` is set true iff the component of `x` comes after the
/// component of `¬x` in topological order.
pub fn solve_2sat(phi: &CnfFormula) -> Result<Option<Assignment>> {
    let n = phi.num_vars();
    let mut edges = Vec::with_capacity(2 * phi.num_clauses());
    for clause in phi.clauses() {
        match clause.distinct_literals().as_slice() {
            [a] => edges.push((node(a.negate()), node(*a))),
            [a, b] => {
                edges.push((node(a.negate()), node(*b)));
                edges.push((node(b.negate()), node(*a)));
            }
            lits => {
                return Err(Error::UnsupportedClass(format!(
                    "2SAT solver got a clause of width {}",
                    lits.len()
                )))
            }
        }
    }
    let graph = Csr::new(2 * n, &edges);
    let comp = tarjan_scc(&graph);
    let mut alpha = Assignment::zeros(n);
    for v in 0..n {
        let (neg, pos) = (comp[2 * v], comp[2 * v + 1]);
        if neg == pos {
            return Ok(None);
        }
        alpha.set(v, pos < neg);
    }
    Ok(Some(alpha))
}

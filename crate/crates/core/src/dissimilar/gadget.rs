//! Graph encoding of Almost 2SAT with hard constraints as vertex cover
//! above a perfect matching.
//!
//! Each occurrence of a variable gets `s + 1` layered copies per literal
//! sign. Copies of `x` and `¬x` form a complete bipartite block, so every
//! cover contains all of `V(x)` or all of `V(¬x)`. A hard clause gets an
//! edge in every layer, a soft clause only in layer 0; with budget `N + s`
//! the leftover `s` vertices can pay for soft clauses but never for a hard
//! clause, which would need `s + 1`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::formula::{classify, Assignment, CnfFormula, Literal};
use crate::graph::{emit_dimacs_graph, Graph};

/// Occurrence counts `n_x` and the clause holding each occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceIndex {
    /// `clauses_of[x - 1][i - 1]` is the clause index of the `i`-th occurrence of `x`.
    clauses_of: Vec<Vec<usize>>,
}

impl OccurrenceIndex {
    /// Indexes occurrences in clause order, then literal order within a clause.
    pub fn new(num_vars: usize, clauses: &[[Literal; 2]]) -> Self {
        let mut clauses_of = vec![Vec::new(); num_vars];
        for (ci, c) in clauses.iter().enumerate() {
            for l in c {
                clauses_of[l.var() - 1].push(ci);
            }
        }
        Self { clauses_of }
    }

    /// `n_x`.
    pub fn count(&self, var: usize) -> usize {
        self.clauses_of[var - 1].len()
    }

    pub fn clause_of(&self, var: usize, occurrence: usize) -> usize {
        self.clauses_of[var - 1][occurrence - 1]
    }

    pub fn total(&self) -> usize {
        self.clauses_of.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Variable,
    Hard,
    Soft,
}

/// Vertex label `v^layer_{literal, occurrence}` (occurrence is 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GadgetVertex {
    pub literal: Literal,
    pub occurrence: usize,
    pub layer: usize,
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    num_vars: usize,
    s: usize,
    /// Clauses after unit duplication, each as exactly two literal occurrences.
    clauses: Vec<[Literal; 2]>,
    soft: Vec<bool>,
    occurrences: OccurrenceIndex,
    /// First vertex id of `V(ℓ)`; literal order x1, ¬x1, x2, ¬x2, …
    literal_offset: Vec<usize>,
    vertices: Vec<GadgetVertex>,
    edges: Vec<(usize, usize, EdgeKind)>,
    matching: Vec<(usize, usize)>,
}

fn literal_slot(l: Literal) -> usize {
    2 * (l.var() - 1) + usize::from(l.is_negated())
}

impl GadgetGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, id: usize) -> GadgetVertex {
        self.vertices[id]
    }

    pub fn vertex_id(&self, literal: Literal, occurrence: usize, layer: usize) -> usize {
        assert!(occurrence >= 1 && occurrence <= self.occurrences.count(literal.var()));
        assert!(layer <= self.s);
        self.literal_offset[literal_slot(literal)] + (occurrence - 1) * (self.s + 1) + layer
    }

    /// Vertex ids of `V(ℓ)`.
    pub fn literal_vertices(&self, literal: Literal) -> std::ops::Range<usize> {
        let slot = literal_slot(literal);
        self.literal_offset[slot]..self.literal_offset[slot + 1]
    }

    pub fn edges(&self) -> &[(usize, usize, EdgeKind)] {
        &self.edges
    }

    pub fn count_edges(&self, kind: EdgeKind) -> usize {
        self.edges.iter().filter(|e| e.2 == kind).count()
    }

    /// Canonical perfect matching `{v^j_{x,i}, v^j_{¬x,i}}`.
    pub fn canonical_matching(&self) -> &[(usize, usize)] {
        &self.matching
    }

    /// Matching size `N = Σ n_x·(s + 1)`.
    pub fn matching_size(&self) -> usize {
        self.matching.len()
    }

    /// Cover budget `N + s`.
    pub fn budget(&self) -> usize {
        self.matching_size() + self.s
    }

    pub fn occurrences(&self) -> &OccurrenceIndex {
        &self.occurrences
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_soft(&self, clause: usize) -> bool {
        self.soft[clause]
    }

    /// Plain graph with parallel edges merged.
    pub fn to_graph(&self) -> Graph {
        Graph::new(
            self.num_vertices(),
            self.edges.iter().map(|&(u, v, _)| (u, v)),
        )
        .expect("gadget edges join distinct vertices")
    }

    /// DIMACS edge list with a comment line per vertex label.
    pub fn to_dimacs(&self) -> String {
        let comments: Vec<String> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| {
                format!(
                    "vertex {} literal {} occurrence {} layer {}",
                    id + 1,
                    v.literal.to_dimacs(),
                    v.occurrence,
                    v.layer
                )
            })
            .collect();
        let mut header = comments;
        let mut line = String::new();
        write!(
            line,
            "matching {} budget {}",
            self.matching_size(),
            self.budget()
        )
        .unwrap();
        header.push(line);
        emit_dimacs_graph(&self.to_graph(), &header)
    }

    fn clause_satisfied(&self, clause: usize, alpha: &Assignment) -> bool {
        self.clauses[clause].iter().any(|l| l.eval(alpha))
    }
}

/// Builds the layered gadget graph for `(phi, soft, s)`.
pub fn build_gadget_graph(phi: &CnfFormula, soft: &[usize], s: usize) -> Result<GadgetGraph> {
    if !classify(phi).is_2cnf() {
        return Err(Error::UnsupportedClass(
            "gadget graph needs a 2CNF formula".into(),
        ));
    }
    let n = phi.num_vars();
    let mut soft_flags = vec![false; phi.num_clauses()];
    for &c in soft {
        *soft_flags.get_mut(c).ok_or(Error::IndexOutOfRange {
            index: c,
            limit: phi.num_clauses(),
        })? = true;
    }
    let clauses: Vec<[Literal; 2]> = phi
        .clauses()
        .iter()
        .map(|c| match c.distinct_literals().as_slice() {
            [a] => [*a, *a],
            [a, b] => [*a, *b],
            _ => unreachable!("width checked above"),
        })
        .collect();
    let occurrences = OccurrenceIndex::new(n, &clauses);
    let layers = s + 1;

    let mut literal_offset = Vec::with_capacity(2 * n + 1);
    let mut vertices = Vec::with_capacity(2 * occurrences.total() * layers);
    for var in 1..=n {
        for literal in [Literal::pos(var), Literal::neg(var)] {
            literal_offset.push(vertices.len());
            for occurrence in 1..=occurrences.count(var) {
                for layer in 0..layers {
                    vertices.push(GadgetVertex {
                        literal,
                        occurrence,
                        layer,
                    });
                }
            }
        }
    }
    literal_offset.push(vertices.len());

    let mut g = GadgetGraph {
        num_vars: n,
        s,
        clauses,
        soft: soft_flags,
        occurrences,
        literal_offset,
        vertices,
        edges: Vec::new(),
        matching: Vec::new(),
    };

    for var in 1..=n {
        let pos = g.literal_vertices(Literal::pos(var));
        let neg = g.literal_vertices(Literal::neg(var));
        for u in pos.clone() {
            for w in neg.clone() {
                g.edges.push((u, w, EdgeKind::Variable));
            }
        }
        g.matching.extend(pos.zip(neg));
    }

    // Occurrence numbers of the two literal slots of each clause.
    let mut seen = vec![0usize; n];
    for ci in 0..g.clauses.len() {
        let [a, b] = g.clauses[ci];
        seen[a.var() - 1] += 1;
        let ia = seen[a.var() - 1];
        seen[b.var() - 1] += 1;
        let ib = seen[b.var() - 1];
        if g.soft[ci] {
            let e = (g.vertex_id(a, ia, 0), g.vertex_id(b, ib, 0), EdgeKind::Soft);
            g.edges.push(e);
        } else {
            for j in 0..layers {
                let e = (g.vertex_id(a, ia, j), g.vertex_id(b, ib, j), EdgeKind::Hard);
                g.edges.push(e);
            }
        }
    }
    Ok(g)
}

/// Reads an assignment off a cover and lists the soft clauses it violates.
///
/// `x` is true when the cover contains all of `V(x)` but not all of
/// `V(¬x)`, and false otherwise. Since the two sides form a complete
/// bipartite block, a cover missing `V(¬x)` entirely contains `V(x)`, and
/// when it meets both sides the fully covered one decides. Within the
/// budget at most one side of an occurring variable can be fully covered.
pub fn extract_assignment(cover: &[usize], g: &GadgetGraph) -> Result<(Assignment, Vec<usize>)> {
    let mut inside = vec![false; g.num_vertices()];
    for &v in cover {
        *inside.get_mut(v).ok_or(Error::ContractViolation(format!(
            "cover vertex {v} out of range"
        )))? = true;
    }
    if let Some(&(u, v, _)) = g.edges.iter().find(|&&(u, v, _)| !inside[u] && !inside[v]) {
        return Err(Error::ContractViolation(format!(
            "edge {{{u}, {v}}} is not covered"
        )));
    }
    let size = inside.iter().filter(|&&b| b).count();
    if size > g.budget() {
        return Err(Error::ContractViolation(format!(
            "cover has {size} vertices, budget is {}",
            g.budget()
        )));
    }

    let mut alpha = Assignment::zeros(g.num_vars());
    for var in 1..=g.num_vars() {
        let full = |l: Literal| {
            let mut side = g.literal_vertices(l);
            !side.is_empty() && side.all(|id| inside[id])
        };
        if full(Literal::pos(var)) && !full(Literal::neg(var)) {
            alpha.set(var - 1, true);
        }
    }
    let mut deleted = Vec::new();
    for ci in 0..g.clauses.len() {
        if g.clause_satisfied(ci, &alpha) {
            continue;
        }
        if !g.soft[ci] {
            return Err(Error::ContractViolation(format!(
                "hard clause {ci} falsified by the decoded assignment"
            )));
        }
        deleted.push(ci);
    }
    debug_assert!(deleted.len() <= g.budget() - g.matching_size());
    Ok((alpha, deleted))
}

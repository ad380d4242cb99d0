//! Simple undirected graphs and the DIMACS edge-list format.

use std::fmt::Write as _;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::formula::dimacs::{content_lines, parse_count, parse_header};

/// Undirected graph on vertices `0..num_vertices`; no loops, no parallel edges.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Normalizes each edge to `(min, max)`, sorts, and drops repeats.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut out = Vec::new();
        for (u, v) in edges {
            let hi = u.max(v);
            if hi >= num_vertices {
                return Err(Error::IndexOutOfRange {
                    index: hi,
                    limit: num_vertices,
                });
            }
            if u == v {
                return Err(Error::InvalidParams(format!("loop at vertex {u}")));
            }
            out.push((u.min(v), hi));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self {
            num_vertices,
            edges: out,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).unwrap()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        let mut inside = vec![false; self.num_vertices];
        for &v in cover {
            if v >= self.num_vertices {
                return false;
            }
            inside[v] = true;
        }
        self.edges.iter().all(|&(u, v)| inside[u] || inside[v])
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.num_vertices];
        for &v in set {
            inside[v] = true;
        }
        self.edges.iter().all(|&(u, v)| !(inside[u] && inside[v]))
    }
}

/// Parses `p edge V E` followed by `e u v` lines (1-based vertices).
pub fn parse_dimacs_graph(input: &[u8]) -> std::result::Result<Graph, ParseError> {
    let lines = content_lines(input)?;
    let Some(&(hline, header)) = lines.first() else {
        return Err(ParseError::new(
            1,
            ParseErrorKind::Header("missing `p edge` line".into()),
        ));
    };
    let (num_vertices, num_edges) = parse_header(hline, header, "edge")?;
    let mut edges = Vec::with_capacity(num_edges.min(1 << 16));
    let mut last_line = hline;
    for &(line, content) in &lines[1..] {
        last_line = line;
        let toks: Vec<&str> = content.split_whitespace().collect();
        let ["e", u, v] = toks.as_slice() else {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Malformed("expected `e <u> <v>`".into()),
            ));
        };
        let endpoint = |tok: &str| -> std::result::Result<usize, ParseError> {
            let x = parse_count(tok, line)?;
            if x == 0 || x > num_vertices {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::OutOfRange {
                        index: x as u64,
                        max: num_vertices,
                    },
                ));
            }
            Ok(x - 1)
        };
        let (u, v) = (endpoint(u)?, endpoint(v)?);
        if u == v {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Malformed("self-loop".into()),
            ));
        }
        edges.push((u, v));
    }
    if edges.len() != num_edges {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::CountMismatch {
                declared: num_edges,
                found: edges.len(),
            },
        ));
    }
    Graph::new(num_vertices, edges)
        .map_err(|e| ParseError::new(last_line, ParseErrorKind::Malformed(e.to_string())))
}

/// DIMACS edge list; `comments` become leading `c` lines.
pub fn emit_dimacs_graph(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p edge {} {}", g.num_vertices(), g.num_edges()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

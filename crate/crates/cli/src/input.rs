use std::path::Path;

use anyhow::{Context, Result};
use divsat::formula::dimacs::{parse_dimacs, parse_xdimacs};
use divsat::formula::{CnfFormula, XorClause, XorFormula};
use divsat::xor::parse_matrix;

/// A formula read from disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Cnf(CnfFormula),
    /// `consistent` is false when the source contained a `0 = 1` row.
    Xor {
        phi: XorFormula,
        consistent: bool,
    },
}

impl Loaded {
    pub fn num_vars(&self) -> usize {
        match self {
            Loaded::Cnf(phi) => phi.num_vars(),
            Loaded::Xor { phi, .. } => phi.num_vars(),
        }
    }
}

pub fn load(path: &Path) -> Result<Loaded> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    parse_formula(&bytes).with_context(|| format!("parsing {}", path.display()))
}

/// Sniffs the format: a `rows cols` first line is a matrix, `p cnf` with
/// `x` lines is XDIMACS, anything else is DIMACS.
pub fn parse_formula(bytes: &[u8]) -> Result<Loaded> {
    let text = std::str::from_utf8(bytes).unwrap_or("");
    let mut content = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('c'));
    let first = content.next().unwrap_or("");
    let is_matrix = {
        let toks: Vec<&str> = first.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
    };
    if is_matrix {
        let sys = parse_matrix(bytes)?;
        let mut clauses = Vec::new();
        let mut consistent = true;
        for (row, &b) in sys.rows().iter().zip(sys.rhs()) {
            let vars: Vec<usize> = row.ones_iter().map(|j| j + 1).collect();
            if vars.is_empty() {
                consistent &= !b;
                continue;
            }
            clauses.push(XorClause::new(vars, b)?);
        }
        let phi = XorFormula::new(sys.num_vars(), clauses)?;
        return Ok(Loaded::Xor { phi, consistent });
    }
    if content.any(|l| l.starts_with('x')) {
        return Ok(Loaded::Xor {
            phi: parse_xdimacs(bytes)?,
            consistent: true,
        });
    }
    Ok(Loaded::Cnf(parse_dimacs(bytes)?))
}

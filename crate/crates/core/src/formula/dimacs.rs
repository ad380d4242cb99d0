//! DIMACS CNF and XDIMACS (`x`-prefixed parity lines) reading and writing.

use std::fmt::Write as _;

use super::{Clause, CnfFormula, Literal, XorClause, XorFormula};
use crate::error::{ParseError, ParseErrorKind};

type ParseResult<T> = std::result::Result<T, ParseError>;

/// Non-comment lines of a text input as `(line_number, content)`, with CR
/// stripped. Lines beginning with `c` are comments; `%` ends the input.
pub(crate) fn content_lines(input: &[u8]) -> ParseResult<Vec<(usize, &str)>> {
    let text =
        std::str::from_utf8(input).map_err(|_| ParseError::new(1, ParseErrorKind::Encoding))?;
    let mut out = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        out.push((idx + 1, line));
    }
    Ok(out)
}

pub(crate) fn parse_count(tok: &str, line: usize) -> ParseResult<usize> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::new(line, ParseErrorKind::Token(tok.to_string())))
}

/// Reads `p <kind> <a> <b>`, returning `(a, b)`.
pub(crate) fn parse_header(line: usize, content: &str, kind: &str) -> ParseResult<(usize, usize)> {
    let toks: Vec<&str> = content.split_whitespace().collect();
    match toks.as_slice() {
        ["p", k, a, b] if *k == kind => Ok((parse_count(a, line)?, parse_count(b, line)?)),
        _ => Err(ParseError::new(
            line,
            ParseErrorKind::Header(format!("expected `p {kind} <count> <count>`")),
        )),
    }
}

fn parse_literal(tok: &str, line: usize, num_vars: usize) -> ParseResult<Option<Literal>> {
    let value: i64 = tok
        .parse()
        .map_err(|_| ParseError::new(line, ParseErrorKind::Token(tok.to_string())))?;
    if value == 0 {
        return Ok(None);
    }
    let var = value.unsigned_abs();
    if var > num_vars as u64 {
        return Err(ParseError::new(
            line,
            ParseErrorKind::OutOfRange {
                index: var,
                max: num_vars,
            },
        ));
    }
    Ok(Some(Literal::new(var as usize, value < 0)))
}

type Lines<'a> = [(usize, &'a str)];

fn split_header<'a>(lines: &'a Lines<'a>) -> ParseResult<((usize, usize), usize, &'a Lines<'a>)> {
    let Some(&(hline, header)) = lines.first() else {
        return Err(ParseError::new(
            1,
            ParseErrorKind::Header("missing `p cnf` line".into()),
        ));
    };
    Ok((parse_header(hline, header, "cnf")?, hline, &lines[1..]))
}

/// Parses DIMACS CNF. Clauses may span lines; each ends with `0`.
pub fn parse_dimacs(input: &[u8]) -> ParseResult<CnfFormula> {
    let lines = content_lines(input)?;
    let ((num_vars, num_clauses), mut last_line, body) = split_header(&lines)?;
    let mut clauses = Vec::with_capacity(num_clauses.min(1 << 16));
    let mut current: Vec<Literal> = Vec::new();
    for &(line, content) in body {
        last_line = line;
        if content.starts_with('p') {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Header("duplicate header".into()),
            ));
        }
        for tok in content.split_whitespace() {
            match parse_literal(tok, line, num_vars)? {
                Some(lit) => current.push(lit),
                None => {
                    if current.is_empty() {
                        return Err(ParseError::new(line, ParseErrorKind::EmptyClause));
                    }
                    clauses.push(Clause {
                        literals: std::mem::take(&mut current),
                    });
                }
            }
        }
    }
    if !current.is_empty() {
        return Err(ParseError::new(last_line, ParseErrorKind::Unterminated));
    }
    if clauses.len() != num_clauses {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::CountMismatch {
                declared: num_clauses,
                found: clauses.len(),
            },
        ));
    }
    Ok(CnfFormula { num_vars, clauses })
}

/// Parses XDIMACS: every clause line starts with `x` (`x 1 -2 0` or
/// `x1 -2 0`) and asserts that the XOR of its literals is true.
pub fn parse_xdimacs(input: &[u8]) -> ParseResult<XorFormula> {
    let lines = content_lines(input)?;
    let ((num_vars, num_clauses), mut last_line, body) = split_header(&lines)?;
    let mut clauses = Vec::with_capacity(num_clauses.min(1 << 16));
    for &(line, content) in body {
        last_line = line;
        let Some(rest) = content.strip_prefix('x') else {
            return Err(ParseError::new(line, ParseErrorKind::NotXorClause));
        };
        let mut lits = Vec::new();
        let mut terminated = false;
        for tok in rest.split_whitespace() {
            if terminated {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::Token(tok.to_string()),
                ));
            }
            match parse_literal(tok, line, num_vars)? {
                Some(lit) => lits.push(lit),
                None => terminated = true,
            }
        }
        if !terminated {
            return Err(ParseError::new(line, ParseErrorKind::Unterminated));
        }
        if lits.is_empty() {
            return Err(ParseError::new(line, ParseErrorKind::EmptyClause));
        }
        let clause = XorClause::from_literals(&lits)
            .map_err(|_| ParseError::new(line, ParseErrorKind::DegenerateClause))?;
        clauses.push(clause);
    }
    if clauses.len() != num_clauses {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::CountMismatch {
                declared: num_clauses,
                found: clauses.len(),
            },
        ));
    }
    Ok(XorFormula { num_vars, clauses })
}

/// Canonical DIMACS text: header, then one clause per line.
pub fn emit_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.num_clauses());
    for c in phi.clauses() {
        for l in c.literals() {
            write!(out, "{} ", l.to_dimacs()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}

/// Canonical XDIMACS text. A clause with even parity negates its last variable.
pub fn emit_xdimacs(phi: &XorFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for c in phi.clauses() {
        out.push('x');
        let last = c.vars().len() - 1;
        for (i, &v) in c.vars().iter().enumerate() {
            let negate = i == last && !c.rhs();
            write!(out, " {}{v}", if negate { "-" } else { "" }).unwrap();
        }
        out.push_str(" 0\n");
    }
    out
}

impl std::str::FromStr for CnfFormula {
    type Err = ParseError;

    fn from_str(s: &str) -> ParseResult<Self> {
        parse_dimacs(s.as_bytes())
    }
}

impl std::str::FromStr for XorFormula {
    type Err = ParseError;

    fn from_str(s: &str) -> ParseResult<Self> {
        parse_xdimacs(s.as_bytes())
    }
}

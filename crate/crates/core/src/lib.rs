//! Pairs (and tuples) of satisfying assignments at large Hamming distance
//! for 2CNF, Horn, dual Horn, double Horn and XOR formulas.

pub mod dissimilar;
pub mod diverse;
pub mod error;
pub mod formula;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod sat;
pub mod xor;

pub use error::{Error, ParseError, ParseErrorKind, Result};

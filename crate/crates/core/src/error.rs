use thiserror::Error;

/// Failure while reading one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        Self { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("input is not valid UTF-8")]
    Encoding,
    #[error("missing or malformed header: {0}")]
    Header(String),
    #[error("unexpected token `{0}`")]
    Token(String),
    #[error("variable index {index} out of range 1..={max}")]
    OutOfRange { index: u64, max: usize },
    #[error("declared {declared} entries but found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("empty clause")]
    EmptyClause,
    #[error("xor clause cancels to no variables")]
    DegenerateClause,
    #[error("clause not terminated by 0")]
    Unterminated,
    #[error("expected an xor clause line starting with `x`")]
    NotXorClause,
    #[error("{0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unsupported formula class: {0}")]
    UnsupportedClass(String),
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("formula is unsatisfiable")]
    Unsatisfiable,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

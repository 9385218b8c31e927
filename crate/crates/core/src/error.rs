use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A position in a textual input, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{position}: {message}")]
pub struct ParseError {
    pub position: Position,
    pub message: String,
}

impl ParseError {
    pub fn new(position: Position, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("argument position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("expected {expected} fixed arguments, found {found}")]
    ContextLength { expected: usize, found: usize },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("value {value} out of range 0..{m}")]
    ValueOutOfRange { value: usize, m: usize },
    #[error("index {index} out of range 0..{states}")]
    IndexOutOfRange { index: usize, states: usize },
    #[error("map is not an involution")]
    NotInvolution,
    #[error("map is not a bijection")]
    NotBijection,
    #[error("{states} states exceed the budget of {budget}")]
    BudgetExceeded { states: u128, budget: u128 },
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },
    #[error("cyclotomic order {order} outside 1..={bound}")]
    OrderOutOfBound { order: u64, bound: u64 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("unsupported roots: {0}")]
    UnsupportedRoots(String),
    #[error("expression is not affine in its variables")]
    NotAffine,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

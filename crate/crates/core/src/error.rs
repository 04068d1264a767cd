use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix must have at least one row")]
    EmptyMatrix,

    #[error("matrix rows must all have length {expected}, found {found}")]
    NotSquare { expected: usize, found: usize },

    #[error("matrix marked symmetric but entry ({row},{col}) differs from ({col},{row})")]
    NotSymmetric { row: usize, col: usize },

    #[error("tropical determinant enumeration supports n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },

    #[error("index ({row},{col}) out of range for a {n}x{n} matrix")]
    IndexOutOfRange { row: usize, col: usize, n: usize },

    #[error("minor requires n >= 2")]
    MinorOfScalar,

    #[error("polynomial has no finite coefficient")]
    EmptySupport,

    #[error("exponent vector has {found} entries, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("unsupported support shape: {0}")]
    UnsupportedShape(String),

    #[error("diagonal entry ({0},{0}) is -inf")]
    InfiniteDiagonal(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable {0:?} has no valuation")]
    UnmappedVariable(String),

    #[error("zero polynomial has no resultant")]
    ZeroPolynomial,

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

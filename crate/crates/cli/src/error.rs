use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("exponent {0} is not an integer")]
    NonIntegerExponent(String),
    #[error("invalid value {value:?}: {reason}")]
    BadValue { value: String, reason: String },
    #[error("polynomial has no finite term")]
    EmptySupport,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error(transparent)]
    Core(tropdual::Error),
}

impl CliError {
    /// 1 for input errors, 2 for unsupported shapes, 3 for oracle mismatches.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unsupported(_) => 2,
            CliError::OracleMismatch(_) => 3,
            CliError::Core(
                tropdual::Error::UnsupportedShape(_)
                | tropdual::Error::TooLarge { .. }
                | tropdual::Error::InfiniteDiagonal(_)
                | tropdual::Error::Precondition(_)
                | tropdual::Error::Degenerate(_),
            ) => 2,
            _ => 1,
        }
    }
}

impl From<tropdual::Error> for CliError {
    fn from(e: tropdual::Error) -> Self {
        match e {
            tropdual::Error::EmptySupport => CliError::EmptySupport,
            other => CliError::Core(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

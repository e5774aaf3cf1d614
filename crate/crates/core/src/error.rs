use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three broad classes (see [`ErrorKind`]): malformed
/// input text, inputs that parse but violate a precondition, and internal
/// consistency failures that indicate a broken ring implementation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by the integer zero")]
    DivisionByZero,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },

    #[error("matrix contains a non-finite float at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("odd-degree form cannot be used as a ring element: {0}")]
    OddDegree(String),

    #[error("missing value for variable `{0}`")]
    MissingVariable(String),

    #[error("size {n} exceeds the cap of {cap} for {algorithm} (pass an override to force it)")]
    CapExceeded {
        algorithm: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("{0} has no square root in the coefficient field")]
    NoSquareRoot(String),

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

/// Coarse classification used by the command line front end for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Validation,
    Consistency,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::Consistency(_) => ErrorKind::Consistency,
            _ => ErrorKind::Validation,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

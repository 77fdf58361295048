use thiserror::Error;

/// Errors raised by the algebraic operations and the structure-file loader.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("multi-index {0:?} is not strictly increasing")]
    NotIncreasing(Vec<usize>),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cannot contract a degree-{outer} tensor by one of degree {inner}")]
    DegreeUnderflow { inner: usize, outer: usize },

    #[error("expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("order {order} is not supported here (requires n >= {min})")]
    OrderTooSmall { order: usize, min: usize },

    #[error("invalid order {order} for chart dimension {dim} (requires 2 <= n <= m)")]
    InvalidOrder { order: usize, dim: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("volume constant must be nonzero")]
    ZeroVolumeConstant,

    #[error("jet degree {0} is below the certification bound 2")]
    JetDegreeTooSmall(u32),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

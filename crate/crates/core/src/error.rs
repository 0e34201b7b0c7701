use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point is outside the domain: {0}")]
    OutOfDomain(String),

    #[error("malformed simplicial set: {0}")]
    MalformedComplex(String),

    #[error("not a simplicial map: {0}")]
    NotSimplicial(String),

    #[error("unsupported dimension {dim} (supported up to {max})")]
    UnsupportedDimension { dim: usize, max: usize },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

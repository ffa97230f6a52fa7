use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Precondition on the mathematical input failed.
    #[error("domain error: {0}")]
    Domain(String),
    /// Operation is outside the supported scope.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A linear system that must be invertible turned out singular.
    #[error("singular system: {0}")]
    Singular(String),
    /// Internal consistency check failed (indicates a bug or corrupted data).
    #[error("internal consistency: {0}")]
    Internal(String),
    /// A search or recognition found nothing within its budget.
    #[error("not found: {0}")]
    NotFound(String),
    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;


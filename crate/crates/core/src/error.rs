//! Error types shared across the library.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An invalid design or model specification.
    #[error("spec error: {0}")]
    Spec(String),

    /// A model matrix that does not have full column rank.
    #[error("model error: {0}")]
    Model(String),

    /// A caller violated an operation contract (e.g. fraction size != p).
    #[error("contract error: {0}")]
    Contract(String),

    /// An instance exceeds a configured size or work budget.
    #[error("resource error: {0}")]
    Resource(String),

    /// A malformed input file.
    #[error("parse error: {0}")]
    Parse(String),

    /// Imported data failed an exactness check.
    #[error("validation error: {0}")]
    Validation(String),

    /// The randomized search could not produce a result.
    #[error("search error: {0}")]
    Search(String),

    /// An underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for CLI reporting: 2 for specification and
    /// validation problems, 3 for size/budget problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) => 3,
            _ => 2,
        }
    }
}

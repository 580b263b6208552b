//! Error type shared across the library.

use thiserror::Error;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by profile construction, constraint handling, gated ballot
/// access, and ingestion.
#[derive(Debug, Error)]
pub enum Error {
    /// A committee referenced a candidate outside the profile, contained a
    /// duplicate, or exceeded its capacity.
    #[error("invalid committee: {0}")]
    InvalidCommittee(String),

    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exhaustive routine refused an instance beyond its size guard.
    #[error("instance too large: {0}")]
    TooLarge(String),

    /// Malformed input text; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse {
        /// 1-based line number of the offending input.
        line: usize,
        /// Description of what failed to parse.
        message: String,
    },

    /// Preprocessing removed every voter or every statement.
    #[error("empty profile: {0}")]
    EmptyProfile(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Builds an invalid-argument error from anything displayable.
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

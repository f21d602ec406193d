use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// The value sequence is not a rearrangement of 1..=n.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// Standardisation input contained a repeated entry.
    #[error("duplicate entries in word")]
    DuplicateEntries,

    /// A text form could not be parsed; `token` is the offending piece.
    #[error("cannot parse {what}: bad token `{token}`")]
    Parse { what: &'static str, token: String },

    /// An argument violated an operation's precondition.
    #[error("{0}")]
    InvalidInput(String),

    /// The requested computation exceeds a configured size or runtime cap.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

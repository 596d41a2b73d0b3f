use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures that are not law violations.
///
/// Law violations are reported as [`Finding`](crate::Finding)s; an `Error`
/// means the question could not be asked (bad indices, a broken
/// precondition) or a construction hit data it cannot have been given if its
/// preconditions held.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("oracle data rejected: {0}")]
    Oracle(String),
    #[error("pushed square is not a pullback: {0}")]
    Preservation(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }
}

use thiserror::Error;

/// Failures surfaced by the library.
///
/// `Domain` covers bad inputs (a precondition the caller violated);
/// `Inconsistency` means an internal invariant failed, which points at
/// corrupted data or a bug rather than at the caller.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed fraction {0:?}: expected p/q with q != 0")]
    MalformedFraction(String),
    #[error("unknown irreducible representation label {0:?}")]
    UnknownIrrep(String),
    #[error("{0}")]
    Domain(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    /// Whether the error reflects a failed internal invariant.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the library. Verification failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not vexillary: {0}")]
    NotVexillary(String),
    #[error("not quasi-dominant: {0}")]
    NotQuasiDominant(String),
    #[error("not shiftable: {0}")]
    NotShiftable(String),
    #[error("expansion did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("negative coefficient: {0}")]
    NegativeCoefficient(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonTermination(_) | Error::NegativeCoefficient(_) | Error::Internal(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

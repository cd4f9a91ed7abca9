use alloc::boxed::Box;
use alloc::string::String;

use crate::reduction::FailedReduction;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Malformed input: inconsistent dimensions, bad indices, overlapping parts.
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A search scanned every candidate without finding a witness.
    #[error("search exhausted: {0}")]
    Exhausted(String),
    /// A guarantee of the descent step did not hold at the computed minimizer.
    #[error("guarantee violated: {0}")]
    GuaranteeViolated(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("central projection undefined: point at the height of the center")]
    ProjectionUndefined,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("instance generation failed: {0}")]
    Generation(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("reduction failed after {} attempts: {}", .0.attempts.len(), .0.last_error)]
    ReductionFailed(Box<FailedReduction>),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

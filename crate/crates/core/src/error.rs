use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero code has no minimum weight")]
    ZeroCode,

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(String, String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search space of {candidates} candidates exceeds the budget of {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by library operations.
///
/// Budget exhaustion during coset enumeration and `Unknown` classification
/// verdicts are ordinary results, not errors; only malformed inputs and
/// violated preconditions end up here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("symbol index {index} out of range (group has {count} generators)")]
    SymbolOutOfRange { index: usize, count: usize },

    #[error("element index {index} out of range (group has order {order})")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("matrix is not invertible over the group ring")]
    NotInvertible,

    #[error("presentation is not admissible")]
    NotAdmissible,

    #[error("presentation is not normalized: {0}")]
    NotNormalized(String),

    #[error("illegal certificate move at index {index}: {reason}")]
    IllegalMove { index: usize, reason: String },

    #[error("homomorphism search cap of {cap} candidate tuples exceeded")]
    SearchCapExceeded { cap: u64 },

    #[error("unknown group name `{0}`")]
    UnknownGroupName(String),

    #[error("{0}")]
    Invalid(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("outside the stable range: {0}")]
    StableRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("zero tensor has no weight")]
    ZeroTensor,

    #[error("live term count {live} exceeded the watermark limit {limit}")]
    TermLimit { live: usize, limit: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

use thiserror::Error;

/// Errors produced by lattice, functional and transform operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("n = {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("ground-set sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("partitions are not comparable under reverse refinement")]
    NotComparable,
    #[error("element {0} does not belong to an inner block")]
    NotInner(usize),
    #[error("element {0} is the maximum of its block")]
    IsBlockMax(usize),
    #[error("block {0:?} is not an outer block")]
    NotOuter(Vec<usize>),
    #[error("partition is not below 1_n in the << order (no unique outer block containing 1 and n)")]
    NotLLOne,
    #[error("empty position subset")]
    EmptySubset,
    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degree too low: need at least {needed}, have {have}")]
    DegreeTooLow { needed: usize, have: usize },
    #[error("dimension mismatch: tensor over {tensor} generators, family over {family}")]
    DimMismatch { tensor: usize, family: usize },
    #[error("functional is not tracial")]
    NotTracial,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a Lie element: {0}")]
    NotALieElement(String),
    #[error("alphabet mismatch: {left} vs {right} generators")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("strand mismatch: {left} vs {right} strands")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid generator indices ({i}, {j}) for n = {n}")]
    InvalidIndices { i: usize, j: usize, n: usize },
    #[error("value does not fit the output format: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("rank parameter n must be positive")]
    ZeroRank,

    #[error("partition {parts:?} has more than {max} parts")]
    TooManyParts { parts: Vec<u32>, max: usize },

    #[error("grade dimension for k = {0} is missing")]
    MissingGrade(i64),

    #[error(
        "representation too large: tensor degree {degree} exceeds bound {bound} (dimension {dim})"
    )]
    TooLarge {
        degree: usize,
        bound: usize,
        dim: u64,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("differential does not square to zero: d_{0} composed with d_{1} is nonzero")]
    NotAComplex(usize, usize),

    #[error("inconsistent weight bookkeeping: {0}")]
    Bookkeeping(String),

    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a set partition: {0}")]
    InvalidPartition(String),

    #[error("not a restricted growth word: letter {letter} at position {position} exceeds {limit}")]
    InvalidRgf {
        position: usize,
        letter: usize,
        limit: usize,
    },

    #[error("element {element} is outside [1, {n}]")]
    OutOfRange { element: usize, n: usize },

    #[error("positions must be strictly increasing and 1-based: {0:?}")]
    InvalidIndices(Vec<usize>),

    #[error("partition is not the image of a permutation under the reduction")]
    NotMatchstick,

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("{what} = {requested} exceeds the safety bound {bound}; pass force to override")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("search cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;

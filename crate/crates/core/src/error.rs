use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("empty hyperedge at position {edge}")]
    EmptyHyperedge { edge: usize },

    #[error("hyperedge {edge:?} references vertex {index}, but there are only {count} vertices")]
    IndexOutOfRange {
        edge: Vec<usize>,
        index: usize,
        count: usize,
    },

    #[error("hyperedge {edge:?} is not strictly increasing")]
    NotIncreasing { edge: Vec<usize> },

    #[error("coloring has {got} entries but the hypergraph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("instance too large for oracle: {0}")]
    TooLarge(String),

    /// Raised when a routine that requires an ABAB-free input discovers it is not.
    /// The message carries the certificate (a split pair or a crossing pair).
    #[error("input not ABAB-free: {0}")]
    NotAbabFree(String),

    #[error("degenerate position: {0}")]
    Degenerate(String),

    #[error("curves {first} and {second} overlap along a segment of positive length")]
    Overlap { first: usize, second: usize },

    #[error("curve family is not even: {0}")]
    NotEven(String),

    #[error("disk {disk} does not contain the stab point")]
    DiskMissesStab { disk: usize },

    #[error("point {point} coincides with the stab point")]
    PointAtStab { point: usize },

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

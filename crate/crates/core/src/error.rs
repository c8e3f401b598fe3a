use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range on {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand position {position} out of range on {strands} strands")]
    StrandOutOfRange { position: usize, strands: usize },

    #[error("operation supports at most {max} strands, requested {requested}")]
    BoundExceeded { requested: usize, max: usize },

    #[error("positive-equivalence class exceeded the configured limit of {limit} words")]
    ClosureLimit { limit: usize },

    #[error("generator {token} is not invertible")]
    NotInvertible { token: String },

    #[error("pair ({x}, {y}) is inadmissible, yet a common multiple was asserted")]
    InadmissibleContradiction { x: String, y: String },

    #[error("words are not positively equivalent, cancellation precondition violated")]
    NotEquivalent,

    #[error("cannot divide: {word} has no representative starting with {divisor}")]
    NotDivisible { word: String, divisor: String },

    #[error("parse error at token {index} ({token}): {reason}")]
    Parse {
        index: usize,
        token: String,
        reason: String,
    },

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("unknown presentation family {0}")]
    UnknownFamily(String),

    #[error("invalid parameters for family {family}: {reason}")]
    InvalidParams { family: String, reason: String },

    #[error("assignment is missing an image for generator {0}")]
    MissingImage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

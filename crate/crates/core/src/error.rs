use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("index {0} is frozen")]
    Frozen(usize),

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("not finite type: mutation tree did not close within depth {depth}")]
    NotFiniteType { depth: usize },

    #[error("series has non-unit constant term")]
    NonUnit,

    #[error("exact integer division impossible: {0}")]
    Division(String),

    #[error("point is not generic: {0}")]
    NonGeneric(String),

    #[error("path crosses a joint: {0}")]
    Joint(String),

    #[error("action is not admissible: {{e_{pi_i}, e_{pi_j}}} != {{e_{i}, e_{j}}}")]
    Inadmissible {
        i: usize,
        j: usize,
        pi_i: usize,
        pi_j: usize,
    },

    #[error("sequence is not green at step {step} (index {index})")]
    NotGreen { step: usize, index: usize },

    #[error("sequence is not a maximal green sequence")]
    NotMaximalGreen,

    #[error("truncation did not stabilize at order {order}")]
    Unstable { order: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

use std::time::Duration;

/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Identifying two adjacent vertices would create a loop.
    #[error("identification would create a loop: {0}")]
    LoopCreated(String),

    /// A precondition of the called operation does not hold.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// An edge whose endpoints share a color, where a proper coloring was required.
    #[error("monochromatic edge {a}-{b}")]
    MonochromaticEdge { a: usize, b: usize },

    /// Requested coloring provably does not exist.
    #[error("no such coloring exists: {0}")]
    NoColoringExists(String),

    #[error("solver timed out after {0:?}")]
    Timeout(Duration),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    /// A constructed object failed its own verification; indicates a bug.
    #[error("internal check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

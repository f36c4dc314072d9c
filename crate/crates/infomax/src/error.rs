use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("alphabet mismatch: expected size {expected}, got {got}")]
    AlphabetMismatch { expected: usize, got: usize },

    #[error("perturbation row {row} sums to {sum}, expected 0")]
    UnbalancedPerturbation { row: usize, sum: f64 },

    #[error("zero marginal at outcome {outcome} with nonzero perturbation")]
    ZeroMarginal { outcome: usize },

    #[error("brute-force size cap exceeded: {0}")]
    SizeCap(String),

    #[error("posterior has zero total mass (contradictory evidence)")]
    ZeroMass,

    #[error("non-finite metric {column} = {value} at row {index}")]
    NonFinite {
        column: String,
        value: f64,
        index: u64,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input (scalars, degrees, permutations, ...).
    #[error("parse error: {0}")]
    Parse(String),

    /// A persisted file violates the JSON schema; `pointer` locates the
    /// offending entry.
    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },

    /// Two multidegrees of different rank were combined.
    #[error("grading rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    /// A computation stepped past the degree bound the data was built for.
    #[error("degree bound exceeded: {0}")]
    BoundExceeded(String),

    /// Invalid argument or inconsistent input data.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A generator power became reducible. Over the rationals the PBW theory
    /// guarantees infinite heights, so this indicates inconsistent input.
    #[error("finite height detected (inconsistent with characteristic zero): {0}")]
    FiniteHeight(String),

    /// The supplied generators do not span some degree stratum.
    #[error("generators do not span degree {0}")]
    NotGenerating(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

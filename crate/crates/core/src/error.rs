//! Crate-wide error type.
//!
//! Variants are grouped by failure class so callers (notably the CLI) can
//! map them onto coarse exit codes: configuration problems, data problems,
//! and numerical degeneracies.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input to an operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// PLV requested for a channel paired with itself.
    #[error("invalid channel pair: i = j = {0}")]
    InvalidPair(usize),

    /// Frequency band selects no bins on the given frequency axis.
    #[error("empty band: [{lo} Hz, {hi} Hz] contains no frequency bins")]
    EmptyBand { lo: f64, hi: f64 },

    /// Recordings disagree on channel count, trial length, rate, or onset.
    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    /// Tensor mode index outside 0..order.
    #[error("invalid mode {mode} for a {order}-mode tensor")]
    InvalidMode { mode: usize, order: usize },

    /// Requested rank exceeds the mode size.
    #[error("invalid rank {rank} for mode {mode} of size {size}")]
    InvalidRank { mode: usize, rank: usize, size: usize },

    /// Singular-vector ordinal outside the valid range.
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    /// Leading core entry is zero; relative rank selection is undefined.
    #[error("degenerate core: leading core entry is zero")]
    DegenerateCore,

    /// A tensor slice with zero Frobenius norm where a direction is needed.
    #[error("zero-norm slice at time bin {t}")]
    ZeroNormSlice { t: usize },

    /// A zero-norm operand where a direction is needed.
    #[error("zero-norm operand in cosine similarity")]
    ZeroNorm,

    /// Bad configuration file or parameter values.
    #[error("invalid config: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

/// Shorthand constructor used throughout the crate.
pub fn invalid_input(msg: impl Into<String>) -> Error {
    Error::invalid_input(msg)
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by state construction, mode algebra and protocol evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A mode index does not exist in the state or matrix it was used with.
    #[error("mode index {index} out of range for {mode_count} modes")]
    ModeIndex { index: usize, mode_count: usize },

    /// The same mode was named twice where distinct modes are required.
    #[error("duplicate mode index {index}")]
    DuplicateMode { index: usize },

    /// Two objects that must live on the same number of modes do not.
    #[error("mode count mismatch: {left} vs {right}")]
    ModeCountMismatch { left: usize, right: usize },

    /// A scalar parameter fell outside its admissible interval.
    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// A matrix that must be unitary failed the unitarity check.
    #[error("matrix is not unitary (Frobenius deviation {deviation:.3e} > {tolerance:.3e})")]
    NotUnitary { deviation: f64, tolerance: f64 },

    /// An operation on a state with zero trace (or zero success probability).
    #[error("degenerate state: {0}")]
    Degenerate(&'static str),

    /// A threshold (non-resolving) detector was asked for an exact count above one.
    #[error("threshold detector cannot report {observed} photons")]
    ThresholdCount { observed: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

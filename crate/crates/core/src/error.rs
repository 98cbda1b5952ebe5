use thiserror::Error;

use crate::rat::Rat;
use crate::seq::{Seq, ViolationReport};

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by this crate. Inequality *violations* are not errors:
/// the checkers return a [`ViolationReport`] for those. Errors signal inputs
/// that fall outside an operation's domain.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid rational `{input}`: {reason}")]
    InvalidRational { input: String, reason: &'static str },

    #[error("sequence must have at least one entry")]
    EmptySequence,

    #[error("order {order} is too small for a sequence of length {len}")]
    OrderTooSmall { order: u64, len: usize },

    #[error("entry {index} is {value}, which is not strictly positive")]
    NotPositive { index: usize, value: Rat },

    #[error("{name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: Rat },

    #[error("sequence is not ULC({order}): {report}")]
    NotUlc { order: u64, report: ViolationReport },

    #[error("support is not contiguous: zero entry at index {index} lies between nonzero entries")]
    NonContiguousSupport { index: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("body dimension must be at least 1")]
    ZeroDimension,

    #[error("vertex list must be nonempty")]
    EmptyVertices,

    #[error("vertex {index} has {found} coordinates, expected {expected}")]
    PointDimension {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("scale factor {value} is negative")]
    NegativeScale { value: Rat },

    #[error("mixed volume index {k} is out of range 0..={n}")]
    MixedVolumeIndex { k: usize, n: usize },

    #[error("lambda vector must be nonempty")]
    EmptyLambda,

    #[error("lambda is not descending at index {index}")]
    NotDescending { index: usize },

    #[error("realization verification failed: expected {expected}, geometry gives {recovered}")]
    RealizationMismatch { expected: Seq, recovered: Seq },

    #[error("geometric route unavailable: {reason}")]
    GeometricPrecondition { reason: String },

    #[error("ambient dimension {dim} exceeds the desk-scale budget of {max}")]
    DimensionBudget { dim: usize, max: usize },

    #[error("parameter out of domain: {reason}")]
    ParameterDomain { reason: String },
}

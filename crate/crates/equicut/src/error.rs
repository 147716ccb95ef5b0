//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("support pattern must be nonempty")]
    EmptyPattern,

    #[error("ambient weight vector must be nonempty")]
    EmptyWeights,

    #[error("level {level} equals ambient weight a_{index} (not a regular level)")]
    NonRegularLevel { level: String, index: usize },

    #[error("ambient weights contain a repeated value (isolated fixed points required)")]
    RepeatedWeights,

    #[error("ambient weight a_{index} is zero")]
    ZeroWeight { index: usize },

    #[error("tangent weight list must be nonempty")]
    EmptyTangentWeights,

    #[error("tangent weight is zero (non-isolated direction)")]
    ZeroTangentWeight,

    #[error("series is zero up to truncation and cannot be inverted")]
    NonInvertible,

    #[error("coefficient of t^{exponent} lies outside the known window (truncation order {truncation})")]
    InsufficientPrecision { exponent: i64, truncation: i64 },

    #[error("series working order {order} is too small (need at least {required})")]
    OrderTooSmall { order: i64, required: i64 },

    #[error("class must be homogeneous of degree {expected}")]
    WrongClassDegree { expected: usize },

    #[error("need at least two ambient weights for this operation")]
    AmbientTooSmall,

    #[error("N = {bound} must exceed every ambient weight (max is {max})")]
    PsiBound { bound: i64, max: i64 },

    #[error("pattern is not of the claimed unstable type")]
    NotUnstableType,

    #[error("integer overflow while reweighting")]
    Overflow,

    #[error("cannot parse rational {input:?}: {reason}")]
    ParseRational { input: String, reason: String },

    #[error("cannot parse class expression: {0}")]
    ParseClass(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("cannot read scenario file: {0}")]
    Io(#[from] std::io::Error),

    #[error("scenario is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

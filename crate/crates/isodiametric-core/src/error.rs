//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} outside supported range {1}..={2}")]
    DimensionOutOfRange(usize, usize, usize),

    #[error("cap angle {0} outside [0, pi]")]
    AngleOutOfRange(f64),

    #[error("cap area {0} outside [0, {1}]")]
    AreaOutOfRange(f64, f64),

    #[error("radius must be nonnegative, got {0}")]
    NegativeRadius(f64),

    #[error("psi arguments must satisfy 0 <= s <= t <= eps < 4/9, got s={s}, t={t}, eps={eps}")]
    PsiArguments { s: f64, t: f64, eps: f64 },

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("profile has zero volume")]
    ZeroVolume,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("oracle inconsistent with declared bounding radius: {0}")]
    OracleInconsistent(String),

    #[error("unknown family: {0}")]
    UnknownFamily(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

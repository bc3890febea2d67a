//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid range: q_min = {0} must be less than q_max = {1}")]
    InvalidRange(f64, f64),
    #[error("grid needs at least 8 points, got {0}")]
    TooFewPoints(usize),
    #[error("operands live on different grids")]
    GridMismatch,
    #[error("operator is not Hermitian (max deviation {0:.3e})")]
    NonHermitian(f64),
    #[error("t = {t} is singular for this kernel: {reason}")]
    SingularTime { t: f64, reason: String },
    #[error("coordinate {0} lies outside the grid")]
    OutsideGrid(f64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unsupported combination: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::quad::QuadError;

/// Errors raised by the physics layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShutterError {
    #[error("time must be positive, got t = {0}")]
    NonPositiveTime(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("frame (mu = {mu}, nu = {nu}) is singular at t = {t}: requires mu*(mu*t + nu) > 0")]
    FrameSingular { mu: f64, nu: f64, t: f64 },

    #[error("nu must be nonzero for the chi amplitude")]
    NuZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature failed: {0}")]
    Quadrature(#[from] QuadError),

    #[error("oracle result is not real: |Im| = {imag:e} exceeds {limit:e}")]
    NonReal { imag: f64, limit: f64 },
}

pub type Result<T> = std::result::Result<T, ShutterError>;

pub(crate) fn check_time(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(ShutterError::NonPositiveTime(t))
    }
}

//! Quadrature machinery shared by the oracles.
//!
//! * [`integrate_adaptive`]: globally adaptive Gauss-Kronrod (7/15) bisection
//!   for complex integrands on a finite interval.
//! * [`integrate_oscillatory_halfline`]: sums integrals between consecutive
//!   zeros of an oscillating phase and accelerates the partial sums by
//!   iterated averaging (Euler transform).
//! * [`richardson_extrapolate`]: polynomial extrapolation of a sequence of
//!   regularized values to zero regularization.

mod adaptive;
mod oscillatory;
mod richardson;

pub use adaptive::{integrate_adaptive, integrate_segments};
pub use oscillatory::{
    integrate_halfline_mapped, integrate_oscillatory_finite, integrate_oscillatory_halfline,
    Direction, QuadraticPhase, QuadraticPhaseZeros, ZeroLocator,
};
pub use richardson::richardson_extrapolate;

use num_complex::Complex64;
use thiserror::Error;

/// Tolerances and budgets for all integrators in this module.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Subinterval budget for adaptive bisection, segment budget for the
    /// oscillatory integrators.
    pub max_segments: usize,
    /// Number of averaging passes applied to the partial sums.
    pub acceleration_depth: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-8,
            max_segments: 500,
            acceleration_depth: 6,
        }
    }
}

impl QuadConfig {
    pub fn with_tolerances(abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }

    pub fn with_max_segments(mut self, max_segments: usize) -> Self {
        self.max_segments = max_segments;
        self
    }

    pub fn with_acceleration_depth(mut self, depth: usize) -> Self {
        self.acceleration_depth = depth;
        self
    }

    pub fn validate(&self) -> Result<(), QuadError> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(QuadError::InvalidConfig(format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(QuadError::InvalidConfig(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if self.max_segments == 0 {
            return Err(QuadError::InvalidConfig("max_segments must be at least 1".into()));
        }
        Ok(())
    }

    /// Tolerance target for a value of magnitude `scale`.
    pub fn target(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale)
    }
}

/// Value, error estimate and bookkeeping returned by every integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscIntegralResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub segments_used: usize,
    /// False when the partial sums stopped alternating and plain truncation
    /// was reported instead of the accelerated limit.
    pub accelerated: bool,
}

impl OscIntegralResult {
    pub(crate) fn zero() -> Self {
        Self {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            segments_used: 0,
            accelerated: false,
        }
    }

    /// Combines results of integrals over disjoint pieces.
    pub fn combine(self, other: OscIntegralResult) -> OscIntegralResult {
        OscIntegralResult {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            segments_used: self.segments_used + other.segments_used,
            accelerated: self.accelerated || other.accelerated,
        }
    }

    pub fn scale(self, factor: Complex64) -> OscIntegralResult {
        OscIntegralResult {
            value: self.value * factor,
            error_estimate: self.error_estimate * factor.norm(),
            ..self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    #[error("integrand is not finite at {at}")]
    NonFinite { at: f64 },

    #[error("budget exhausted after {} segments (best value {}, error estimate {:e})", .best.segments_used, .best.value, .best.error_estimate)]
    BudgetExhausted { best: OscIntegralResult },

    #[error("zero locator produced no oscillation")]
    NonOscillatory,

    #[error("extrapolation needs at least 2 samples, got {0}")]
    InsufficientSamples(usize),

    #[error("extrapolation nodes must be distinct and positive")]
    DegenerateNodes,
}

//! Wigner quasiprobability of the shutter state.
//!
//! With `u = pt - x`,
//!
//! ```text
//! W(x, p; k, t) = sin(2u(k - p)) / (pi (k - p)) * theta(u) = (2u/pi) sinc(2u(k - p)) * theta(u)
//! ```
//!
//! which is the free-flight shear of the Wigner function of the truncated
//! plane wave. Its `p`-marginal is `|M(x,k,t)|^2`. The definitional integral
//! [`wigner_oracle`] and the marginal [`wigner_marginal`] check both facts
//! numerically.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_time, Result, ShutterError};
use crate::quad::{
    integrate_halfline_mapped, integrate_oscillatory_finite, integrate_oscillatory_halfline,
    richardson_extrapolate, Direction, OscIntegralResult, QuadConfig, QuadraticPhase,
};
use crate::shutter::{amplitude_parts, chirp, ShutterParams};
use crate::specfun::sinc;

/// Default regularization ladder for the extrapolated oracles.
pub const DEFAULT_EPS_LADDER: [f64; 3] = [4e-3, 2e-3, 1e-3];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhasePoint {
    pub x: f64,
    pub p: f64,
}

impl PhasePoint {
    pub fn new(x: f64, p: f64) -> Self {
        Self { x, p }
    }
}

/// `hbar` and particle mass for the classical-limit formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalUnits {
    pub hbar: f64,
    pub mass: f64,
}

impl PhysicalUnits {
    pub const NATURAL: PhysicalUnits = PhysicalUnits { hbar: 1.0, mass: 1.0 };

    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) || !(mass > 0.0 && mass.is_finite()) {
            return Err(ShutterError::InvalidParameter(format!(
                "hbar and mass must be positive, got hbar = {hbar}, mass = {mass}"
            )));
        }
        Ok(Self { hbar, mass })
    }
}

/// Closed-form Wigner function in natural units. Zero for `x >= pt`.
pub fn wigner_closed(pp: PhasePoint, k: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let u = pp.p * t - pp.x;
    if u <= 0.0 {
        return Ok(0.0);
    }
    let g = 2.0 * u;
    Ok(g / PI * sinc(g * (k - pp.p)))
}

/// Wigner function with explicit `hbar` and mass:
/// `sin[g(k-p)] / (pi (k-p)) * theta(pt/m - x)`, `g = (2/hbar)(pt/m - x)`.
pub fn wigner_cgs(pp: PhasePoint, k: f64, t: f64, units: PhysicalUnits) -> Result<f64> {
    check_time(t)?;
    let u = pp.p * t / units.mass - pp.x;
    if u <= 0.0 {
        return Ok(0.0);
    }
    let g = 2.0 / units.hbar * u;
    Ok(g / PI * sinc(g * (k - pp.p)))
}

/// A real quantity computed by quadrature, with the discarded imaginary part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub value: f64,
    pub imag: f64,
    pub error_estimate: f64,
}

/// `(1/pi) int M*(x+y) M(x-y) e^{2ipy} dy` at momentum `k - i eps`.
///
/// `M` is split into its incident plane wave and its chirped envelope (see
/// `amplitude_parts`), which turns the integrand into four products, each
/// with one explicit phase: plane x plane on the finite overlap, the two
/// plane x envelope cross terms on half-lines with quadratic phase, and
/// envelope x envelope with linear phase `2(p - x/t) y`.
pub fn wigner_oracle(pp: PhasePoint, params: ShutterParams, t: f64, quad: &QuadConfig) -> Result<OracleValue> {
    check_time(t)?;
    if !(params.eps > 0.0) {
        return Err(ShutterError::InvalidParameter("wigner_oracle needs eps > 0".into()));
    }
    let PhasePoint { x, p } = pp;
    let k = params.k;
    let half_width = k * t - x;
    let reach = half_width.abs();
    let e2ipy = |y: f64| Complex64::from_polar(1.0, 2.0 * p * y);

    let mut total = OscIntegralResult::zero();

    // plane x plane: both arguments behind the front
    if half_width > 0.0 {
        let f = |y: f64| {
            let a = amplitude_parts(x + y, t, params).plane;
            let b = amplitude_parts(x - y, t, params).plane;
            a.conj() * b * e2ipy(y)
        };
        let phase = QuadraticPhase::linear(2.0 * (p - k));
        total = total.combine(integrate_oscillatory_finite(f, -half_width, half_width, &phase, quad)?);
    }

    // conj(plane(x+y)) * chirped envelope(x-y): support x + y < kt
    {
        let f = |y: f64| {
            let a = amplitude_parts(x + y, t, params).plane;
            let b = amplitude_parts(x - y, t, params).envelope * chirp(x - y, t);
            a.conj() * b * e2ipy(y)
        };
        let phase = QuadraticPhase::new(0.5 / t, 2.0 * p - k - x / t);
        let tail_start = if half_width > 0.0 {
            total = total.combine(crate::quad::integrate_adaptive(&f, -half_width, half_width, quad)?);
            -half_width
        } else {
            half_width
        };
        total = total.combine(integrate_oscillatory_halfline(&f, tail_start, Direction::Backward, &phase, quad)?);
    }

    // conj(chirped envelope(x+y)) * plane(x-y): support x - y < kt
    {
        let f = |y: f64| {
            let a = amplitude_parts(x + y, t, params).envelope * chirp(x + y, t);
            let b = amplitude_parts(x - y, t, params).plane;
            a.conj() * b * e2ipy(y)
        };
        let phase = QuadraticPhase::new(-0.5 / t, 2.0 * p - k - x / t);
        let tail_start = if half_width > 0.0 {
            total = total.combine(crate::quad::integrate_adaptive(&f, -half_width, half_width, quad)?);
            half_width
        } else {
            -half_width
        };
        total = total.combine(integrate_oscillatory_halfline(&f, tail_start, Direction::Forward, &phase, quad)?);
    }

    // envelope x envelope: the chirps combine into exp(-2ixy/t)
    {
        let omega = 2.0 * (p - x / t);
        let f = |y: f64| {
            let a = amplitude_parts(x + y, t, params).envelope;
            let b = amplitude_parts(x - y, t, params).envelope;
            a.conj() * b * Complex64::from_polar(1.0, omega * y)
        };
        if reach > 0.0 {
            total = total.combine(crate::quad::integrate_segments(&f, &[-reach, 0.0, reach], quad)?);
        }
        if omega.abs() > 1e-9 {
            let phase = QuadraticPhase::linear(omega);
            total = total.combine(integrate_oscillatory_halfline(&f, reach, Direction::Forward, &phase, quad)?);
            total = total.combine(integrate_oscillatory_halfline(&f, -reach, Direction::Backward, &phase, quad)?);
        } else {
            total = total.combine(integrate_halfline_mapped(&f, reach, Direction::Forward, quad)?);
            total = total.combine(integrate_halfline_mapped(&f, -reach, Direction::Backward, quad)?);
        }
    }

    let value = total.value / PI;
    let error_estimate = total.error_estimate / PI;
    let limit = 10.0 * quad.target(value.norm()).max(error_estimate);
    if value.im.abs() > limit {
        return Err(ShutterError::NonReal { imag: value.im.abs(), limit });
    }
    Ok(OracleValue {
        value: value.re,
        imag: value.im,
        error_estimate,
    })
}

/// [`wigner_oracle`] at each `eps` of the ladder, extrapolated to `eps = 0`.
pub fn wigner_oracle_extrapolated(
    pp: PhasePoint,
    k: f64,
    t: f64,
    eps_ladder: &[f64],
    quad: &QuadConfig,
) -> Result<f64> {
    let samples = eps_ladder
        .iter()
        .map(|&eps| {
            let v = wigner_oracle(pp, ShutterParams::new(k, eps)?, t, quad)?;
            Ok((eps, Complex64::new(v.value, 0.0)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(richardson_extrapolate(&samples)?.re)
}

/// `int W(x, p) dp` over the support `p > x/t`, integrating between the zeros
/// of the sine factor and accelerating the alternating tail.
pub fn wigner_marginal(x: f64, k: f64, t: f64, quad: &QuadConfig) -> Result<OscIntegralResult> {
    check_time(t)?;
    // sin(2(pt - x)(k - p)) has phase -2t p^2 + 2(kt + x) p - 2kx
    let phase = QuadraticPhase::new(-2.0 * t, 2.0 * (k * t + x)).with_offset(2.0 * k * x);
    let f = |p: f64| Complex64::new(wigner_closed(PhasePoint::new(x, p), k, t).unwrap_or(0.0), 0.0);
    Ok(integrate_oscillatory_halfline(f, x / t, Direction::Forward, &phase, quad)?)
}

/// Fraction of the Wigner weight within `|p - k| < delta`, relative to the
/// box `|p - k| < 10 delta`. Tends to 1 as `hbar -> 0`.
pub fn classical_concentration(k: f64, t: f64, x: f64, units: PhysicalUnits, delta: f64) -> Result<f64> {
    classical_concentration_in_box(k, t, x, units, delta, 10.0 * delta)
}

/// As [`classical_concentration`] with an explicit normalizing box half-width.
pub fn classical_concentration_in_box(
    k: f64,
    t: f64,
    x: f64,
    units: PhysicalUnits,
    delta: f64,
    box_half_width: f64,
) -> Result<f64> {
    check_time(t)?;
    if x >= k * t / units.mass {
        return Err(ShutterError::Domain(format!(
            "classical concentration needs x < kt/m, got x = {x}, kt/m = {}",
            k * t / units.mass
        )));
    }
    if !(delta > 0.0) || !(box_half_width >= delta) {
        return Err(ShutterError::InvalidParameter(format!(
            "need 0 < delta <= box, got delta = {delta}, box = {box_half_width}"
        )));
    }
    let inner = box_integral(k, t, x, units, delta)?;
    let outer = if box_half_width == delta {
        inner
    } else {
        box_integral(k, t, x, units, box_half_width)?
    };
    Ok(inner / outer)
}

fn box_integral(k: f64, t: f64, x: f64, units: PhysicalUnits, half: f64) -> Result<f64> {
    let support = x * units.mass / t;
    let lo = (k - half).max(support);
    let hi = k + half;
    if lo >= hi {
        return Ok(0.0);
    }
    let scale = 2.0 / units.hbar;
    let phase = QuadraticPhase::new(-scale * t / units.mass, scale * (k * t / units.mass + x))
        .with_offset(scale * k * x);
    let f = |p: f64| Complex64::new(wigner_cgs(PhasePoint::new(x, p), k, t, units).unwrap_or(0.0), 0.0);
    let cfg = QuadConfig::with_tolerances(1e-12, 1e-10).with_max_segments(20_000);
    Ok(integrate_oscillatory_finite(f, lo, hi, &phase, &cfg)?.value.re)
}

//! The Moshinsky shutter amplitude `M(x, k, t)`.
//!
//! Natural units `hbar = m = 1`. A beam `exp(ikx)` fills `x < 0` and the
//! absorbing shutter at `x = 0` is removed at `t = 0`:
//!
//! ```text
//! M(x,k,t) = 1/2 exp[i(kx - k^2 t/2)] erfc(e^{-i pi/4} w),   w = (x - kt)/sqrt(2t)
//! ```
//!
//! For real `k` the same amplitude is written with Fresnel integrals, and
//! `|M|^2 = 1/2 {[1/2 - C(w)]^2 + [1/2 - S(w)]^2}`.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_time, Result, ShutterError};
use crate::quad::{
    integrate_oscillatory_halfline, Direction, OscIntegralResult, QuadConfig, QuadraticPhase,
};
use crate::specfun::{erfcx_complex, fresnel};

/// Beam momentum `k` and regularization `eps`; the effective momentum is
/// `k - i*eps`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShutterParams {
    pub k: f64,
    pub eps: f64,
}

impl ShutterParams {
    pub fn new(k: f64, eps: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(ShutterError::InvalidParameter(format!("k must be finite, got {k}")));
        }
        if !(eps >= 0.0 && eps.is_finite()) {
            return Err(ShutterError::InvalidParameter(format!("eps must be >= 0, got {eps}")));
        }
        Ok(Self { k, eps })
    }

    /// Unregularized beam, `eps = 0`.
    pub fn real(k: f64) -> Self {
        Self { k, eps: 0.0 }
    }

    /// `k - i*eps`.
    pub fn momentum(&self) -> Complex64 {
        Complex64::new(self.k, -self.eps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub x: f64,
    pub t: f64,
}

impl SpacetimePoint {
    pub fn new(x: f64, t: f64) -> Self {
        Self { x, t }
    }
}

/// Heaviside step with `step(0) = 1/2`.
pub fn step(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        0.5
    }
}

/// `w = (x - kt)/sqrt(2t)`.
pub fn w_of(pt: SpacetimePoint, k: f64) -> Result<f64> {
    check_time(pt.t)?;
    Ok((pt.x - k * pt.t) / (2.0 * pt.t).sqrt())
}

fn w_complex(x: f64, t: f64, k: Complex64) -> Complex64 {
    (x - k * t) / (2.0 * t).sqrt()
}

/// Plane wave `exp[i(kx - k^2 t/2)]`, valid for complex `k`.
fn plane_wave(x: f64, t: f64, k: Complex64) -> Complex64 {
    (Complex64::i() * (k * x - k * k * (0.5 * t))).exp()
}

/// The shutter amplitude `M(x, k - i eps, t)`.
///
/// With `eps = 0` this evaluates the Fresnel form; with `eps > 0` the erfc
/// form at complex momentum, rearranged so that no intermediate overflows
/// (see `amplitude_parts`).
pub fn m_amplitude(pt: SpacetimePoint, params: ShutterParams) -> Result<Complex64> {
    check_time(pt.t)?;
    if params.eps == 0.0 {
        let w = w_of(pt, params.k)?;
        let f = fresnel(w);
        let bracket = Complex64::new(0.5 - f.c, 0.5 - f.s);
        let phase = params.k * pt.x - 0.5 * params.k * params.k * pt.t - FRAC_PI_4;
        Ok(Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, phase) * bracket)
    } else {
        // plane * erfc written as plane + chirp * erfcx keeps both factors bounded
        let parts = amplitude_parts(pt.x, pt.t, params);
        Ok(parts.plane + chirp(pt.x, pt.t) * parts.envelope)
    }
}

/// Probability density `|M|^2` for a real beam.
pub fn m_density(pt: SpacetimePoint, params: ShutterParams) -> Result<f64> {
    if params.eps != 0.0 {
        return Err(ShutterError::InvalidParameter(
            "m_density is defined for eps = 0; use |m_amplitude|^2 for complex k".into(),
        ));
    }
    let w = w_of(pt, params.k)?;
    Ok(density_from_w(w))
}

/// `1/2 {[1/2 - C(w)]^2 + [1/2 - S(w)]^2}`; the density depends on
/// `(x, t, k)` only through `w`.
pub fn density_from_w(w: f64) -> f64 {
    let f = fresnel(w);
    let a = 0.5 - f.c;
    let b = 0.5 - f.s;
    0.5 * (a * a + b * b)
}

/// Free-particle propagator `U(x - x', t) = exp[i(x-x')^2/2t] / sqrt(2 pi i t)`
/// with `sqrt(i t) = sqrt(t) e^{i pi/4}`.
pub fn propagator(x: f64, xprime: f64, t: f64) -> Result<Complex64> {
    check_time(t)?;
    let d = x - xprime;
    Ok(Complex64::from_polar((2.0 * PI * t).sqrt().recip(), d * d / (2.0 * t) - FRAC_PI_4))
}

fn propagator_unchecked(d: f64, t: f64) -> Complex64 {
    Complex64::from_polar((2.0 * PI * t).sqrt().recip(), d * d / (2.0 * t) - FRAC_PI_4)
}

/// `M(x,t) = int_{-inf}^0 U(x - x', t) exp(i k x') dx'` by oscillatory
/// segment quadrature. The integral is absolutely convergent for `eps > 0`
/// and conditionally convergent at `eps = 0`.
pub fn m_via_propagator(
    pt: SpacetimePoint,
    params: ShutterParams,
    quad: &QuadConfig,
) -> Result<OscIntegralResult> {
    check_time(pt.t)?;
    let k = params.momentum();
    let SpacetimePoint { x, t } = pt;
    let integrand = |xp: f64| propagator_unchecked(x - xp, t) * (Complex64::i() * k * xp).exp();
    let phase = QuadraticPhase::new(0.5 / t, params.k - x / t);
    Ok(integrate_oscillatory_halfline(integrand, 0.0, Direction::Backward, &phase, quad)?)
}

/// Exact split `M(s) = plane + exp(i s^2 / 2t) * envelope`.
///
/// Behind the front (`s < kt`) `plane` is the incident wave and the envelope
/// is `-1/2 erfcx(-z)`; ahead of it `plane = 0` and the envelope is
/// `1/2 erfcx(z)`, with `z = e^{-i pi/4} w`. The envelope is bounded and
/// slowly varying, so every rapidly varying phase of `M` is explicit. Both
/// pieces jump at `s = kt`; their sum is continuous.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct AmplitudeParts {
    pub plane: Complex64,
    pub envelope: Complex64,
}

pub(crate) fn amplitude_parts(s: f64, t: f64, params: ShutterParams) -> AmplitudeParts {
    let k = params.momentum();
    let z = Complex64::from_polar(1.0, -FRAC_PI_4) * w_complex(s, t, k);
    if s < params.k * t {
        AmplitudeParts {
            plane: plane_wave(s, t, k),
            envelope: -0.5 * erfcx_complex(-z),
        }
    } else {
        AmplitudeParts {
            plane: Complex64::new(0.0, 0.0),
            envelope: 0.5 * erfcx_complex(z),
        }
    }
}

/// `exp(i s^2 / 2t)`.
pub(crate) fn chirp(s: f64, t: f64) -> Complex64 {
    Complex64::from_polar(1.0, s * s / (2.0 * t))
}

//! Symplectic tomogram of the shutter state.
//!
//! The tomogram is the probability density of `X = mu x + nu p`. For the
//! shutter state and an admissible frame, `mu (mu t + nu) > 0`,
//!
//! ```text
//! w(X, mu, nu) = 1/(2|mu|) {[1/2 + C(s rho)]^2 + [1/2 + S(s rho)]^2},   s = sign(mu)
//! rho = (k(mu t + nu) - X) / sqrt(2 mu (mu t + nu))
//! ```
//!
//! It is also `|chi|^2 / (2 pi |nu|)` with
//! `chi(X) = int M(u) exp[i(mu u^2/2nu - uX/nu)] du`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_time, Result, ShutterError};
use crate::quad::{
    integrate_halfline_mapped, integrate_oscillatory_halfline, richardson_extrapolate, Direction,
    OscIntegralResult, QuadConfig, QuadraticPhase,
};
use crate::shutter::{amplitude_parts, chirp, ShutterParams};
use crate::specfun::fresnel;
use crate::wigner::PhasePoint;

/// Reference frame `(mu, nu)` of the observable `X = mu x + nu p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub mu: f64,
    pub nu: f64,
}

impl Frame {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if !(mu.is_finite() && nu.is_finite()) {
            return Err(ShutterError::InvalidParameter(format!("frame must be finite, got ({mu}, {nu})")));
        }
        if mu == 0.0 && nu == 0.0 {
            return Err(ShutterError::InvalidParameter("frame (0, 0) is not allowed".into()));
        }
        Ok(Self { mu, nu })
    }

    /// Position frame `(1, 0)`.
    pub const POSITION: Frame = Frame { mu: 1.0, nu: 0.0 };

    pub fn from_angles(tau: f64, theta: f64) -> Result<Self> {
        if !tau.is_finite() || !(0.0..=2.0 * PI).contains(&theta) {
            return Err(ShutterError::InvalidParameter(format!(
                "need finite tau and theta in [0, 2pi], got tau = {tau}, theta = {theta}"
            )));
        }
        Ok(frame_from_angles(tau, theta))
    }

    /// `mu (mu t + nu) > 0`.
    pub fn is_admissible(&self, t: f64) -> bool {
        self.mu * (self.mu * t + self.nu) > 0.0
    }
}

/// `(e^tau cos theta, e^-tau sin theta)`.
pub fn frame_from_angles(tau: f64, theta: f64) -> Frame {
    Frame {
        mu: tau.exp() * theta.cos(),
        nu: (-tau).exp() * theta.sin(),
    }
}

/// Matrix taking `(x, p)` to `(X, P)` in the frame `(tau, theta)`. Its
/// determinant is 1.
pub fn canonical_matrix(tau: f64, theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    let (a, b) = (tau.exp(), (-tau).exp());
    [[a * c, b * s], [-a * s, b * c]]
}

pub fn canonical_map(tau: f64, theta: f64, pp: PhasePoint) -> PhasePoint {
    let m = canonical_matrix(tau, theta);
    PhasePoint {
        x: m[0][0] * pp.x + m[0][1] * pp.p,
        p: m[1][0] * pp.x + m[1][1] * pp.p,
    }
}

/// A point `X` of the tomogram in `frame`, for beam momentum `k` at time `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TomogramPoint {
    #[serde(rename = "X")]
    pub x: f64,
    pub frame: Frame,
    pub k: f64,
    pub t: f64,
}

impl TomogramPoint {
    pub fn new(x: f64, frame: Frame, k: f64, t: f64) -> Result<Self> {
        check_time(t)?;
        Ok(Self { x, frame, k, t })
    }

    fn admissible(&self) -> Result<f64> {
        check_time(self.t)?;
        let Frame { mu, nu } = self.frame;
        let q = mu * (mu * self.t + nu);
        if q > 0.0 {
            Ok(q)
        } else {
            Err(ShutterError::FrameSingular { mu, nu, t: self.t })
        }
    }
}

/// `rho = (k(mu t + nu) - X) / sqrt(2 mu (mu t + nu))`.
pub fn rho_of(tp: TomogramPoint) -> Result<f64> {
    let q = tp.admissible()?;
    let Frame { mu, nu } = tp.frame;
    Ok((tp.k * (mu * tp.t + nu) - tp.x) / (2.0 * q).sqrt())
}

fn bracket(tp: TomogramPoint) -> Result<(f64, f64)> {
    let rho = rho_of(tp)?;
    let f = fresnel(tp.frame.mu.signum() * rho);
    Ok((0.5 + f.c, 0.5 + f.s))
}

/// Closed-form tomogram; nonnegative on every admissible frame.
pub fn tomogram_closed(tp: TomogramPoint) -> Result<f64> {
    let (a, b) = bracket(tp)?;
    Ok((a * a + b * b) / (2.0 * tp.frame.mu.abs()))
}

/// Closed-form `chi(X, mu, nu)` for `nu != 0`.
pub fn chi_closed(tp: TomogramPoint) -> Result<Complex64> {
    let Frame { mu, nu } = tp.frame;
    if nu == 0.0 {
        return Err(ShutterError::NuZero);
    }
    let rho = rho_of(tp)?;
    let (a, b) = bracket(tp)?;
    let ratio = mu / nu;
    let prefactor = (PI / ratio.abs()).sqrt();
    let orientation = if ratio > 0.0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, -1.0) };
    let phase = -tp.x * tp.x * tp.t / (2.0 * nu * (mu * tp.t + nu)) - rho * rho;
    Ok(orientation * Complex64::from_polar(prefactor, phase) * Complex64::new(a, b))
}

/// `chi(X) = int M(u, k - i eps, t) exp[i(mu u^2/2nu - uX/nu)] du` by
/// oscillatory quadrature, for any `nu != 0` (admissible or not).
///
/// `M` is split at the front `u = kt` into the incident plane wave, which
/// lives on `u < kt` and decays like `e^{eps u}`, and the chirped envelope.
pub fn chi_oracle(tp: TomogramPoint, params: ShutterParams, quad: &QuadConfig) -> Result<OscIntegralResult> {
    check_time(tp.t)?;
    let Frame { mu, nu } = tp.frame;
    if nu == 0.0 {
        return Err(ShutterError::NuZero);
    }
    if !(params.eps > 0.0) {
        return Err(ShutterError::InvalidParameter("chi_oracle needs eps > 0".into()));
    }
    if params.k != tp.k {
        return Err(ShutterError::InvalidParameter(format!(
            "beam momentum mismatch: point has k = {}, params have k = {}",
            tp.k, params.k
        )));
    }
    let (t, big_x) = (tp.t, tp.x);
    let front = params.k * t;
    let kernel = move |u: f64| Complex64::from_polar(1.0, mu * u * u / (2.0 * nu) - u * big_x / nu);

    let plane = |u: f64| amplitude_parts(u, t, params).plane * kernel(u);
    let plane_phase = QuadraticPhase::new(mu / (2.0 * nu), params.k - big_x / nu);
    let mut total = if plane_phase.is_oscillatory() {
        integrate_oscillatory_halfline(plane, front, Direction::Backward, &plane_phase, quad)?
    } else {
        integrate_halfline_mapped(plane, front, Direction::Backward, quad)?
    };

    let envelope = |u: f64| amplitude_parts(u, t, params).envelope * chirp(u, t) * kernel(u);
    let envelope_phase = QuadraticPhase::new(0.5 / t + mu / (2.0 * nu), -big_x / nu);
    if !envelope_phase.is_oscillatory() {
        return Err(ShutterError::Domain(
            "chi integrand does not oscillate: X = 0 with mu t + nu = 0".into(),
        ));
    }
    for dir in [Direction::Backward, Direction::Forward] {
        total = total.combine(integrate_oscillatory_halfline(&envelope, front, dir, &envelope_phase, quad)?);
    }
    Ok(total)
}

/// [`chi_oracle`] at each `eps` of the ladder, extrapolated to `eps = 0`.
pub fn chi_oracle_extrapolated(tp: TomogramPoint, eps_ladder: &[f64], quad: &QuadConfig) -> Result<Complex64> {
    let samples = eps_ladder
        .iter()
        .map(|&eps| Ok((eps, chi_oracle(tp, ShutterParams::new(tp.k, eps)?, quad)?.value)))
        .collect::<Result<Vec<_>>>()?;
    Ok(richardson_extrapolate(&samples)?)
}

/// `|chi|^2 / (2 pi |nu|)`.
pub fn tomogram_from_chi(chi: Complex64, nu: f64) -> Result<f64> {
    if nu == 0.0 {
        return Err(ShutterError::NuZero);
    }
    Ok(chi.norm_sqr() / (2.0 * PI * nu.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shutter::{m_density, w_of, SpacetimePoint};

    fn tp(x: f64, mu: f64, nu: f64, k: f64, t: f64) -> TomogramPoint {
        TomogramPoint::new(x, Frame::new(mu, nu).unwrap(), k, t).unwrap()
    }

    #[test]
    fn frames_from_angles() {
        assert_eq!(frame_from_angles(0.0, 0.0), Frame::POSITION);
        let f = frame_from_angles(0.0, PI / 2.0);
        assert!(f.mu.abs() < 1e-16 && (f.nu - 1.0).abs() < 1e-16);
        let f = frame_from_angles(2f64.ln(), 0.0);
        assert!((f.mu - 2.0).abs() < 1e-15 && f.nu == 0.0);
        assert!(Frame::from_angles(0.0, 7.0).is_err());
        assert!(Frame::new(0.0, 0.0).is_err());
    }

    #[test]
    fn canonical_matrix_is_unimodular() {
        for &(tau, theta) in &[(0.0, 0.0), (0.3, 0.2), (-1.2, 4.0), (2.0, 6.0)] {
            let m = canonical_matrix(tau, theta);
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            assert!((det - 1.0).abs() < 1e-13);
        }
        let pp = canonical_map(0.0, 0.0, PhasePoint::new(0.4, -1.1));
        assert_eq!(pp, PhasePoint::new(0.4, -1.1));
    }

    #[test]
    fn rho_examples() {
        let (k, t) = (1.3, 2.0);
        for &x in &[-1.0, 0.5, 4.0] {
            let r = rho_of(tp(x, 1.0, 0.0, k, t)).unwrap();
            let w = w_of(SpacetimePoint::new(x, t), k).unwrap();
            assert!((r + w).abs() < 1e-15);
        }
        assert!((rho_of(tp(0.0, 1.0, 1.0, 1.0, 1.0)).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(rho_of(tp(2.5, 1.0, 0.5, 1.0, 2.0)).unwrap(), 0.0);
    }

    #[test]
    fn singular_frames_are_refused() {
        assert!(matches!(rho_of(tp(0.0, 0.0, 1.0, 1.0, 1.0)), Err(ShutterError::FrameSingular { .. })));
        assert!(matches!(tomogram_closed(tp(0.0, 1.0, -2.0, 1.0, 1.0)), Err(ShutterError::FrameSingular { .. })));
        assert_eq!(chi_closed(tp(0.0, 1.0, 0.0, 1.0, 1.0)), Err(ShutterError::NuZero));
        assert_eq!(tomogram_from_chi(Complex64::new(1.0, 0.0), 0.0), Err(ShutterError::NuZero));
    }

    #[test]
    fn front_values() {
        for &(mu, nu) in &[(1.0, 0.0), (2.0, 0.5), (-1.0, -3.0)] {
            let t = 1.5;
            let v = tomogram_closed(tp(0.7 * (mu * t + nu), mu, nu, 0.7, t)).unwrap();
            assert!((v - 0.25 / f64::abs(mu)).abs() < 1e-15);
        }
        let chi = chi_closed(tp(1.5, 1.0, 0.5, 1.0, 1.0)).unwrap();
        assert!((chi.norm_sqr() - PI * 0.5 * 0.5).abs() < 1e-14);
    }

    #[test]
    fn position_frame_is_the_density() {
        let (k, t) = (1.0, 2.0);
        for i in 0..50 {
            let x = -6.0 + 0.25 * i as f64;
            let a = tomogram_closed(tp(x, 1.0, 0.0, k, t)).unwrap();
            let b = m_density(SpacetimePoint::new(x, t), ShutterParams::real(k)).unwrap();
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn chi_modulus_matches_tomogram() {
        for &(x, mu, nu) in &[(0.3, 1.0, 0.5), (-2.0, 0.7, -0.2), (1.0, -1.0, -2.5)] {
            let p = tp(x, mu, nu, 1.1, 1.3);
            let a = tomogram_from_chi(chi_closed(p).unwrap(), nu).unwrap();
            let b = tomogram_closed(p).unwrap();
            assert!((a - b).abs() < 1e-13 * b.max(1.0));
        }
    }

    #[test]
    fn oracle_checks_arguments() {
        let p = tp(0.0, 1.0, 0.5, 1.0, 1.0);
        let quad = QuadConfig::default();
        assert!(chi_oracle(p, ShutterParams::real(1.0), &quad).is_err());
        assert!(chi_oracle(p, ShutterParams::new(2.0, 0.01).unwrap(), &quad).is_err());
        let q = tp(0.0, 1.0, 0.0, 1.0, 1.0);
        assert_eq!(chi_oracle(q, ShutterParams::new(1.0, 0.01).unwrap(), &quad).unwrap_err(), ShutterError::NuZero);
    }
}

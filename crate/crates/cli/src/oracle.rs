//! Reference values computed without the library's special-function code.

use std::f64::consts::PI;

use num_complex::Complex64;
use shutter_core::quad::{integrate_adaptive, QuadConfig, QuadError};
use shutter_core::FresnelPair;

const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;

/// Maclaurin series of the Fresnel pair, summed until the term drops below 1e-17.
pub fn fresnel_series(w: f64) -> FresnelPair {
    let w4 = w.powi(4);
    let (mut c, mut s) = (0.0, 0.0);
    let mut a = w;
    let mut b = w.powi(3);
    for n in 0..200 {
        let nf = n as f64;
        let tc = a / (4.0 * nf + 1.0);
        let ts = b / (4.0 * nf + 3.0);
        c += tc;
        s += ts;
        if n > 2 && tc.abs() < 1e-17 && ts.abs() < 1e-17 {
            break;
        }
        a *= -w4 / ((2.0 * nf + 1.0) * (2.0 * nf + 2.0));
        b *= -w4 / ((2.0 * nf + 2.0) * (2.0 * nf + 3.0));
    }
    FresnelPair::new(SQRT_2_OVER_PI * c, SQRT_2_OVER_PI * s)
}

/// Fresnel pair from Gauss-Kronrod integrals of `exp(i y^2)` between
/// consecutive points `sqrt(m pi / 2)`.
pub fn fresnel_quadrature(w: f64) -> FresnelPair {
    let a = w.abs();
    let mut points = vec![0.0];
    let mut m = 1.0;
    while (m * PI / 2.0).sqrt() < a {
        points.push((m * PI / 2.0).sqrt());
        m += 1.0;
    }
    points.push(a);
    let cfg = QuadConfig::with_tolerances(1e-14, 1e-13);
    let f = |y: f64| Complex64::from_polar(1.0, y * y);
    let v: Complex64 = points
        .windows(2)
        .map(|p| match integrate_adaptive(f, p[0], p[1], &cfg) {
            Ok(r) => r.value,
            // a tolerance near machine precision may not be certifiable; keep the best value
            Err(QuadError::BudgetExhausted { best }) => best.value,
            Err(other) => panic!("fresnel quadrature oracle: {other}"),
        })
        .sum();
    let sign = if w < 0.0 { -1.0 } else { 1.0 };
    FresnelPair::new(sign * SQRT_2_OVER_PI * v.re, sign * SQRT_2_OVER_PI * v.im)
}

/// `1/2 {[1/2 - C]^2 + [1/2 - S]^2}` from the series oracle.
pub fn density_series(w: f64) -> f64 {
    let f = fresnel_series(w);
    0.5 * ((0.5 - f.c).powi(2) + (0.5 - f.s).powi(2))
}

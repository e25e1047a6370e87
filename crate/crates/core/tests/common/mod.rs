#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;

pub const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;

/// Maclaurin series of the Fresnel pair, summed until the term drops below 1e-17.
pub fn fresnel_series(w: f64) -> (f64, f64) {
    let w2 = w * w;
    let w4 = w2 * w2;
    let (mut c, mut s) = (0.0, 0.0);
    // a_n = (-1)^n w^{4n+1} / (2n)!,  b_n = (-1)^n w^{4n+3} / (2n+1)!
    let mut a = w;
    let mut b = w * w2;
    for n in 0..200 {
        let nf = n as f64;
        let tc = a / (4.0 * nf + 1.0);
        let ts = b / (4.0 * nf + 3.0);
        c += tc;
        s += ts;
        if tc.abs() < 1e-17 && ts.abs() < 1e-17 && n > 2 {
            break;
        }
        a *= -w4 / ((2.0 * nf + 1.0) * (2.0 * nf + 2.0));
        b *= -w4 / ((2.0 * nf + 2.0) * (2.0 * nf + 3.0));
    }
    (SQRT_2_OVER_PI * c, SQRT_2_OVER_PI * s)
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite Gauss-Legendre over the given breakpoints.
pub fn gl_sum<F: Fn(f64) -> Complex64>(f: F, points: &[f64], sub: usize, rule: &[(f64, f64)]) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for w in points.windows(2) {
        let h = (w[1] - w[0]) / sub as f64;
        for j in 0..sub {
            let a = w[0] + h * j as f64;
            let (c, r) = (a + 0.5 * h, 0.5 * h);
            for &(x, wt) in rule {
                total += f(c + r * x) * (wt * r);
            }
        }
    }
    total
}

/// Fresnel pair by summing the integral of exp(i y^2) between consecutive
/// zeros of cos(y^2) and sin(y^2).
pub fn fresnel_quadrature(w: f64) -> (f64, f64) {
    let rule = gauss_legendre(20);
    let a = w.abs();
    let mut pts = vec![0.0];
    let mut m = 1.0;
    loop {
        let z = (m * PI / 2.0).sqrt();
        if z >= a {
            break;
        }
        pts.push(z);
        m += 1.0;
    }
    pts.push(a);
    let v = gl_sum(|y| Complex64::from_polar(1.0, y * y), &pts, 2, &rule) * SQRT_2_OVER_PI;
    let sign = if w < 0.0 { -1.0 } else { 1.0 };
    (sign * v.re, sign * v.im)
}

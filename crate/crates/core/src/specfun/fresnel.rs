use num_complex::Complex64;

use super::{FresnelPair, SQRT_2_OVER_PI};

/// Switch point between the Maclaurin series and the continued fraction.
const SERIES_LIMIT: f64 = 3.0;
const SERIES_CUTOFF: f64 = 1e-17;
const CF_MAX_TERMS: usize = 200;

/// Fresnel integrals `(C(w), S(w))` with the `sqrt(2/pi) int_0^w cos(y^2) dy`
/// normalization. Odd in `w`, limits `+-1/2` at `+-inf`.
pub fn fresnel(w: f64) -> FresnelPair {
    let a = w.abs();
    let pair = if a == 0.0 {
        FresnelPair::ZERO
    } else if a <= SERIES_LIMIT {
        series(a)
    } else {
        auxiliary_cf(a)
    };
    if w < 0.0 {
        -pair
    } else {
        pair
    }
}

/// Alternating Maclaurin series. Generates `w^(2m+1)/m!` once and routes even
/// `m` to C, odd `m` to S, with sign `(-1)^(m/2)`.
fn series(w: f64) -> FresnelPair {
    let w2 = w * w;
    let mut term = w;
    let mut c = 0.0;
    let mut s = 0.0;
    let mut m = 0usize;
    loop {
        let contrib = term / (2 * m + 1) as f64;
        let signed = if (m / 2) % 2 == 0 { contrib } else { -contrib };
        if m % 2 == 0 {
            c += signed;
        } else {
            s += signed;
        }
        if contrib.abs() < SERIES_CUTOFF && m > 2 {
            break;
        }
        m += 1;
        term *= w2 / m as f64;
    }
    FresnelPair::new(SQRT_2_OVER_PI * c, SQRT_2_OVER_PI * s)
}

/// Auxiliary-function form `C + iS = (1+i)/2 * (1 - e^{i w^2} h)`, where
/// `h` is evaluated as a continued fraction by the modified Lentz method.
fn auxiliary_cf(w: f64) -> FresnelPair {
    // argument mapped to the cos(pi z^2 / 2) convention
    let z = w * SQRT_2_OVER_PI;
    let pix2 = 2.0 * w * w;
    let tiny = 1e-300;
    let one = Complex64::new(1.0, 0.0);

    let mut b = Complex64::new(1.0, -pix2);
    let mut cc = Complex64::new(1.0 / tiny, 0.0);
    let mut d = one / b;
    let mut h = d;
    let mut n = -1.0f64;
    for _ in 2..CF_MAX_TERMS {
        n += 2.0;
        let a = -n * (n + 1.0);
        b += 4.0;
        d = one / (d * a + b);
        cc = b + a / cc;
        let del = cc * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 1e-16 {
            break;
        }
    }
    h *= Complex64::new(z, -z);
    let phase = Complex64::from_polar(1.0, w * w);
    let cs = Complex64::new(0.5, 0.5) * (one - phase * h);
    FresnelPair::new(cs.re, cs.im)
}

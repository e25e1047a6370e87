//! Special functions used by the shutter amplitude and its phase-space
//! transforms.
//!
//! Fresnel integrals follow the normalization
//!
//! ```text
//! C(w) = sqrt(2/pi) * int_0^w cos(y^2) dy,   S(w) = sqrt(2/pi) * int_0^w sin(y^2) dy
//! ```
//!
//! so that `C, S -> 1/2` as `w -> +inf`. This is *not* the `cos(pi y^2 / 2)`
//! convention used by most libraries; the two are related by
//! `C(w) = C_std(w * sqrt(2/pi))`.

mod erfc;
mod fresnel;

pub use erfc::{erfc_complex, erfcx_complex, faddeeva};
pub use fresnel::fresnel;

use num_complex::Complex64;

/// Complex amplitude carrier used across the crate.
pub type ComplexValue = Complex64;

/// `sqrt(2/pi)`.
pub const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;

/// `1/sqrt(pi)`.
pub const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

/// Values of the Fresnel cosine and sine integrals at one argument.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FresnelPair {
    pub c: f64,
    pub s: f64,
}

impl FresnelPair {
    pub const ZERO: FresnelPair = FresnelPair { c: 0.0, s: 0.0 };

    pub fn new(c: f64, s: f64) -> Self {
        Self { c, s }
    }

    /// `C + iS`.
    pub fn as_complex(self) -> ComplexValue {
        ComplexValue::new(self.c, self.s)
    }
}

impl std::ops::Neg for FresnelPair {
    type Output = FresnelPair;

    fn neg(self) -> FresnelPair {
        FresnelPair::new(-self.c, -self.s)
    }
}

/// `sin(z)/z` with the removable singularity filled in.
pub fn sinc(z: f64) -> f64 {
    // 1 - z^2/6 + z^4/120 is exact to round-off below 1e-4
    if z.abs() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 6.0 * (1.0 - z2 / 20.0)
    } else {
        z.sin() / z
    }
}

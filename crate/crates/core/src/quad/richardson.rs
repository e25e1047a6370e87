use num_complex::Complex64;

use super::QuadError;

/// Extrapolates `(eps, value)` samples to `eps = 0` with the interpolating
/// polynomial through all samples (degree `n - 1`), evaluated by Neville's
/// scheme.
pub fn richardson_extrapolate(samples: &[(f64, Complex64)]) -> Result<Complex64, QuadError> {
    if samples.len() < 2 {
        return Err(QuadError::InsufficientSamples(samples.len()));
    }
    for (i, &(e, _)) in samples.iter().enumerate() {
        if !(e > 0.0 && e.is_finite()) {
            return Err(QuadError::DegenerateNodes);
        }
        if samples[..i].iter().any(|&(o, _)| o == e) {
            return Err(QuadError::DegenerateNodes);
        }
    }
    let xs: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let mut p: Vec<Complex64> = samples.iter().map(|s| s.1).collect();
    let n = p.len();
    for level in 1..n {
        for i in 0..n - level {
            let (xi, xj) = (xs[i], xs[i + level]);
            // P(0) from the two overlapping lower-degree interpolants
            p[i] = (p[i + 1] * xi - p[i] * xj) / (xi - xj);
        }
    }
    Ok(p[0])
}

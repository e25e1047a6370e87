use num_complex::Complex64;

use super::{OscIntegralResult, QuadConfig, QuadError};

// 15-point Kronrod extension of the 7-point Gauss rule. Gauss nodes are the
// odd-indexed Kronrod nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

fn gk15<F>(f: &F, a: f64, b: f64) -> Result<Panel, QuadError>
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<Complex64, QuadError> {
        let v = f(x);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(QuadError::NonFinite { at: x })
        }
    };

    let mut fv1 = [Complex64::new(0.0, 0.0); 7];
    let mut fv2 = [Complex64::new(0.0, 0.0); 7];
    let fc = eval(center)?;
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += (f1 + f2) * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            res_g += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }

    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((res_k - res_g) * half).norm();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel { a, b, value, error })
}

/// Globally adaptive Gauss-Kronrod quadrature of `f` over `[a, b]`.
///
/// The panel with the largest error estimate is bisected until the summed
/// error estimate meets `max(abs_tol, rel_tol * |value|)` or the panel count
/// reaches `cfg.max_segments`.
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<OscIntegralResult, QuadError>
where
    F: Fn(f64) -> Complex64,
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(QuadError::InvalidInterval { a, b });
    }
    if a == b {
        return Ok(OscIntegralResult::zero());
    }

    let mut panels = vec![gk15(&f, a, b)?];
    loop {
        let (value, error) = totals(&panels);
        let result = OscIntegralResult {
            value,
            error_estimate: error,
            segments_used: panels.len(),
            accelerated: false,
        };
        if error <= cfg.target(value.norm()) {
            return Ok(result);
        }
        if panels.len() >= cfg.max_segments {
            return Err(QuadError::BudgetExhausted { best: result });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let p = panels[worst];
        let mid = 0.5 * (p.a + p.b);
        if !(mid > p.a && mid < p.b) {
            // panel cannot be split further in floating point
            return Err(QuadError::BudgetExhausted { best: result });
        }
        let left = gk15(&f, p.a, mid)?;
        let right = gk15(&f, mid, p.b)?;
        panels[worst] = left;
        panels.insert(worst + 1, right);
    }
}

// Panels stay sorted by position, so the reduction order is fixed.
fn totals(panels: &[Panel]) -> (Complex64, f64) {
    panels.iter().fold((Complex64::new(0.0, 0.0), 0.0), |(v, e), p| (v + p.value, e + p.error))
}

/// Integrates over consecutive intervals `[points[i], points[i+1]]` and sums
/// the pieces. Each piece gets the full configuration.
pub fn integrate_segments<F>(f: F, points: &[f64], cfg: &QuadConfig) -> Result<OscIntegralResult, QuadError>
where
    F: Fn(f64) -> Complex64,
{
    let mut total = OscIntegralResult::zero();
    for w in points.windows(2) {
        let piece = integrate_adaptive(&f, w[0], w[1], cfg)?;
        total = total.combine(piece);
    }
    Ok(total)
}

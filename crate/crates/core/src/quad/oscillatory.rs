use std::f64::consts::PI;

use num_complex::Complex64;

use super::{integrate_adaptive, OscIntegralResult, QuadConfig, QuadError};

/// Orientation of a half-line `[start, +inf)` or `(-inf, start]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn sign(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Backward => -1.0,
        }
    }
}

/// Produces segment boundaries for an oscillatory integrand, walking away
/// from `start` in `direction`.
pub trait ZeroLocator {
    type Iter: Iterator<Item = f64>;

    fn breakpoints(&self, start: f64, direction: Direction) -> Self::Iter;

    /// Point beyond which the phase is monotone in the walking direction.
    /// The half-line integrator does not test convergence before it.
    fn monotone_from(&self, _start: f64, _direction: Direction) -> Option<f64> {
        None
    }
}

/// Phase `phi(y) = quad * y^2 + lin * y`. Breakpoints are the points where
/// `phi` crosses `offset + m*pi`, plus the vertex of the parabola when it lies
/// ahead. Roots come from the quadratic formula, not a numerical search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticPhase {
    pub quad: f64,
    pub lin: f64,
    pub offset: f64,
}

impl QuadraticPhase {
    pub fn new(quad: f64, lin: f64) -> Self {
        Self { quad, lin, offset: 0.0 }
    }

    pub fn linear(lin: f64) -> Self {
        Self::new(0.0, lin)
    }

    pub fn with_offset(mut self, offset: f64) -> Self {
        self.offset = offset;
        self
    }

    pub fn eval(&self, y: f64) -> f64 {
        (self.quad * y + self.lin) * y
    }

    pub fn is_oscillatory(&self) -> bool {
        self.quad != 0.0 || self.lin != 0.0
    }
}

impl ZeroLocator for QuadraticPhase {
    type Iter = QuadraticPhaseZeros;

    fn breakpoints(&self, start: f64, direction: Direction) -> QuadraticPhaseZeros {
        let dir = direction.sign();
        // in the walking variable s >= 0: g(s) = c s^2 + e s + g0
        let c = self.quad;
        let e = dir * (2.0 * self.quad * start + self.lin);
        let g0 = self.eval(start) - self.offset;
        let vertex = if c != 0.0 && -e / (2.0 * c) > 0.0 {
            Some(-e / (2.0 * c))
        } else {
            None
        };
        let mut it = QuadraticPhaseZeros {
            start,
            dir,
            c,
            e,
            g0,
            s: 0.0,
            vertex,
            level: 0.0,
            rising: false,
            done: !self.is_oscillatory(),
        };
        it.enter_piece(0.0);
        it
    }

    fn monotone_from(&self, start: f64, direction: Direction) -> Option<f64> {
        let dir = direction.sign();
        let c = self.quad;
        let e = dir * (2.0 * self.quad * start + self.lin);
        if c != 0.0 && -e / (2.0 * c) > 0.0 {
            Some(start + dir * (-e / (2.0 * c)))
        } else {
            None
        }
    }
}

/// Iterator over the breakpoints of a [`QuadraticPhase`].
#[derive(Debug, Clone)]
pub struct QuadraticPhaseZeros {
    start: f64,
    dir: f64,
    c: f64,
    e: f64,
    g0: f64,
    s: f64,
    vertex: Option<f64>,
    level: f64,
    rising: bool,
    done: bool,
}

impl QuadraticPhaseZeros {
    fn g(&self, s: f64) -> f64 {
        (self.c * s + self.e) * s + self.g0
    }

    fn slope(&self, s: f64) -> f64 {
        2.0 * self.c * s + self.e
    }

    /// Sets the monotonic direction and the first level strictly beyond g(s).
    fn enter_piece(&mut self, s: f64) {
        // slope just inside the piece
        let probe = match self.vertex {
            Some(v) if s < v => 0.5 * (s + v),
            _ => s + 1.0,
        };
        self.rising = self.slope(probe) > 0.0;
        let m = self.g(s) / PI;
        self.level = if self.rising { m.floor() + 1.0 } else { m.ceil() - 1.0 };
    }

    /// Root of g(s) = level*pi in [lo, hi].
    fn solve(&self, lo: f64, hi: f64) -> Option<f64> {
        let k = self.g0 - self.level * PI;
        let tol = 1e-12 * (1.0 + lo.abs());
        let roots = if self.c == 0.0 {
            if self.e == 0.0 {
                return None;
            }
            [Some(-k / self.e), None]
        } else {
            let disc = self.e * self.e - 4.0 * self.c * k;
            if disc < 0.0 {
                return None;
            }
            let sgn = if self.e >= 0.0 { 1.0 } else { -1.0 };
            let q = -0.5 * (self.e + sgn * disc.sqrt());
            let r1 = q / self.c;
            let r2 = if q != 0.0 { k / q } else { f64::NAN };
            [Some(r1), Some(r2)]
        };
        roots
            .into_iter()
            .flatten()
            .filter(|r| r.is_finite() && *r > lo - tol && *r <= hi + tol && *r > self.s)
            .min_by(|a, b| a.total_cmp(b))
    }
}

impl Iterator for QuadraticPhaseZeros {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        if self.done {
            return None;
        }
        let hi = match self.vertex {
            Some(v) if self.s < v => v,
            _ => f64::INFINITY,
        };
        let past_vertex = hi.is_finite()
            && if self.rising {
                self.level * PI >= self.g(hi)
            } else {
                self.level * PI <= self.g(hi)
            };
        let next_s = if past_vertex {
            let v = hi;
            self.s = v;
            self.enter_piece(v);
            Some(v)
        } else {
            match self.solve(self.s, hi) {
                Some(r) => {
                    self.s = r;
                    self.level += if self.rising { 1.0 } else { -1.0 };
                    Some(r)
                }
                None => None,
            }
        };
        match next_s {
            Some(s) => Some(self.start + self.dir * s),
            None => {
                self.done = true;
                None
            }
        }
    }
}

/// Integral of `f` over a half-line starting at `start`, with segments
/// delimited by `zeros`.
///
/// Segments are integrated adaptively and the partial sums accelerated by
/// `cfg.acceleration_depth` passes of pairwise averaging. When the segment
/// values in the acceleration window stop alternating, the accelerated value
/// is not trusted and plain truncation is used (`accelerated == false`).
/// For `Direction::Backward` the result is the integral over `(-inf, start]`
/// with the usual orientation.
pub fn integrate_oscillatory_halfline<F, Z>(
    f: F,
    start: f64,
    direction: Direction,
    zeros: &Z,
    cfg: &QuadConfig,
) -> Result<OscIntegralResult, QuadError>
where
    F: Fn(f64) -> Complex64,
    Z: ZeroLocator,
{
    cfg.validate()?;
    if !start.is_finite() {
        return Err(QuadError::InvalidInterval { a: start, b: start });
    }
    let seg_cfg = QuadConfig {
        abs_tol: cfg.abs_tol * 0.1,
        rel_tol: cfg.rel_tol * 0.1,
        max_segments: 200,
        acceleration_depth: 0,
    };
    let depth = cfg.acceleration_depth;
    let window = depth + 1;

    let mut segments: Vec<Complex64> = Vec::new();
    let mut partial: Vec<Complex64> = Vec::new();
    let mut running = Complex64::new(0.0, 0.0);
    let mut quad_error = 0.0;
    let mut prev = start;
    let mut estimates: Vec<Complex64> = Vec::new();
    let mut best = OscIntegralResult::zero();
    let dir = direction.sign();
    let monotone_from = zeros.monotone_from(start, direction);
    // number of segments completed before the phase became monotone
    let mut settled_at = if monotone_from.is_none() { Some(0) } else { None };

    for bp in zeros.breakpoints(start, direction) {
        if segments.len() >= cfg.max_segments {
            return Err(QuadError::BudgetExhausted { best });
        }
        let (lo, hi) = if bp > prev { (prev, bp) } else { (bp, prev) };
        let seg = match integrate_adaptive(&f, lo, hi, &seg_cfg) {
            Ok(r) => r,
            Err(QuadError::BudgetExhausted { best: r }) => r,
            Err(e) => return Err(e),
        };
        prev = bp;
        quad_error += seg.error_estimate;
        running += seg.value;
        segments.push(seg.value);
        partial.push(running);

        let n = partial.len();
        if settled_at.is_none() && monotone_from.is_some_and(|m| dir * (bp - m) >= 0.0) {
            settled_at = Some(n);
        }
        // plain truncation estimate
        let plain_err = seg.value.norm();
        let settled_count = settled_at.map_or(0, |m| n - m);
        if settled_count < window + 2 {
            best = OscIntegralResult {
                value: running,
                error_estimate: plain_err + quad_error,
                segments_used: n,
                accelerated: false,
            };
            continue;
        }

        let alternating = segments[n - window..]
            .windows(2)
            .all(|w| (w[1] * w[0].conj()).re < 0.0);
        let estimate = averaged(&partial[n - window..]);
        estimates.push(estimate);

        let (value, trunc_err, accelerated) = if alternating && estimates.len() >= 3 {
            let m = estimates.len();
            let d1 = (estimates[m - 1] - estimates[m - 2]).norm();
            let d2 = (estimates[m - 2] - estimates[m - 3]).norm();
            (estimate, d1.max(d2), true)
        } else if alternating {
            (estimate, f64::INFINITY, true)
        } else {
            (running, plain_err, false)
        };
        best = OscIntegralResult {
            value,
            error_estimate: trunc_err + quad_error,
            segments_used: n,
            accelerated,
        };
        if best.error_estimate <= cfg.target(value.norm()) {
            return Ok(best);
        }
    }
    if segments.is_empty() {
        return Err(QuadError::NonOscillatory);
    }
    Err(QuadError::BudgetExhausted { best })
}

/// `depth` passes of pairwise averaging of the window, i.e. the binomially
/// weighted mean of the partial sums.
fn averaged(window: &[Complex64]) -> Complex64 {
    let mut row: Vec<Complex64> = window.to_vec();
    while row.len() > 1 {
        row = row.windows(2).map(|w| (w[0] + w[1]) * 0.5).collect();
    }
    row[0]
}

/// Integral over the finite interval `[a, b]` split at the breakpoints of
/// `zeros` that fall inside. No acceleration; every segment gets the full
/// tolerance share `cfg / segments`.
pub fn integrate_oscillatory_finite<F, Z>(
    f: F,
    a: f64,
    b: f64,
    zeros: &Z,
    cfg: &QuadConfig,
) -> Result<OscIntegralResult, QuadError>
where
    F: Fn(f64) -> Complex64,
    Z: ZeroLocator,
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(QuadError::InvalidInterval { a, b });
    }
    let mut points = vec![a];
    for bp in zeros.breakpoints(a, Direction::Forward) {
        if bp >= b {
            break;
        }
        if points.len() > cfg.max_segments {
            return Err(QuadError::BudgetExhausted {
                best: OscIntegralResult::zero(),
            });
        }
        points.push(bp);
    }
    points.push(b);
    let seg_cfg = QuadConfig {
        abs_tol: cfg.abs_tol / points.len() as f64,
        max_segments: 200,
        ..*cfg
    };
    let mut total = OscIntegralResult::zero();
    for w in points.windows(2) {
        total = total.combine(integrate_adaptive(&f, w[0], w[1], &seg_cfg)?);
    }
    Ok(total)
}

/// Half-line integral of a non-oscillatory, decaying integrand through the
/// map `y = start + dir * (1 - s)/s`, `s in (0, 1]`.
pub fn integrate_halfline_mapped<F>(
    f: F,
    start: f64,
    direction: Direction,
    cfg: &QuadConfig,
) -> Result<OscIntegralResult, QuadError>
where
    F: Fn(f64) -> Complex64,
{
    let dir = direction.sign();
    let g = |s: f64| {
        let y = start + dir * (1.0 - s) / s;
        f(y) / (s * s)
    };
    integrate_adaptive(g, 0.0, 1.0, cfg)
}

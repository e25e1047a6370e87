//! Oracle and invariant checks run by `shutter verify`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};
use std::fmt;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use shutter_core::specfun::erfc_complex;
use shutter_core::{
    chi_oracle_extrapolated, classical_concentration, fresnel, m_amplitude, m_density, m_via_propagator,
    tomogram_closed, tomogram_from_chi, wigner_closed, wigner_marginal, wigner_oracle, wigner_oracle_extrapolated,
    Frame, FresnelPair, PhasePoint, PhysicalUnits, QuadConfig, SampleTable, ShutterParams, SpacetimePoint,
    TomogramPoint, DEFAULT_EPS_LADDER,
};

use crate::args::{Fault, Scenario};
use crate::commands::{cmd_density, cmd_wigner};
use crate::oracle::{fresnel_quadrature, fresnel_series};

/// Wall-time budget for the full suite; exceeding it prints a warning.
pub const FULL_BUDGET: Duration = Duration::from_secs(120);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

/// How `value` is compared with `limit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    AtMost,
    Below,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub bound: Bound,
    pub limit: f64,
}

impl Check {
    fn at_most(name: &'static str, value: f64, limit: f64) -> Self {
        Self { name, value, bound: Bound::AtMost, limit }
    }

    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::AtMost => self.value <= self.limit,
            Bound::Below => self.value < self.limit,
            Bound::AtLeast => self.value >= self.limit,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub level: Level,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.name.to_string()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<26} {:>13}    {:<13} {}", "check", "value", "limit", "status")?;
        for c in &self.checks {
            let op = match c.bound {
                Bound::AtMost => "<=",
                Bound::Below => "<",
                Bound::AtLeast => ">=",
            };
            let status = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{:<26} {:>13.3e} {:>2} {:<13.3e} {}", c.name, c.value, op, c.limit, status)?;
        }
        let level = match self.level {
            Level::Quick => "quick",
            Level::Full => "full",
        };
        write!(
            f,
            "{level}: {}/{} passed in {:.2} s",
            self.checks.iter().filter(|c| c.passed()).count(),
            self.checks.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

fn fresnel_with(fault: Option<Fault>) -> impl Fn(f64) -> FresnelPair {
    move |w| {
        let f = fresnel(w);
        match fault {
            // sqrt(2/pi) off by one part in a million
            Some(Fault::Fresnel) => FresnelPair::new(f.c * (1.0 + 1e-6), f.s * (1.0 + 1e-6)),
            None => f,
        }
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

pub fn run(level: Level, fault: Option<Fault>) -> Report {
    let start = Instant::now();
    let full = level == Level::Full;
    let fr = fresnel_with(fault);
    let quad = QuadConfig::default();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut checks = Vec::new();

    // configuration space
    let front = max_of([0.5, 1.0, 2.0].iter().flat_map(|&k| {
        [0.5, 2.0, 10.0]
            .iter()
            .map(move |&t| (m_density(SpacetimePoint::new(k * t, t), ShutterParams::real(k)).unwrap() - 0.25).abs())
    }));
    checks.push(Check::at_most("front-value", front, 1e-12));

    let series = max_of((0..200).map(|i| {
        let w = -3.0 + 6.0 * (i as f64 + 0.5) / 200.0;
        let (a, b) = (fr(w), fresnel_series(w));
        (a.c - b.c).abs().max((a.s - b.s).abs())
    }));
    checks.push(Check::at_most("fresnel-series", series, 1e-12));

    let outer = max_of((0..50).map(|i| {
        let a = 3.0 + 27.0 * (i as f64 + 1.0) / 50.0;
        let w = if i % 2 == 0 { a } else { -a };
        let (x, y) = (fr(w), fresnel_quadrature(w));
        (x.c - y.c).abs().max((x.s - y.s).abs())
    }));
    checks.push(Check::at_most("fresnel-quadrature", outer, 1e-8));

    let odd = max_of((0..1000).map(|_| {
        let w = rng.gen_range(-20.0..20.0);
        let (a, b) = (fr(w), fr(-w));
        (a.c + b.c).abs().max((a.s + b.s).abs())
    }));
    checks.push(Check::at_most("fresnel-oddness", odd, 1e-14));

    let reflection = max_of((0..1000).map(|_| {
        let z = Complex64::from_polar(rng.gen_range(0.0..5.0), rng.gen_range(0.0..2.0 * PI));
        let a = erfc_complex(z);
        (a + erfc_complex(-z) - 2.0).norm() / a.norm().max(1.0)
    }));
    checks.push(Check::at_most("erfc-reflection", reflection, 1e-12));

    let rot = Complex64::from_polar(1.0, -FRAC_PI_4);
    let cross = max_of((0..=400).map(|i| {
        let w = -10.0 + 0.05 * i as f64;
        let f = fr(w);
        (0.5 * erfc_complex(rot * w) - rot * FRAC_1_SQRT_2 * Complex64::new(0.5 - f.c, 0.5 - f.s)).norm()
    }));
    checks.push(Check::at_most("erfc-fresnel", cross, 1e-12));

    let n = if full { 100 } else { 30 };
    let identity = max_of([0.5, 1.0, 2.0].iter().flat_map(|&k| {
        (0..n).flat_map(move |i| {
            (0..n).map(move |j| {
                let pt = SpacetimePoint::new(-10.0 + 20.0 * i as f64 / (n - 1) as f64, 0.05 + 10.0 * j as f64 / (n - 1) as f64);
                let p = ShutterParams::real(k);
                (m_amplitude(pt, p).unwrap().norm_sqr() - m_density(pt, p).unwrap()).abs()
            })
        })
    }));
    checks.push(Check::at_most("density-identity", identity, 1e-12));

    let eps_values: &[f64] = if full { &[1e-2, 1e-3] } else { &[1e-2] };
    let per_eps = if full { 10 } else { 5 };
    let mut prop = 0.0f64;
    for &eps in eps_values {
        for _ in 0..per_eps {
            let (k, t) = (rng.gen_range(0.3..2.5), rng.gen_range(0.2..5.0));
            let pt = SpacetimePoint::new(k * t + rng.gen_range(-5.0..5.0), t);
            let p = ShutterParams::new(k, eps).unwrap();
            let err = match m_via_propagator(pt, p, &quad) {
                Ok(r) => (r.value - m_amplitude(pt, p).unwrap()).norm(),
                Err(_) => f64::INFINITY,
            };
            prop = prop.max(err);
        }
    }
    checks.push(Check::at_most("propagator-oracle", prop, 1e-6));

    // phase space
    let samples = if full { 10_000 } else { 1_000 };
    let support = max_of((0..samples).map(|_| {
        let (p, t, k) = (rng.gen_range(-5.0..5.0), rng.gen_range(0.01..10.0), rng.gen_range(-3.0..3.0));
        let x = p * t + rng.gen_range(1e-9..20.0);
        wigner_closed(PhasePoint::new(x, p), k, t).unwrap().abs()
    }));
    checks.push(Check::at_most("wigner-support", support, 0.0));

    let default_grid = cmd_wigner(&Scenario::default()).expect("default wigner grid");
    let min_w = default_grid.column("W").unwrap().into_iter().fold(f64::INFINITY, f64::min);
    checks.push(Check { name: "wigner-sign-indefinite", value: min_w, bound: Bound::Below, limit: 0.0 });

    let wigner_points = [
        (0.0, 1.0, 1.0),
        (-1.0, 1.0, 1.0),
        (0.5, 0.7, 1.0),
        (-0.5, 1.6, 1.0),
        (0.9, 1.0, 1.0),
        (0.95, 1.05, 1.0),
        (-2.0, 0.0, 1.0),
        (1.2, 1.1, 1.0),
        (0.3, 2.5, 1.0),
        (0.0, 1.0, 2.0),
    ];
    let wigner_err = max_of(wigner_points.iter().map(|&(x, p, k)| {
        let pp = PhasePoint::new(x, p);
        let t = 1.0;
        let closed = wigner_closed(pp, k, t).unwrap();
        if full {
            wigner_oracle_extrapolated(pp, k, t, &DEFAULT_EPS_LADDER, &quad).map_or(f64::INFINITY, |v| (v - closed).abs())
        } else {
            // at finite eps the definitional integral is exactly e^{2 eps (x - pt)} W
            let eps = 1e-2;
            let damped = (2.0 * eps * (x - p * t)).exp() * closed;
            wigner_oracle(pp, ShutterParams::new(k, eps).unwrap(), t, &quad)
                .map_or(f64::INFINITY, |v| (v.value - damped).abs())
        }
    }));
    checks.push(Check::at_most("wigner-oracle", wigner_err, if full { 1e-4 } else { 1e-6 }));

    let (mut core, mut tail) = (0.0f64, 0.0f64);
    for i in 0..20 {
        let (k, t) = (1.0, 2.0);
        let w = -5.0 + 10.0 * i as f64 / 19.0;
        let x = k * t + w * (2.0 * t as f64).sqrt();
        let err = wigner_marginal(x, k, t, &quad).map_or(f64::INFINITY, |m| {
            (m.value.re - m_density(SpacetimePoint::new(x, t), ShutterParams::real(k)).unwrap()).abs()
        });
        if w.abs() <= 2.0 {
            core = core.max(err);
        } else {
            tail = tail.max(err);
        }
    }
    checks.push(Check::at_most("wigner-marginal-core", core, 1e-3));
    checks.push(Check::at_most("wigner-marginal-tail", tail, 2e-2));

    let sharp = classical_concentration(1.0, 1.0, 0.0, PhysicalUnits::new(1e-3, 1.0).unwrap(), 0.05).unwrap_or(0.0);
    checks.push(Check { name: "classical-sharp", value: sharp, bound: Bound::AtLeast, limit: 0.95 });
    let broad = classical_concentration(1.0, 1.0, 0.0, PhysicalUnits::NATURAL, 0.05).unwrap_or(1.0);
    checks.push(Check { name: "classical-broad", value: broad, bound: Bound::Below, limit: 0.9 });

    // tomography
    let min_tomogram = (0..samples)
        .map(|_| {
            let (k, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(0.05..5.0));
            let frame = loop {
                let (mu, nu) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                if mu * (mu * t + nu) > 0.0 {
                    break Frame { mu, nu };
                }
            };
            let tp = TomogramPoint { x: rng.gen_range(-20.0..20.0), frame, k, t };
            tomogram_closed(tp).unwrap()
        })
        .fold(f64::INFINITY, f64::min);
    checks.push(Check { name: "tomogram-positivity", value: min_tomogram, bound: Bound::AtLeast, limit: 0.0 });

    let reduction = max_of((0..200).map(|i| {
        let (k, t) = (1.0, 2.0f64);
        let x = k * t - 10.0 * t.sqrt() + 20.0 * t.sqrt() * i as f64 / 199.0;
        let tp = TomogramPoint { x, frame: Frame::POSITION, k, t };
        (tomogram_closed(tp).unwrap() - m_density(SpacetimePoint::new(x, t), ShutterParams::real(k)).unwrap()).abs()
    }));
    checks.push(Check::at_most("frame-reduction", reduction, 1e-12));

    let chi_points = [
        (1.0, 1.0, 0.5),
        (0.0, 1.0, 0.5),
        (3.0, 1.0, 0.5),
        (2.5, 2.0, 1.0),
        (-1.0, 0.5, 0.3),
        (1.0, 1.0, -0.5),
        (0.2, 1.5, -0.8),
        (-2.0, -1.0, -2.0),
        (0.5, -0.5, -1.0),
        (1.0, 0.3, 1.0),
    ];
    let chi_count = if full { chi_points.len() } else { 4 };
    let chi_err = max_of(chi_points[..chi_count].iter().map(|&(x, mu, nu)| {
        let tp = TomogramPoint { x, frame: Frame { mu, nu }, k: 1.0, t: 1.0 };
        let closed = tomogram_closed(tp).unwrap();
        chi_oracle_extrapolated(tp, &DEFAULT_EPS_LADDER, &quad)
            .map_or(f64::INFINITY, |c| (tomogram_from_chi(c, nu).unwrap() - closed).abs())
    }));
    checks.push(Check::at_most("chi-oracle", chi_err, 1e-3));

    // output plumbing
    let table = cmd_density(&Scenario::default()).expect("default density table");
    let round_trip = SampleTable::read_csv(table.to_csv_string().as_bytes()).map_or(false, |back| {
        back.columns() == table.columns()
            && back.rows().iter().flatten().zip(table.rows().iter().flatten()).all(|(a, b)| a.to_bits() == b.to_bits())
            && back.len() == table.len()
    });
    checks.push(Check { name: "csv-round-trip", value: if round_trip { 0.0 } else { 1.0 }, bound: Bound::AtMost, limit: 0.0 });

    Report { level, checks, elapsed: start.elapsed() }
}

//! Acceptance criteria 1-10. Prints one line per criterion and exits nonzero
//! if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use shutter_cli::oracle::{fresnel_quadrature, fresnel_series};
use shutter_cli::{cmd_wigner, Scenario};
use shutter_core::{
    chi_oracle_extrapolated, classical_concentration, fresnel, m_density, tomogram_closed, tomogram_from_chi,
    wigner_closed, wigner_marginal, wigner_oracle_extrapolated, Frame, PhasePoint, PhysicalUnits, QuadConfig,
    ShutterParams, SpacetimePoint, TomogramPoint, DEFAULT_EPS_LADDER,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn density(x: f64, t: f64, k: f64) -> f64 {
    m_density(SpacetimePoint::new(x, t), ShutterParams::real(k)).unwrap()
}

fn front_value() -> Outcome {
    let mut worst = 0.0f64;
    for k in [0.5, 1.0, 2.0] {
        for t in [0.5, 2.0, 10.0] {
            worst = worst.max((density(k * t, t, k) - 0.25).abs());
        }
    }
    outcome(worst <= 1e-12, format!("max |rho - 1/4| = {worst:.2e}"))
}

fn fresnel_fidelity() -> Outcome {
    let mut inner = 0.0f64;
    for i in 0..200 {
        let w = -3.0 + 6.0 * i as f64 / 199.0;
        let (a, b) = (fresnel(w), fresnel_series(w));
        inner = inner.max((a.c - b.c).abs().max((a.s - b.s).abs()));
    }
    let mut outer = 0.0f64;
    for i in 0..50 {
        let a = 3.0 + 27.0 * (i as f64 + 1.0) / 50.0;
        let w = if i % 2 == 0 { a } else { -a };
        let (x, y) = (fresnel(w), fresnel_quadrature(w));
        outer = outer.max((x.c - y.c).abs().max((x.s - y.s).abs()));
    }
    outcome(
        inner <= 1e-12 && outer <= 1e-8,
        format!("series {inner:.2e} (<= 1e-12), quadrature {outer:.2e} (<= 1e-8)"),
    )
}

fn wigner_equivalence() -> Outcome {
    let quad = QuadConfig::default();
    let points = [
        (0.0, 1.0),
        (-1.0, 1.0),
        (0.5, 0.7),
        (-0.5, 1.6),
        (0.9, 1.0),
        (0.95, 1.05),
        (-2.0, 0.0),
        (1.2, 1.3),
        (0.3, 2.5),
        (-3.0, 0.4),
    ];
    let mut worst = 0.0f64;
    for (x, p) in points {
        let pp = PhasePoint::new(x, p);
        let closed = wigner_closed(pp, 1.0, 1.0).unwrap();
        let err = wigner_oracle_extrapolated(pp, 1.0, 1.0, &DEFAULT_EPS_LADDER, &quad)
            .map_or(f64::INFINITY, |v| (v - closed).abs());
        worst = worst.max(err);
    }
    outcome(worst <= 1e-4, format!("max abs error {worst:.2e} (<= 1e-4)"))
}

fn marginal() -> Outcome {
    let quad = QuadConfig::default();
    let (k, t) = (1.0, 2.0f64);
    let (mut core, mut tail) = (0.0f64, 0.0f64);
    for i in 0..20 {
        let w = -5.0 + 10.0 * i as f64 / 19.0;
        let x = k * t + w * (2.0 * t).sqrt();
        let err = wigner_marginal(x, k, t, &quad).map_or(f64::INFINITY, |m| (m.value.re - density(x, t, k)).abs());
        if w.abs() <= 2.0 {
            core = core.max(err);
        } else {
            tail = tail.max(err);
        }
    }
    outcome(
        core <= 1e-3 && tail <= 2e-2,
        format!("|w| <= 2: {core:.2e} (<= 1e-3), 2 < |w| <= 5: {tail:.2e} (<= 2e-2)"),
    )
}

fn tomogram_equivalence() -> Outcome {
    let quad = QuadConfig::default();
    let points = [
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
    let mut worst = 0.0f64;
    for (x, mu, nu) in points {
        let tp = TomogramPoint::new(x, Frame::new(mu, nu).unwrap(), 1.0, 1.0).unwrap();
        let closed = tomogram_closed(tp).unwrap();
        let err = chi_oracle_extrapolated(tp, &DEFAULT_EPS_LADDER, &quad)
            .map_or(f64::INFINITY, |chi| (tomogram_from_chi(chi, nu).unwrap() - closed).abs());
        worst = worst.max(err);
    }
    outcome(worst <= 1e-3, format!("max abs error {worst:.2e} (<= 1e-3)"))
}

fn frame_reduction() -> Outcome {
    let (k, t) = (1.0, 2.0f64);
    let mut worst = 0.0f64;
    for i in 0..200 {
        let x = k * t - 10.0 * t.sqrt() + 20.0 * t.sqrt() * i as f64 / 199.0;
        let tp = TomogramPoint::new(x, Frame::POSITION, k, t).unwrap();
        worst = worst.max((tomogram_closed(tp).unwrap() - density(x, t, k)).abs());
    }
    outcome(worst <= 1e-12, format!("max |difference| = {worst:.2e} (<= 1e-12)"))
}

fn positivity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut min_tomogram = f64::INFINITY;
    let mut drawn = 0;
    while drawn < 10_000 {
        let (k, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(0.05..5.0));
        let (mu, nu): (f64, f64) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let Ok(frame) = Frame::new(mu, nu) else { continue };
        if !frame.is_admissible(t) {
            continue;
        }
        let tp = TomogramPoint::new(rng.gen_range(-20.0..20.0), frame, k, t).unwrap();
        min_tomogram = min_tomogram.min(tomogram_closed(tp).unwrap());
        drawn += 1;
    }
    let grid = cmd_wigner(&Scenario::default()).unwrap();
    let min_wigner = grid.column("W").unwrap().into_iter().fold(f64::INFINITY, f64::min);
    outcome(
        min_tomogram >= 0.0 && min_wigner < 0.0,
        format!("min tomogram {min_tomogram:.3e} (>= 0), min Wigner on default grid {min_wigner:.3e} (< 0)"),
    )
}

fn classical_limit() -> Outcome {
    let hbars = [1.0, 0.3, 0.1, 0.03, 0.01];
    let ratios: Vec<f64> = hbars
        .iter()
        .map(|&h| classical_concentration(1.0, 1.0, 0.0, PhysicalUnits::new(h, 1.0).unwrap(), 0.05).unwrap())
        .collect();
    let monotone = ratios.windows(2).all(|w| w[1] > w[0]);
    let last = *ratios.last().unwrap();
    let listed: Vec<String> = ratios.iter().map(|r| format!("{r:.4}")).collect();
    outcome(
        monotone && last > 0.95,
        format!("ratios [{}], monotone {monotone}, final {last:.4} (> 0.95)", listed.join(", ")),
    )
}

fn causality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut nonzero = 0usize;
    for _ in 0..10_000 {
        let (p, t, k) = (rng.gen_range(-5.0..5.0), rng.gen_range(0.01..10.0), rng.gen_range(-3.0..3.0));
        let x: f64 = p * t + rng.gen_range(1e-9..20.0);
        if x > p * t && wigner_closed(PhasePoint::new(x, p), k, t).unwrap() != 0.0 {
            nonzero += 1;
        }
    }
    outcome(nonzero == 0, format!("{nonzero} nonzero values in 10000 samples"))
}

fn verify_full() -> Outcome {
    let started = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_shutter")).args(["verify", "--full"]).output();
    let elapsed = started.elapsed();
    match status {
        Ok(out) => {
            let code = out.status.code().unwrap_or(-1);
            outcome(
                code == 0 && elapsed < Duration::from_secs(120),
                format!("exit {code} in {:.1} s (< 120 s)", elapsed.as_secs_f64()),
            )
        }
        Err(e) => outcome(false, format!("could not run the binary: {e}")),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("front value", front_value, Duration::from_secs(1)),
        ("Fresnel fidelity", fresnel_fidelity, Duration::from_secs(5)),
        ("Wigner oracle equivalence", wigner_equivalence, Duration::from_secs(60)),
        ("Wigner marginal", marginal, Duration::from_secs(30)),
        ("tomogram oracle equivalence", tomogram_equivalence, Duration::from_secs(60)),
        ("frame reduction", frame_reduction, Duration::from_secs(60)),
        ("positivity and sign indefiniteness", positivity, Duration::from_secs(60)),
        ("classical limit", classical_limit, Duration::from_secs(60)),
        ("causal support", causality, Duration::from_secs(60)),
        ("verify --full", verify_full, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = run();
        let elapsed = started.elapsed();
        let pass = result.pass && elapsed < *limit;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {name}: {} ({}; {:.2} s of {} s)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use shutter_core::specfun::erfc_complex;
use shutter_core::{
    chi_oracle, fresnel, m_amplitude, m_density, wigner_closed, wigner_marginal, wigner_oracle, Frame, PhasePoint,
    QuadConfig, ShutterParams, SpacetimePoint, TomogramPoint,
};

fn special_functions(c: &mut Criterion) {
    c.bench_function("fresnel/series", |b| b.iter(|| fresnel(black_box(1.7))));
    c.bench_function("fresnel/continued_fraction", |b| b.iter(|| fresnel(black_box(12.5))));
    c.bench_function("erfc/complex", |b| b.iter(|| erfc_complex(black_box(Complex64::new(1.3, -0.8)))));
}

fn amplitudes(c: &mut Criterion) {
    let pt = SpacetimePoint::new(1.3, 2.0);
    c.bench_function("density", |b| b.iter(|| m_density(black_box(pt), ShutterParams::real(1.0))));
    let damped = ShutterParams::new(1.0, 1e-3).unwrap();
    c.bench_function("amplitude/complex_k", |b| b.iter(|| m_amplitude(black_box(pt), damped)));
    c.bench_function("wigner/closed", |b| b.iter(|| wigner_closed(black_box(PhasePoint::new(0.2, 1.1)), 1.0, 1.0)));
}

fn oracles(c: &mut Criterion) {
    let quad = QuadConfig::default();
    let mut g = c.benchmark_group("oracles");
    g.sample_size(20);
    g.bench_function("wigner_oracle", |b| {
        b.iter(|| wigner_oracle(black_box(PhasePoint::new(0.0, 1.0)), ShutterParams::new(1.0, 1e-3).unwrap(), 1.0, &quad))
    });
    g.bench_function("wigner_marginal", |b| b.iter(|| wigner_marginal(black_box(0.5), 1.0, 2.0, &quad)));
    let tp = TomogramPoint::new(1.0, Frame::new(1.0, 0.5).unwrap(), 1.0, 1.0).unwrap();
    g.bench_function("chi_oracle", |b| b.iter(|| chi_oracle(black_box(tp), ShutterParams::new(1.0, 1e-3).unwrap(), &quad)));
    g.finish();
}

criterion_group!(benches, special_functions, amplitudes, oracles);
criterion_main!(benches);

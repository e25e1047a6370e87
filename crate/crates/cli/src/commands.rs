//! Grid sweeps behind the subcommands. Rows are computed in parallel and
//! emitted in grid order (outer grid first).

use rayon::prelude::*;
use shutter_core::{
    classical_concentration, fresnel, m_density, rho_of, tomogram_closed, w_of, wigner_closed, Frame,
    PhasePoint, PhysicalUnits, SampleTable, ShutterError, ShutterParams, SpacetimePoint, TomogramPoint,
};

use crate::args::{Scenario, DEFAULT_DELTA, DEFAULT_HBAR};
use crate::error::CliError;

pub const DENSITY_X_GRID: &str = "-10:10:201";
pub const DENSITY_T_GRID: &str = "0.1:10:100";
pub const CORNU_GRID: &str = "-10:10:401";
pub const WIGNER_X_GRID: &str = "-2:2:41";
pub const WIGNER_P_GRID: &str = "-1:3:41";
pub const TOMOGRAM_GRID: &str = "-10:10:201";

fn build<S: Into<String>>(
    columns: impl IntoIterator<Item = S>,
    rows: Vec<Result<Vec<f64>, ShutterError>>,
) -> Result<SampleTable, CliError> {
    let mut table = SampleTable::new(columns)?;
    for row in rows {
        table.push(row?)?;
    }
    Ok(table)
}

/// Columns `x, t, w, density`. Sweeps x at fixed t, or t at fixed `--x`.
pub fn cmd_density(sc: &Scenario) -> Result<SampleTable, CliError> {
    let params = ShutterParams::new(sc.k(), 0.0)?;
    let points: Vec<SpacetimePoint> = match sc.x {
        Some(x) => sc.grid_or(DENSITY_T_GRID)?.values().into_iter().map(|t| SpacetimePoint::new(x, t)).collect(),
        None => {
            let t = sc.t();
            sc.grid_or(DENSITY_X_GRID)?.values().into_iter().map(|x| SpacetimePoint::new(x, t)).collect()
        }
    };
    let rows = points
        .par_iter()
        .map(|&pt| Ok(vec![pt.x, pt.t, w_of(pt, params.k)?, m_density(pt, params)?]))
        .collect();
    build(["x", "t", "w", "density"], rows)
}

/// Columns `w, C, S`.
pub fn cmd_cornu(sc: &Scenario) -> Result<SampleTable, CliError> {
    let rows = sc
        .grid_or(CORNU_GRID)?
        .values()
        .par_iter()
        .map(|&w| {
            let f = fresnel(w);
            Ok(vec![w, f.c, f.s])
        })
        .collect();
    build(["w", "C", "S"], rows)
}

/// Columns `x, p, W`, x-major.
pub fn cmd_wigner(sc: &Scenario) -> Result<SampleTable, CliError> {
    let (k, t) = (sc.k(), sc.t());
    let xs = sc.grid_or(WIGNER_X_GRID)?.values();
    let ps = sc.p_grid_or(WIGNER_P_GRID)?.values();
    let points: Vec<PhasePoint> = xs.iter().flat_map(|&x| ps.iter().map(move |&p| PhasePoint::new(x, p))).collect();
    let rows = points
        .par_iter()
        .map(|&pp| Ok(vec![pp.x, pp.p, wigner_closed(pp, k, t)?]))
        .collect();
    build(["x", "p", "W"], rows)
}

/// Frame from `--tau/--theta` when either is given, else `--mu/--nu`
/// (default position frame).
pub fn frame_of(sc: &Scenario) -> Result<Frame, CliError> {
    if sc.tau.is_some() || sc.theta.is_some() {
        Ok(Frame::from_angles(sc.tau.unwrap_or(0.0), sc.theta.unwrap_or(0.0))?)
    } else {
        Ok(Frame::new(sc.mu.unwrap_or(1.0), sc.nu.unwrap_or(0.0))?)
    }
}

/// Columns `X, rho, w_tomogram`.
pub fn cmd_tomogram(sc: &Scenario) -> Result<SampleTable, CliError> {
    let (k, t) = (sc.k(), sc.t());
    let frame = frame_of(sc)?;
    if !frame.is_admissible(t) {
        return Err(ShutterError::FrameSingular { mu: frame.mu, nu: frame.nu, t }.into());
    }
    let rows = sc
        .grid_or(TOMOGRAM_GRID)?
        .values()
        .par_iter()
        .map(|&x| {
            let tp = TomogramPoint::new(x, frame, k, t)?;
            Ok(vec![x, rho_of(tp)?, tomogram_closed(tp)?])
        })
        .collect();
    build(["X", "rho", "w_tomogram"], rows)
}

/// Columns `hbar, concentration_ratio`, one row per `--hbar` value.
pub fn cmd_classical(sc: &Scenario) -> Result<SampleTable, CliError> {
    let (k, t) = (sc.k(), sc.t());
    let x = sc.x.unwrap_or(0.0);
    let mass = sc.mass.unwrap_or(1.0);
    let delta = sc.delta.unwrap_or(DEFAULT_DELTA);
    let hbars = sc.hbar.clone().unwrap_or_else(|| DEFAULT_HBAR.to_vec());
    let rows = hbars
        .par_iter()
        .map(|&h| {
            let units = PhysicalUnits::new(h, mass)?;
            Ok(vec![h, classical_concentration(k, t, x, units, delta)?])
        })
        .collect();
    build(["hbar", "concentration_ratio"], rows)
}

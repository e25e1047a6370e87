use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use shutter_core::GridSpec;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "shutter", version, about = "Diffraction in time: density, Wigner function and tomogram sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// |M|^2 along x at fixed t, or along t at fixed --x
    Density(Scenario),
    /// Fresnel pair (C, S) along w
    Cornu(Scenario),
    /// Wigner function on an (x, p) grid
    Wigner(Scenario),
    /// Tomogram along X in the frame (mu, nu) or (tau, theta)
    Tomogram(Scenario),
    /// Momentum concentration of the Wigner function as hbar decreases
    Classical(Scenario),
    /// Run the oracle and invariant checks
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Flags shared by the sweep commands. Every flag may also come from the
/// JSON file given with `--config`; flags on the command line win.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Scenario {
    /// Beam momentum
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<f64>,
    /// Time
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,
    /// Fixed position (density: sweep t instead of x; classical: the point x)
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    /// Main grid as start:stop:count
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Momentum grid for the wigner command
    #[arg(long = "p-grid", allow_hyphen_values = true)]
    #[serde(rename = "p_grid")]
    pub p_grid: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["tau", "theta"])]
    pub mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["tau", "theta"])]
    pub nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Comma-separated list of hbar values
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub hbar: Option<Vec<f64>>,
    #[arg(long, allow_hyphen_values = true)]
    pub mass: Option<f64>,
    /// Half-width of the inner momentum window
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the table here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON scenario file
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct VerifyArgs {
    /// Run the extrapolated oracles and the full sample counts
    #[arg(long)]
    pub full: bool,
    /// Deliberately corrupt a component to exercise the failure path
    #[arg(long, hide = true, value_enum)]
    pub inject_fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    Fresnel,
}

pub const DEFAULT_K: f64 = 1.0;
pub const DEFAULT_T: f64 = 2.0;
pub const DEFAULT_HBAR: [f64; 5] = [1.0, 0.3, 0.1, 0.03, 0.01];
pub const DEFAULT_DELTA: f64 = 0.05;

impl Scenario {
    /// Fills unset fields from the config file, if one was given.
    pub fn resolve(self) -> Result<Scenario, CliError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let file: Scenario = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))?;
        Ok(self.or(file))
    }

    fn or(self, other: Scenario) -> Scenario {
        Scenario {
            k: self.k.or(other.k),
            t: self.t.or(other.t),
            x: self.x.or(other.x),
            grid: self.grid.or(other.grid),
            p_grid: self.p_grid.or(other.p_grid),
            mu: self.mu.or(other.mu),
            nu: self.nu.or(other.nu),
            tau: self.tau.or(other.tau),
            theta: self.theta.or(other.theta),
            hbar: self.hbar.or(other.hbar),
            mass: self.mass.or(other.mass),
            delta: self.delta.or(other.delta),
            format: self.format.or(other.format),
            out: self.out.or(other.out),
            config: self.config,
        }
    }

    pub fn k(&self) -> f64 {
        self.k.unwrap_or(DEFAULT_K)
    }

    pub fn t(&self) -> f64 {
        self.t.unwrap_or(DEFAULT_T)
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or(Format::Csv)
    }

    pub fn grid_or(&self, default: &str) -> Result<GridSpec, CliError> {
        Ok(self.grid.as_deref().unwrap_or(default).parse()?)
    }

    pub fn p_grid_or(&self, default: &str) -> Result<GridSpec, CliError> {
        Ok(self.p_grid.as_deref().unwrap_or(default).parse()?)
    }
}

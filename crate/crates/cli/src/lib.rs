//! Library side of the `shutter` binary: argument types, grid sweeps, the
//! verification suite and the exit-status contract.

pub mod args;
pub mod commands;
pub mod error;
pub mod oracle;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use shutter_core::SampleTable;

pub use args::{Cli, Command, Fault, Format, Scenario, VerifyArgs};
pub use commands::{cmd_classical, cmd_cornu, cmd_density, cmd_tomogram, cmd_wigner};
pub use error::{CliError, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

/// Parses `argv`, runs the command and writes its output; returns the exit
/// status. Diagnostics go to `err`.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let (scenario, table) = match command {
        Command::Verify(v) => return run_verify(&v, out, err),
        Command::Density(s) => sweep(s, cmd_density)?,
        Command::Cornu(s) => sweep(s, cmd_cornu)?,
        Command::Wigner(s) => sweep(s, cmd_wigner)?,
        Command::Tomogram(s) => sweep(s, cmd_tomogram)?,
        Command::Classical(s) => sweep(s, cmd_classical)?,
    };
    emit(&table, &scenario, out)
}

fn sweep(
    scenario: Scenario,
    f: fn(&Scenario) -> Result<SampleTable, CliError>,
) -> Result<(Scenario, SampleTable), CliError> {
    let scenario = scenario.resolve()?;
    let table = f(&scenario)?;
    Ok((scenario, table))
}

fn emit(table: &SampleTable, scenario: &Scenario, out: &mut dyn Write) -> Result<(), CliError> {
    let write = |w: &mut dyn Write| match scenario.format() {
        Format::Csv => table.write_csv(w),
        Format::Json => table.write_json(w),
    };
    match &scenario.out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            let mut buf = std::io::BufWriter::new(file);
            write(&mut buf)?;
            buf.flush().map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
        }
        None => write(out)?,
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let level = if args.full { verify::Level::Full } else { verify::Level::Quick };
    let report = verify::run(level, args.inject_fault);
    writeln!(out, "{report}").map_err(|e| CliError::Usage(e.to_string()))?;
    if level == verify::Level::Full && report.elapsed > verify::FULL_BUDGET {
        let _ = writeln!(err, "warning: full verification took {:.1} s", report.elapsed.as_secs_f64());
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Verify(report.failures()))
    }
}

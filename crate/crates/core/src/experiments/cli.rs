// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: `grover-dfs run <scenario> [flags]`.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 configuration error, 3 I/O error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::config::{parse_sigma_grid, OutputFormat, Overrides, Scenario, ScenarioConfig};
use super::output::write_json_file;
use super::scenarios::run_scenario;
use crate::error::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;
/// Numerical failure (eigensolver did not converge).
pub const EXIT_NUMERIC: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "grover-dfs",
    version,
    about = "Grover search under detuning errors, with and without a balanced-weight code"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a scenario and write its table.
    Run(RunArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(value_enum)]
    scenario: Scenario,
    /// Physical qubit count.
    #[arg(long)]
    m: Option<usize>,
    /// Marked item (logical for encoded scenarios).
    #[arg(long)]
    x0: Option<usize>,
    /// Per-qubit detunings in units of ⟨v|s⟩/τ, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    detunings: Option<Vec<f64>>,
    /// Monte Carlo trials per σ.
    #[arg(long)]
    trials: Option<usize>,
    /// Detuning spreads as a:b:step, in units of the mean detuning.
    #[arg(long)]
    sigma_grid: Option<String>,
    /// Mean detuning in units of ⟨v|s⟩/τ.
    #[arg(long, allow_hyphen_values = true)]
    omega_mean: Option<f64>,
    /// Seed of the Monte Carlo draws.
    #[arg(long)]
    seed: Option<u64>,
    /// End of the time window, in units of τ.
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of time samples, endpoints included.
    #[arg(long)]
    grid_points: Option<usize>,
    /// Largest register size of the code-size table.
    #[arg(long)]
    m_max: Option<usize>,
    /// Output file; standard output when omitted. CSV output also writes a
    /// JSON summary next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; CSV by default.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

impl RunArgs {
    fn into_config(self) -> Result<ScenarioConfig> {
        let sigma_grid = self.sigma_grid.as_deref().map(parse_sigma_grid).transpose()?;
        let overrides = Overrides {
            m: self.m,
            x0: self.x0,
            detunings: self.detunings,
            trials: self.trials,
            sigma_grid,
            omega_mean: self.omega_mean,
            seed: self.seed,
            t_max: self.t_max,
            grid_points: self.grid_points,
            m_max: self.m_max,
            out: self.out,
            format: self.format,
        };
        ScenarioConfig::resolve(self.scenario, overrides)
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Config(_) | Error::Domain(_) => EXIT_CONFIG,
        Error::Io(_) | Error::Csv(_) | Error::Json(_) => EXIT_IO,
        Error::Eigen(_) => EXIT_NUMERIC,
    }
}

fn execute(cfg: &ScenarioConfig) -> Result<()> {
    let (result, table) = run_scenario(cfg)?;
    match (&cfg.out, cfg.format) {
        (Some(path), OutputFormat::Csv) => {
            table.write_csv_file(path)?;
            write_json_file(&result, &path.with_extension("json"))?;
        }
        (Some(path), OutputFormat::Json) => write_json_file(&result, path)?,
        (None, OutputFormat::Csv) => table.write_csv(io::stdout().lock())?,
        (None, OutputFormat::Json) => {
            let mut out = io::stdout().lock();
            serde_json::to_writer_pretty(&mut out, &result)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs the scenario, and returns the
/// process exit code. Errors are reported on standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let Command::Run(run_args) = cli.command;
    match run_args.into_config().and_then(|cfg| execute(&cfg)) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            eprintln!("grover-dfs: {err}");
            exit_code(&err)
        }
    }
}

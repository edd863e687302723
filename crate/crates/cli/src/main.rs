//! `maslov`: tabulate Maslov indices, spectra, exact s = 1/2 levels and
//! scattering phases for `V = -V0 / x^s`, and run the self-verification suite.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod format;
mod manifest;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use manifest::RunManifest;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  verification failure
  2  usage or domain error
  3  mathematical divergence";

#[derive(Debug, Parser)]
#[command(name = "maslov", version, about, after_help = EXIT_CODES)]
struct Cli {
    /// Write data to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Write a JSON run manifest to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,

    /// Run batch work on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
enum Command {
    /// Maslov index γ(s) over a range of exponents, with jump rows.
    Maslov(MaslovArgs),
    /// Semiclassical levels, optionally against the shooting oracle.
    Spectrum(SpectrumArgs),
    /// Exact levels of -1/√x from the Hermite-function equation.
    ExactHalf(ExactHalfArgs),
    /// s-wave phase shift and cross-section term as JSON.
    Scatter(ScatterArgs),
    /// Run the acceptance criteria.
    Verify(VerifyArgs),
    /// Print the special-function reference table.
    #[command(hide = true)]
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Maslov(_) => "maslov",
            Command::Spectrum(_) => "spectrum",
            Command::ExactHalf(_) => "exact-half",
            Command::Scatter(_) => "scatter",
            Command::Verify(_) => "verify",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Debug, Args, Serialize)]
struct MaslovArgs {
    #[arg(long, default_value_t = 0.05)]
    s_min: f64,
    #[arg(long, default_value_t = 1.95)]
    s_max: f64,
    #[arg(long, default_value_t = 0.01)]
    step: f64,
    /// Angular momentum.
    #[arg(long, default_value_t = 0)]
    l: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum PotentialKind {
    /// -V0 / r^s
    Power,
    /// V0 ln(r / x0)
    Log,
}

#[derive(Debug, Args, Serialize)]
struct SpectrumArgs {
    #[arg(long, value_enum, default_value_t = PotentialKind::Power)]
    potential: PotentialKind,
    /// Exponent (power law only).
    #[arg(long)]
    s: Option<f64>,
    /// Angular momentum (power law only).
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    /// Add oracle energies and relative errors.
    #[arg(long)]
    with_oracle: bool,
    #[arg(long, default_value_t = 1.0)]
    v0: f64,
    /// Length scale (log potential only).
    #[arg(long)]
    x0: Option<f64>,
    /// Planck constant (log potential only).
    #[arg(long)]
    hbar: Option<f64>,
    /// Mass (log potential only).
    #[arg(long)]
    mass: Option<f64>,
}

#[derive(Debug, Args, Serialize)]
struct ExactHalfArgs {
    #[arg(long, default_value_t = 10)]
    n_max: usize,
}

#[derive(Debug, Args, Serialize)]
struct ScatterArgs {
    #[arg(long)]
    s: f64,
    /// Collision energy.
    #[arg(long = "energy", short = 'E')]
    energy: f64,
    #[arg(long, default_value_t = 1.0)]
    v0: f64,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
    profile: ProfileArg,
    /// Perturb every measured value by this relative amount.
    #[arg(long, hide = true)]
    inject_fault: Option<f64>,
}

/// Everything a subcommand can fail with, mapped onto exit codes.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] maslov_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0} acceptance criteria failed")]
    Verification(usize),
    /// Already reported on the data stream.
    #[error("{0}")]
    Reported(String, u8),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Core(maslov_core::Error::Divergent(_)) => 3,
            CliError::Reported(_, code) => *code,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

fn parameters(command: &Command) -> BTreeMap<String, String> {
    let value = serde_json::to_value(command).unwrap_or_default();
    value
        .as_object()
        .map(|o| {
            o.iter()
                .filter(|(_, v)| !v.is_null())
                .map(|(k, v)| (k.clone(), v.to_string().trim_matches('"').to_string()))
                .collect()
        })
        .unwrap_or_default()
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let mode = if cli.sequential {
        maslov_core::Execution::Sequential
    } else {
        maslov_core::Execution::default()
    };
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = match &cli.command {
        Command::Maslov(a) => commands::maslov(&mut out, a),
        Command::Spectrum(a) => commands::spectrum(&mut out, a, mode),
        Command::ExactHalf(a) => commands::exact_half(&mut out, a, mode),
        Command::Scatter(a) => commands::scatter(&mut out, a),
        Command::Verify(a) => commands::verify(&mut out, a, mode),
        Command::Selftest => commands::selftest(&mut out),
    };
    out.flush()?;
    if let Some(path) = &cli.manifest {
        let outputs = cli.out.iter().map(|p| p.display().to_string()).collect();
        RunManifest::new(cli.command.name(), parameters(&cli.command), outputs).write(path)?;
    }
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("maslov: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

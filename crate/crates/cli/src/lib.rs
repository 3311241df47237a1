//! Command-line surface over the `gamma2d` library.
//!
//! Every command is a thin shell: it parses inputs, calls the library, and
//! serializes the result. [`run`] returns the bytes for both streams and the
//! exit code so commands can be tested without spawning a process.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::io::Read;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod document;
pub mod output;
pub mod sweep;

pub use output::{CliError, Outcome};

#[derive(Debug, Parser)]
#[command(
    name = "gamma2d",
    version,
    about = "2x2 gamma-matrix representations in 2+1 dimensions"
)]
pub struct Cli {
    /// Verification tolerance (default 1e-12; 1e-9 for `intertwine`).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Seed for `rep build --random`, batch checks and sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,

    /// Suppress warnings on standard error.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build or check representation documents.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Plane-wave spinor for a momentum and energy branch.
    Spinor(SpinorArgs),
    /// Lorentz boost operator, covariance residuals and boosted spinor.
    Boost(BoostArgs),
    /// Parity operator and its action on a spinor.
    Parity(ParityArgs),
    /// Similarity transform between two representations.
    Intertwine(IntertwineArgs),
    /// Grid evaluation emitted as CSV.
    Sweep(SweepArgs),
}

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    Build(BuildArgs),
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Standard,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,

    /// ZYZ Euler angles `alpha,beta,gamma` in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub euler: Option<String>,

    /// Quaternion `w,x,y,z` (normalized on input).
    #[arg(long, allow_hyphen_values = true)]
    pub quaternion: Option<String>,

    /// Nine numbers, rows `c`, `b`, `a`.
    #[arg(long, allow_hyphen_values = true)]
    pub explicit: Option<String>,

    /// Haar-random rotation from `--seed`.
    #[arg(long)]
    pub random: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Document path, or `-` for standard input.
    #[arg(required_unless_present = "batch")]
    pub document: Option<String>,

    /// Check this many random representations (seeds from `--seed`) instead.
    #[arg(long)]
    pub batch: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    #[value(name = "+", alias = "positive")]
    Plus,
    #[value(name = "-", alias = "negative")]
    Minus,
}

impl From<BranchArg> for gamma2d::Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => gamma2d::Branch::Positive,
            BranchArg::Minus => gamma2d::Branch::Negative,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct MomentumArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<f64>,
    #[arg(long, value_enum, allow_hyphen_values = true)]
    pub branch: Option<BranchArg>,
}

impl MomentumArgs {
    pub fn given(&self) -> bool {
        self.k1.is_some() || self.k2.is_some() || self.m.is_some() || self.branch.is_some()
    }
}

#[derive(Debug, Args)]
pub struct SpinorArgs {
    pub document: String,
    #[command(flatten)]
    pub momentum: MomentumArgs,
}

#[derive(Debug, Args)]
pub struct BoostArgs {
    pub document: String,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, default_value_t = 1)]
    pub axis: usize,
    /// Optional momentum whose spinor is boosted.
    #[command(flatten)]
    pub momentum: MomentumArgs,
}

#[derive(Debug, Args)]
pub struct ParityArgs {
    pub document: String,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi: f64,
    #[command(flatten)]
    pub momentum: MomentumArgs,
    /// Raw spinor `re0,im0,re1,im1`, instead of a momentum.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["k1", "k2", "m", "branch"])]
    pub spinor: Option<String>,
}

#[derive(Debug, Args)]
pub struct IntertwineArgs {
    pub document_a: String,
    pub document_b: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Dispersion,
    Covariance,
    NormalizationDegeneracy,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub kind: SweepKind,
    /// Ranges are `value`, `start:stop:count` or `start:stop:count:log`.
    #[arg(long, allow_hyphen_values = true)]
    pub k1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Family parameter of the degeneracy sweep.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Number of random representations (covariance sweep).
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    /// Representation document for the dispersion sweep (standard if absent).
    #[arg(long)]
    pub rep: Option<String>,
}

/// Global settings shared by all commands.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub tol: Option<f64>,
    pub seed: u64,
    pub output: Option<OutputFormat>,
    pub quiet: bool,
}

impl Settings {
    pub fn tol_or(&self, default: f64) -> Result<f64, CliError> {
        let tol = self.tol.unwrap_or(default);
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::input(
                "invalid-argument",
                format!("--tol must be positive, got {tol}"),
            ));
        }
        Ok(tol)
    }

    pub fn json_only(&self) -> Result<(), CliError> {
        match self.output {
            Some(OutputFormat::Csv) => Err(CliError::input(
                "invalid-argument",
                "this command only writes JSON",
            )),
            _ => Ok(()),
        }
    }
}

pub fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input("io-error", e.to_string()))?;
    } else {
        text = std::fs::read_to_string(Path::new(path))
            .map_err(|e| CliError::input("io-error", format!("{path}: {e}")))?;
    }
    Ok(text)
}

/// Parses a comma- or whitespace-separated list of exactly `n` numbers.
pub fn parse_numbers(text: &str, n: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let values = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::input("invalid-argument", format!("{what}: {e}")))?;
    if values.len() != n {
        return Err(CliError::input(
            "invalid-argument",
            format!("{what}: expected {n} numbers, got {}", values.len()),
        ));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(CliError::input(
            "invalid-argument",
            format!("{what}: values must be finite"),
        ));
    }
    Ok(values)
}

pub fn run(cli: Cli) -> Outcome {
    let settings = Settings {
        tol: cli.tol,
        seed: cli.seed,
        output: cli.output,
        quiet: cli.quiet,
    };
    let result = match &cli.command {
        Command::Rep(RepCommand::Build(args)) => commands::rep_build(&settings, args),
        Command::Rep(RepCommand::Check(args)) => commands::rep_check(&settings, args),
        Command::Spinor(args) => commands::spinor(&settings, args),
        Command::Boost(args) => commands::boost(&settings, args),
        Command::Parity(args) => commands::parity(&settings, args),
        Command::Intertwine(args) => commands::intertwine(&settings, args),
        Command::Sweep(args) => sweep::run(&settings, args),
    };
    match result {
        Ok(outcome) => outcome,
        Err(e) => Outcome::from_error(&e),
    }
}

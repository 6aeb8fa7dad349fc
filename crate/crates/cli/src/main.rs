//! `klp`: generic initial ideals, sectional matrices, Lefschetz properties
//! and hyperplane arrangements from the command line.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use klp_core::{Error, LefschetzMode};

#[derive(Debug, Parser)]
#[command(name = "klp", version, about = "Generic initial ideals and k-Lefschetz properties over QQ")]
pub struct Cli {
    /// Seed for every random choice; sub-seeds are derived from it.
    #[arg(long, global = true, env = "KLP_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Trial budget for the generic initial ideal.
    #[arg(long, global = true, default_value_t = 5)]
    pub trials: usize,
    /// Initial bound on the random matrix entries.
    #[arg(long, global = true, default_value = "1000000")]
    pub bound: num_bigint::BigInt,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Variable names, e.g. `x,y,z,w`, overriding any `vars:` header.
    #[arg(long, global = true)]
    pub vars: Option<String>,
    /// Worker threads for independent trials and samples.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Wlp,
    Slp,
}

impl From<Mode> for LefschetzMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Wlp => LefschetzMode::Wlp,
            Mode::Slp => LefschetzMode::Slp,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generic initial ideal with respect to degrevlex.
    Gin {
        /// Path to an ideal file, or the generators inline.
        input: String,
    },
    /// Hilbert function of S/I.
    Hilbert {
        input: String,
        /// Last degree to print (default: two past the largest initial generator).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Sectional matrix of S/I.
    Sectional { input: String },
    /// k-WLP / k-SLP with the last variables of rgin(I) as Lefschetz elements.
    Lefschetz {
        input: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Number of Lefschetz elements (default: all variables).
        #[arg(long)]
        k: Option<usize>,
        /// Exit with status 1 when the property fails.
        #[arg(long)]
        assert: bool,
    },
    /// Central hyperplane arrangements.
    Arrangement {
        #[command(subcommand)]
        action: ArrangementAction,
    },
    /// Random search for arrangements violating the degree bound on
    /// generators involving the third variable.
    ConjectureSearch {
        #[arg(long = "l", default_value_t = 3)]
        num_vars: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        coeff_bound: i64,
        /// Directory for replayable files of counterexamples.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
        /// Exit with status 1 when a counterexample is found.
        #[arg(long)]
        assert: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ArrangementAction {
    /// Freeness, rgin shape, degree bound and Lefschetz levels of J(A).
    Analyze {
        /// Arrangement file, or its contents inline.
        input: String,
        /// Exit with status 1 when the arrangement is not free.
        #[arg(long)]
        assert: bool,
    },
}

/// Failures, each with its exit status.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Gin(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GinFailure { .. } => Failure::Gin(e.to_string()),
            Error::InvariantViolation(_) => Failure::Internal(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Exit statuses.
pub const EXIT_PROPERTY_FAILS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GIN: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_PROPERTY_FAILS),
        Err(f) => {
            let (code, msg) = match f {
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::Gin(m) => (EXIT_GIN, m),
                Failure::Internal(m) => (EXIT_INTERNAL, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

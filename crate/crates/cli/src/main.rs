//! `geoskew`: compute divergences from the alpha-geodesical skew family,
//! sweep them over parameter grids into CSV, and run the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 I/O or parse error,
//! 3 domain error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod fmt;
mod source;

use commands::{ComputeArgs, GaussianSweepArgs, SweepArgs, VerifyArgs};

#[derive(Parser)]
#[command(name = "geoskew", version, about = "Alpha-geodesical skew divergence toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one divergence value and print it
    Compute(ComputeArgs),
    /// Sweep (alpha, lambda) over a grid and write a CSV
    Sweep(SweepArgs),
    /// Sweep Gaussian inputs against a fixed Gaussian reference
    GaussianSweep(GaussianSweepArgs),
    /// Run the property verification suite
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(args) => commands::compute(args),
        Command::Sweep(args) => commands::sweep(args),
        Command::GaussianSweep(args) => commands::gaussian_sweep(args),
        Command::Verify(args) => {
            return if commands::run_verify(args) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! `so2m`: verification suites and tables for so(2,m).

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, Outcome, Suite};
use render::{write_output, Format};

#[derive(Parser)]
#[command(name = "so2m", version, about = "Exact computations for so(2,m) and SO_0(2,m)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SO2M_FORMAT", default_value = "text")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Rank {
    /// The m in so(2,m).
    #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
    m: u16,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, value_enum, required_unless_present = "all", conflicts_with = "all")]
        suite: Vec<Suite>,
        #[arg(long)]
        all: bool,
    },
    /// Print one of tables 1-5 (1 and 4 for odd m, 2 and 5 for even m).
    Tables {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        table: u8,
    },
    /// The involution catalog with axiom checks and Vogan data.
    Involutions {
        #[command(flatten)]
        rank: Rank,
    },
    /// Determinants of Ad on p0(σ) for each component of K(σ).
    Orientation {
        #[command(flatten)]
        rank: Rank,
    },
    /// θ-stable parabolic classes with their Poincaré–Hodge polynomials.
    Aq {
        #[command(flatten)]
        rank: Rank,
        /// Bound on |h_j| in the enumeration (default l + 1).
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Cycle dimensions and the classes each cycle avoids.
    Cycles {
        #[command(flatten)]
        rank: Rank,
    },
    /// Involutions whose cycles meet exactly one nontrivial class.
    Automorphic {
        #[command(flatten)]
        rank: Rank,
    },
}

fn run(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Verify { rank, suite, all } => {
            let suites = if all { commands::all_suites() } else { suite };
            commands::verify(rank.m.into(), &suites)
        }
        Command::Tables { rank, table } => commands::tables(rank.m.into(), table),
        Command::Involutions { rank } => commands::involutions(rank.m.into()),
        Command::Orientation { rank } => commands::orientation(rank.m.into()),
        Command::Aq { rank, bound } => commands::aq(rank.m.into(), bound),
        Command::Cycles { rank } => commands::cycles(rank.m.into()),
        Command::Automorphic { rank } => commands::automorphic(rank.m.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            return ExitCode::from(1);
        }
    };
    let bytes = match outcome.table.render(cli.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = write_output(&bytes, cli.output.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if outcome.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in &outcome.failures {
            eprintln!("verification failed: {f}");
        }
        ExitCode::from(1)
    }
}

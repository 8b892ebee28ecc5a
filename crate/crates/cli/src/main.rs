//! `jcoker`: multiplicity tables, Brauer characters and cokernel detection
//! from the command line.

mod commands;
mod config;
mod selftest;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jcoker::combinatorics::{Partition, Source};
use jcoker::free_lie::Family;
use jcoker::watermark::{DEFAULT_LIMIT, ENV_VAR};

use crate::config::{Format, RunConfig};

/// Exit status when a command detects an internal inconsistency.
pub const EXIT_INCONSISTENT: u8 = 3;
/// Exit status when the watermark limit aborts a computation.
pub const EXIT_WATERMARK: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "jcoker", version, about = "Exact computations for symplectic components of the Johnson cokernel")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for random tensor panels.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Abort when a tensor exceeds this many live terms.
    #[arg(long, global = true, env = ENV_VAR, default_value_t = DEFAULT_LIMIT)]
    watermark: usize,

    /// Test-only fault injection.
    #[arg(long, global = true, hide = true, value_enum)]
    inject_fault: Option<Fault>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Bump one multiplicity before the dimension self-check.
    DecomposeMultiplicity,
    /// Perturb the detection candidate before the closed-form cross-check.
    DetectCandidate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ranks of the free Lie algebra on n generators in degrees 1..=k.
    Witt {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Sp(2g) decomposition of h_{g,1}(k), the cyclic quotient or H^{⊗k}.
    Decompose {
        /// h, cyclic or tensor_power
        #[arg(long, default_value = "h")]
        source: Source,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
    },
    /// Build the [k] or [1^k] candidate and test whether it survives in the cokernel.
    Detect {
        /// [k] (or power) and [1^k] (or wedge)
        #[arg(long)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
        /// Run outside the proven range; the report is flagged.
        #[arg(long)]
        force: bool,
    },
    /// Character table of B_k(−2g) on permutation classes.
    BrauerChar {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
    },
    /// Kraśkiewicz–Weyman multiplicities of a shape, one per residue.
    Kw {
        /// e.g. 3,1 or 2^2,1^3
        #[arg(long)]
        shape: Partition,
    },
    /// GL(2g) → Sp(2g) branching of a shape.
    Branch {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        g: usize,
    },
    /// Run the built-in invariant panels.
    Selftest {
        #[arg(value_enum, default_value_t = Level::Fast)]
        level: Level,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    jcoker::watermark::set_limit(Some(config.watermark));
    let result = match &cli.command {
        Command::Witt { n, k } => commands::witt(&config, *n, *k),
        Command::Decompose { source, .. } => commands::decompose(&config, *source),
        Command::Detect { family, force, .. } => commands::detect(&config, *family, *force),
        Command::BrauerChar { .. } => commands::brauer_char(&config),
        Command::Kw { .. } => commands::kw(&config),
        Command::Branch { .. } => commands::branch(&config),
        Command::Selftest { level } => selftest::run(&config, *level),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.inconsistent {
                ExitCode::from(EXIT_INCONSISTENT)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(commands::CliError::Lib(jcoker::Error::TermLimit { live, limit })) => {
            eprintln!("{}: a tensor reached {live} live terms (limit {limit}); rerun with a larger --watermark", config.command);
            ExitCode::from(EXIT_WATERMARK)
        }
        Err(commands::CliError::Lib(e @ jcoker::Error::Inconsistent(_))) => {
            eprintln!("{}: {e}", config.command);
            ExitCode::from(EXIT_INCONSISTENT)
        }
        Err(e) => {
            eprintln!("{}: {e}", config.command);
            ExitCode::FAILURE
        }
    }
}

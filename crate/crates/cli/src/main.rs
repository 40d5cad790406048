//! `chiforge`: single-graph queries and catalog sweeps from the shell.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, ExitStatus};

#[derive(Parser, Debug)]
#[command(name = "chiforge", version, about = "Exact colouring and decomposition tools for small graphs")]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for report files.
    #[arg(long, global = true, default_value = "reports")]
    out: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find an induced copy of a named pattern.
    Detect {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        pattern: String,
    },
    /// Chromatic number, or weighted chromatic number, with a certificate.
    Color(WeightedGraph),
    /// Decompose a weighted Q{P4}-free graph into joined parts.
    Decompose(WeightedGraph),
    /// Criticality and the chromatic number after each deletion.
    Critical {
        #[arg(long)]
        graph: String,
    },
    /// Replace each base vertex by a clique of the given size.
    Expand {
        #[arg(long, value_enum)]
        base: Base,
        #[arg(long)]
        weights: String,
    },
    /// Run a verifier and write its JSON and CSV report.
    Verify(VerifyArgs),
    /// Per-ω maximum χ over a class, written as CSV.
    Survey {
        #[arg(long, required = true)]
        source: Vec<String>,
        #[arg(long)]
        class: String,
    },
}

#[derive(Args, Debug)]
struct WeightedGraph {
    #[arg(long)]
    graph: String,
    /// Comma-separated, aligned with graph6 vertex order; defaults to all ones.
    #[arg(long)]
    weights: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Base {
    #[value(name = "C5")]
    C5,
    #[value(name = "W5")]
    W5,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Verifier id, e.g. p5c4-bound, critical-p5c4, reduction-p5-banner,
    /// superadditivity, decomposition, dual-oracle.
    #[arg(long)]
    theorem: String,
    /// `builtin:<n>` or `file:<path>`; repeat to take the union.
    #[arg(long)]
    source: Vec<String>,
    /// Class for the superadditivity check.
    #[arg(long)]
    class: Option<String>,
    #[arg(long, default_value_t = 1)]
    omega1: u32,
    #[arg(long, default_value_t = 1)]
    omega2: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random pairs for dual-oracle.
    #[arg(long, default_value_t = 1000)]
    pairs: usize,
    /// Total-weight bound for c5-closed-form and dual-oracle.
    #[arg(long)]
    max_total: Option<u32>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(ExitStatus::Usage as u8),
            };
        }
    };
    match commands::run(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::status(&e) as u8)
        }
    }
}

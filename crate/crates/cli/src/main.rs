mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::RunFlags;

/// Spectra of Cayley color graphs from group representations.
#[derive(Debug, Parser)]
#[command(name = "cayspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group order, conjugacy classes, irrep degrees and connection set flags.
    Describe {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the spectrum.
    Spectrum(RunFlags),
    /// Compute the spectrum and a full verification report.
    Verify {
        #[command(flatten)]
        flags: RunFlags,
        /// Verify against an exported edge list instead of the group.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Check the invariance conditions of the split-extension formula.
    CheckHypotheses {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the config of the non-normal family on C_m x| C_l.
    Family {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the weighted edge list of the graph.
    ExportGraph {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Describe { config, output } => commands::describe(config, output.as_deref()),
        Command::Spectrum(flags) => commands::spectrum(flags, false, None),
        Command::Verify { flags, edges } => commands::spectrum(flags, true, edges.as_deref()),
        Command::CheckHypotheses { config, output } => {
            commands::check_hypotheses(config, output.as_deref())
        }
        Command::Family { m, l, r, output } => commands::family(*m, *l, *r, output.as_deref()),
        Command::ExportGraph { config, output } => {
            commands::export_graph(config, output.as_deref())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

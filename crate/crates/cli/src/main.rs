//! `resgraph`: analyze dual resolution graphs of surface singularities.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when the
//! intersection matrix is not negative definite (the analysis is partial).

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "resgraph", version, about = "Exact invariants of resolution graphs of surface singularities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: definiteness, fundamental cycle, discrepancies, flags, link.
    Analyze { graphs: Vec<PathBuf> },
    /// Negative definiteness via leading minors and LDLᵀ pivots.
    CheckDefinite {
        graph: PathBuf,
        /// Also compute and verify a positivity certificate for −A.
        #[arg(long)]
        certificate: bool,
    },
    /// Fundamental cycle by the Laufer sequence.
    FundamentalCycle { graph: PathBuf },
    /// Euler characteristic χ(O_Z) of a cycle.
    Chi {
        graph: PathBuf,
        /// Coefficients in vertex order, e.g. `2,1,1,1,1`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        cycle: Vec<i64>,
    },
    /// Exact discrepancies a(E_i, X).
    Discrepancies { graph: PathBuf },
    /// Canonical / log terminal / log canonical class and related flags.
    Classify { graph: PathBuf },
    /// Dual graph topology and the rational homology sphere test.
    Link { graph: PathBuf },
    /// Run a blowup script and print the selected configuration.
    Blowup {
        script: PathBuf,
        /// Print the result in the graph file format.
        #[arg(long)]
        emit_graph: bool,
    },
    /// Smallest d making the star A_{g,d} negative definite.
    SearchStar {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 100)]
        max_d: i64,
    },
    /// Print the star graph A_{g,d} (or the blowup script building it).
    StarGraph {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        script: bool,
    },
    /// Graphviz rendering of a graph file.
    Dot { graph: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command, cli.format) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::Status::Usage as u8)
        }
    }
}

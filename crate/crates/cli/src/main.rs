//! `cantor-quant`: exact constrained quantizers for the Cantor distribution.
//!
//! Exit codes: 0 success, 1 verification failure or internal error,
//! 2 usage error.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use cantor_quant::oracle::DEFAULT_MAX_DEPTH;
use clap::{Parser, Subcommand};

use commands::{Kind, SplitSelector, UsageError};
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "cantor-quant", version, about = "Constrained optimal quantizers for the Cantor distribution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Optimal n-point set(s) on S_n and their exact distortion.
    OptimalSet {
        #[arg(long)]
        n: u64,
        /// `canonical`, `all`, or comma-separated words such as `11,21`.
        #[arg(long, default_value = "canonical")]
        split_set: SplitSelector,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// V_n for n = 1..=max-n.
    ErrorTable {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the closed forms against the DP search and the Lloyd map.
    Verify {
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_refine_depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Dimension or coefficient estimates at n = 2, 4, ..., 2^max-level.
    Asymptotics {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        max_level: u32,
        /// Emit only the two plot columns (n, estimate).
        #[arg(long)]
        plot_data: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let (out, format) = match cli.command {
        Command::OptimalSet { n, split_set, format } => (commands::optimal_set(n, &split_set)?, format),
        Command::ErrorTable { max_n, format } => (commands::error_table(max_n)?, format),
        Command::Verify { max_n, level, max_refine_depth, format } => {
            (commands::verify(max_n, level, max_refine_depth)?, format)
        }
        Command::Asymptotics { kind, max_level, plot_data, format } => {
            (commands::asymptotics(kind, max_level, plot_data)?, format)
        }
    };
    let text = out.render(format)?;
    std::io::stdout().lock().write_all(text.as_bytes())?;
    Ok(out.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

//! Command-line front end: single-tuple queries, reference-table
//! reproduction, parameter-space scans, and the generic exactness audit.
//!
//! Exit codes: 0 success, 2 input error, 3 verification mismatch.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod betti_cmd;
mod render;
mod scan_cmd;

#[derive(Parser)]
#[command(
    name = "betticone",
    about = "Betti sequences of Cohen-Macaulay tangent cones of 4-generated \
             pseudo-symmetric monomial curves: closed forms, explicit resolutions \
             with exactness certificates, and an independent Koszul oracle",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one parameter tuple (alpha21 alpha1 alpha2 alpha3 alpha4).
    Betti {
        alpha21: u64,
        alpha1: u64,
        alpha2: u64,
        alpha3: u64,
        alpha4: u64,
        /// Also run the Koszul oracle and the explicit resolution and
        /// compare all routes; mismatches exit 3.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the embedded example table and diff it cell by cell.
    Table1 {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep all valid tuples with entries up to --max-alpha.
    Scan {
        /// Upper bound for every alpha (safety cap 8).
        #[arg(long, default_value_t = 4)]
        max_alpha: u64,
        /// Run the independent Koszul oracle on Cohen-Macaulay tuples.
        #[arg(long)]
        oracle: bool,
        /// Build and verify the explicit resolutions where they exist.
        #[arg(long)]
        resolutions: bool,
        /// Worker threads (default: all cores). Output is identical
        /// regardless of the worker count.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the Buchsbaum-Eisenbud exactness audit on a matrix-chain file.
    Audit {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn open_output(out: &Option<PathBuf>) -> Result<Box<dyn Write>, String> {
    match out {
        None => Ok(Box::new(std::io::stdout())),
        Some(path) => std::fs::File::create(path)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| format!("cannot create {}: {e}", path.display())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Betti { alpha21, alpha1, alpha2, alpha3, alpha4, verify, format, out } => {
            betti_cmd::run([alpha21, alpha1, alpha2, alpha3, alpha4], verify, format, &out)
        }
        Command::Table1 { format, out } => render::run_table1(format, &out),
        Command::Scan { max_alpha, oracle, resolutions, jobs, format, out } => {
            scan_cmd::run(max_alpha, oracle, resolutions, jobs, format, &out)
        }
        Command::Audit { file, format, out } => render::run_audit(&file, format, &out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

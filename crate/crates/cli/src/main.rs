use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qgf_core::hopfcore::catalog_get;
use qgf_core::suites::{exit_code, find_suite, list_suites, render_json, render_list, render_text, run_suites, RunConfig};
use qgf_core::{dualform::compute_structure_tensor, Error};

#[derive(Parser)]
#[command(name = "qgf", version, about = "Exact verification suites for the non-standard quantum Poincaré algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run suites (all when none are named) and print a report.
    Verify {
        suites: Vec<String>,
        /// Truncation order; each suite has its own default.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Run sequentially and skip the remaining suites after a failure.
        #[arg(long)]
        fail_fast: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Restrict Cayley–Klein checks to one sign.
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i8).range(-1..=1))]
        s: Option<i8>,
        /// Record wall time per suite (reports are then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// List suites with a one-line description.
    List {
        #[arg(long)]
        tag: Option<String>,
    },
    /// Print the structure tensor of U_w up to a cutoff.
    DumpTensor {
        #[arg(long)]
        cutoff: u32,
    },
}

fn usage(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("qgf: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Verify { suites, order, format, fail_fast, jobs, s, timings } => {
            if let Some(bad) = suites.iter().filter(|n| *n != "all").find(|n| find_suite(n).is_err()) {
                return usage(format!("unknown suite {bad}; see `qgf list`"));
            }
            if order == Some(0) {
                return usage("--order must be at least 1");
            }
            let cfg = RunConfig { order, s, timings };
            let results = match run_suites(&suites, cfg, jobs, fail_fast) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let report = match format {
                Format::Json => render_json(&results),
                Format::Text => render_text(&results),
            };
            let _ = out.write_all(report.as_bytes());
            ExitCode::from(exit_code(&results) as u8)
        }
        Command::List { tag } => {
            let _ = out.write_all(render_list(&list_suites(tag.as_deref())).as_bytes());
            ExitCode::SUCCESS
        }
        Command::DumpTensor { cutoff } => {
            let f = catalog_get("uw-iso11-ah").and_then(|u| compute_structure_tensor(&u, cutoff));
            match f {
                Ok(f) => {
                    let _ = out.write_all(f.dump().as_bytes());
                    ExitCode::SUCCESS
                }
                Err(e @ Error::Config(_)) => usage(e),
                Err(e) => {
                    eprintln!("qgf: {e}");
                    ExitCode::FAILURE
                }
            }
        }
    }
}

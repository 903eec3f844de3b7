use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cullis_cli::bench::{parse_sizes, run_bench, write_csv};
use cullis_cli::compute::{compute, ComputeOptions, DEFAULT_VERIFY_CAP, EXIT_INPUT};
use cullis_cli::input::read_matrix;
use cullis_cli::selftest::run_selftest;
use cullis_core::{CullisMethod, Domain};

#[derive(Parser)]
#[command(
    name = "cullis",
    version,
    about = "Cullis determinants of rectangular matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute det_{n k} of a matrix read from CSV or a JSON document.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "auto")]
        method: CullisMethod,
        /// Scalar domain; defaults to the document's domain, else int.
        #[arg(long)]
        scalar: Option<Domain>,
        /// Cross-check against the minor sum when it is cheap enough.
        #[arg(long)]
        verify: bool,
        /// Largest C(n,k)·k³ for which --verify runs the minor sum.
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        verify_cap: f64,
    },
    /// Run the identity suites and print one line per suite.
    Selftest {
        #[arg(long, default_value_t = 20240101)]
        seed: u64,
        /// Largest dimension used by exhaustive sweeps.
        #[arg(long, default_value_t = 7)]
        size_cap: usize,
    },
    /// Measure operation counts and wall time, writing a CSV table.
    Bench {
        /// Comma-separated NxK list, e.g. 8x4,16x8.
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
        #[arg(long, default_value = "int")]
        scalar: Domain,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Compute {
            input,
            method,
            scalar,
            verify,
            verify_cap,
        } => {
            let matrix = match read_matrix(&input, scalar) {
                Ok(m) => m,
                Err(e) => return input_error(e),
            };
            let opts = ComputeOptions {
                method,
                verify,
                verify_cap,
            };
            match compute(&matrix, &opts) {
                Ok(out) => {
                    print!("{}", out.stdout);
                    ExitCode::from(out.exit_code)
                }
                Err(e) => input_error(e),
            }
        }
        Command::Selftest { seed, size_cap } => {
            let results = run_selftest(seed, size_cap);
            let mut failed = 0;
            for r in &results {
                match &r.outcome {
                    Ok(cases) => println!("PASS  {} ({cases} cases)", r.name),
                    Err(detail) => {
                        failed += 1;
                        println!("FAIL  {}: {detail}", r.name);
                    }
                }
            }
            println!(
                "{} of {} suites passed",
                results.len() - failed,
                results.len()
            );
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Bench {
            sizes,
            repeat,
            scalar,
            out,
            seed,
        } => {
            let sizes = match parse_sizes(&sizes) {
                Ok(s) => s,
                Err(e) => return input_error(e),
            };
            let rows = match run_bench(&sizes, repeat, scalar, seed) {
                Ok(rows) => rows,
                Err(e) => return input_error(e),
            };
            let written = match out {
                Some(path) => File::create(&path)
                    .map_err(|e| format!("{}: {e}", path.display()))
                    .and_then(|f| write_csv(&rows, f).map_err(|e| e.to_string())),
                None => write_csv(&rows, io::stdout().lock()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                return input_error(e);
            }
            let _ = io::stdout().flush();
            ExitCode::SUCCESS
        }
    }
}

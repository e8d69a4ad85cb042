use std::path::PathBuf;
use std::process::ExitCode;

use alexq::commands::{self, parse_braid_arg, parse_poly_arg, CliError, EXIT_CHECK};
use alexq::dataset::{self, LoadOptions};
use alexq_core::coloring::DEFAULT_BUDGET;
use clap::{Parser, Subcommand};
use serde::Serialize;

/// Alexander polynomials and Alexander quandle colorings of braid closures.
#[derive(Parser)]
#[command(name = "alexq", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Alexander polynomial of the closure, e.g. `alexander "{1,1,1}"`.
    Alexander {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        /// Number of strands (default: one more than the largest generator).
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Colorability verdict with a certificate.
    Classify {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Non-trivial coloring over Z[t, t^-1]/(f) for a factor f of the Alexander polynomial.
    Color {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(long = "mod", value_name = "POLY", allow_hyphen_values = true)]
        modulus: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Number of colorings by Z_m with t acting as multiplication by T.
    Count {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        m: u64,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        /// Largest number of tuples to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Verify a knot table (JSON lines); the bundled one when no file is given.
    Table {
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Mirror every braid in the file (swap the sign of each generator).
        #[arg(long, requires = "file")]
        invert_signs: bool,
    },
}

/// Prints the output and passes `passed` through.
fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String, passed: bool) -> Result<bool, CliError> {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("outputs serialize"));
    } else {
        print!("{}", text(value));
    }
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Alexander { braid, strands } => {
            let out = commands::alexander(&parse_braid_arg(&braid, strands)?)?;
            emit(json, &out, |o| o.render_text(), true)
        }
        Command::Classify { braid, strands } => {
            let out = commands::classify_braid(&parse_braid_arg(&braid, strands)?)?;
            emit(json, &out, |o| o.render_text(), out.passed())
        }
        Command::Color { braid, modulus, strands } => {
            let w = parse_braid_arg(&braid, strands)?;
            let out = commands::color(&w, &parse_poly_arg(&modulus)?)?;
            emit(json, &out, |o| o.render_text(), out.passed())
        }
        Command::Count { braid, m, t, budget, strands } => {
            let out = commands::count(&parse_braid_arg(&braid, strands)?, m, t, budget)?;
            emit(json, &out, |o| o.render_text(), out.passed())
        }
        Command::Table { file, invert_signs } => {
            let (records, source) = match &file {
                Some(path) => {
                    let records = dataset::load_dataset(path, LoadOptions { invert_signs }).map_err(|e| {
                        if e.is_check_failure() {
                            CliError::check(e.to_string())
                        } else {
                            CliError::usage(e.to_string())
                        }
                    })?;
                    (records, path.display().to_string())
                }
                None => (dataset::builtin(), "<builtin>".to_owned()),
            };
            let report = commands::table(&records, &source);
            emit(json, &report, |r| r.render_text(), report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

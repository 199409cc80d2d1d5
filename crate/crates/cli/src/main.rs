//! `krall`: verification driver for discrete Krall and exceptional
//! orthogonal polynomial families.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 the spec or the
//! invocation was malformed, 3 the construction hit an internal degeneracy.

mod findop;
mod report;
mod reproduce;
mod spec;
mod suites;

use clap::{Parser, Subcommand};
use spec::FamilySpec;
use std::path::PathBuf;
use std::process::ExitCode;
use suites::SuiteOptions;

#[derive(Parser)]
#[command(name = "krall", version, about = "Construct and verify Krall-type orthogonal families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite for a spec file or bundled example name
    Verify {
        /// Path to a spec JSON file, or the name of a bundled example
        spec: String,
        /// Emit the report as JSON instead of a table
        #[arg(long)]
        json: bool,
        /// Also write the report to this path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest member index exercised by degree and Gram checks
        #[arg(long = "n-max")]
        n_max: Option<i64>,
        /// Drop timing fields so repeated runs are byte-identical
        #[arg(long)]
        deterministic: bool,
        /// Invert the admissibility check for a deliberately inadmissible spec
        #[arg(long)]
        expect_inadmissible: bool,
    },
    /// Rebuild a named construction and compare it against frozen artifacts
    Reproduce {
        /// Name of the construction (currently `laguerre-example`)
        target: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Extend eigenfunction and orthogonality checks up to this index
        #[arg(long = "n-max")]
        n_max: Option<i64>,
        #[arg(long)]
        deterministic: bool,
    },
    /// Search for a banded difference operator with the members as eigenfunctions
    FindOperator {
        spec: String,
        /// Operator order (defaults to the order the construction predicts)
        #[arg(long = "r")]
        order: Option<i64>,
        /// Fix the band degree instead of climbing until a hit
        #[arg(long = "D")]
        band_degree: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest fitted member index for infinite families
        #[arg(long = "n-max")]
        n_max: Option<i64>,
        #[arg(long)]
        deterministic: bool,
    },
    /// List the bundled example specs
    ListExamples {
        #[arg(long)]
        json: bool,
    },
}

/// Schema and usage problems (exit 2) versus internal degeneracies (exit 3).
pub(crate) enum Failure {
    Schema(String),
    Internal(String),
}

fn precision_bits() -> Result<u64, Failure> {
    match std::env::var("KRALL_PRECISION_BITS") {
        Ok(v) => v.trim().parse::<u64>().map_err(|_| {
            Failure::Schema(format!("KRALL_PRECISION_BITS must be an integer, got {v:?}"))
        }),
        Err(_) => Ok(192),
    }
}

fn load_spec(name_or_path: &str) -> Result<String, Failure> {
    if let Some(text) = spec::bundled(name_or_path) {
        return Ok(text.to_string());
    }
    std::fs::read_to_string(name_or_path).map_err(|e| {
        Failure::Schema(format!(
            "{name_or_path} is neither a bundled example nor a readable file: {e}"
        ))
    })
}

fn emit(
    report: &report::VerificationReport,
    json: bool,
    out: Option<&PathBuf>,
) -> Result<(), Failure> {
    let text = if json {
        report.to_json()
    } else {
        report.to_table()
    };
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, &text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn run() -> Result<bool, Failure> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            spec: spec_arg,
            json,
            out,
            n_max,
            deterministic,
            expect_inadmissible,
        } => {
            let text = load_spec(&spec_arg)?;
            let parsed = FamilySpec::parse(&text).map_err(Failure::Schema)?;
            let opts = SuiteOptions {
                n_max,
                deterministic,
                expect_inadmissible,
                precision_bits: precision_bits()?,
            };
            let echo = FamilySpec::echo(&text);
            let report =
                suites::run_suite(&parsed, echo, &opts).map_err(Failure::Internal)?;
            emit(&report, json, out.as_ref())?;
            Ok(report.passed())
        }
        Command::Reproduce {
            target,
            json,
            out,
            n_max,
            deterministic,
        } => {
            if target != "laguerre-example" {
                return Err(Failure::Schema(format!(
                    "unknown reproduce target {target:?}; available: laguerre-example"
                )));
            }
            let opts = SuiteOptions {
                n_max,
                deterministic,
                expect_inadmissible: false,
                precision_bits: precision_bits()?,
            };
            let report = reproduce::run_reproduce(&opts).map_err(Failure::Internal)?;
            emit(&report, json, out.as_ref())?;
            Ok(report.passed())
        }
        Command::FindOperator {
            spec: spec_arg,
            order,
            band_degree,
            json,
            out,
            n_max,
            deterministic,
        } => {
            let text = load_spec(&spec_arg)?;
            let parsed = FamilySpec::parse(&text).map_err(Failure::Schema)?;
            let opts = SuiteOptions {
                n_max,
                deterministic,
                expect_inadmissible: false,
                precision_bits: precision_bits()?,
            };
            let fo = findop::FindOpOptions { order, band_degree };
            let echo = FamilySpec::echo(&text);
            let (report, found) = findop::run_find_operator(&parsed, echo, &fo, &opts)?;
            emit(&report, json, out.as_ref())?;
            Ok(found && report.passed())
        }
        Command::ListExamples { json } => {
            if json {
                let rows: Vec<serde_json::Value> = spec::BUNDLED
                    .iter()
                    .map(|(name, text)| {
                        let family = FamilySpec::parse(text)
                            .map(|s| s.family_name().to_string())
                            .unwrap_or_default();
                        serde_json::json!({ "name": name, "family": family })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::Value::Array(rows))
                        .expect("listing serializes")
                );
            } else {
                for (name, text) in spec::BUNDLED {
                    let family = FamilySpec::parse(text)
                        .map(|s| s.family_name().to_string())
                        .unwrap_or_default();
                    println!("{name:<36} {family}");
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Schema(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use frechet_gap::bench::{bench, table, BenchParams};
use frechet_gap::compute::{compute, summary, Algorithm, ComputeRequest, Measure, VariantArg};
use frechet_gap::error::{CliError, Result};
use frechet_gap::generate::{generate, GenParams, Kind};
use frechet_gap::ingest::{read_curve, write_curve, Format};

/// Discrete Frechet distance, gap and ratio between two curves.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a measure between two curve files.
    Compute {
        #[arg(long, value_enum)]
        measure: Measure,
        #[arg(long, value_enum, default_value = "plain")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: Algorithm,
        #[arg(long)]
        curve_a: PathBuf,
        #[arg(long)]
        curve_b: PathBuf,
        /// Input format; by default taken from the file extension.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Include the witness walk (1-based positions).
        #[arg(long)]
        emit_walk: bool,
        /// Include the elapsed time, which makes the output nondeterministic.
        #[arg(long)]
        timing: bool,
    },
    /// Generate a pair of synthetic curves.
    Gen {
        #[arg(long, value_enum, default_value = "offset-outlier")]
        kind: Kind,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, value_parser = parse_pair, default_value = "0,1")]
        offset: [f64; 2],
        #[arg(long, default_value_t = 1)]
        outliers: usize,
        #[arg(long, default_value_t = 8.0)]
        magnitude: f64,
        /// Sideways step size of the offset-outlier walk.
        #[arg(long, default_value_t = 0.5)]
        jitter: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output paths; `.json` selects JSON, anything else CSV.
        #[arg(long)]
        out_a: PathBuf,
        #[arg(long)]
        out_b: PathBuf,
    },
    /// Time fast and naive algorithms on random-walk instances.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, value_enum, default_value = "shortcut")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "gap")]
        measure: Measure,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 128)]
        naive_cutoff: usize,
    },
}

fn parse_pair(s: &str) -> std::result::Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts[..] {
        [x, y] => {
            let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
            Ok([num(x)?, num(y)?])
        }
        _ => Err(format!("expected X,Y, got {s:?}")),
    }
}

fn color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal()
}

fn emit(json: &impl serde::Serialize) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, json).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out).map_err(|source| CliError::Io {
        path: "stdout".into(),
        source,
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Compute {
            measure,
            variant,
            algorithm,
            curve_a,
            curve_b,
            format,
            emit_walk,
            timing,
        } => {
            let req = ComputeRequest {
                measure,
                variant: variant.into(),
                algorithm,
                a: read_curve(&curve_a, format)?,
                b: read_curve(&curve_b, format)?,
                emit_walk,
                timing,
            };
            let result = compute(&req)?;
            emit(&result)?;
            eprintln!("{}", summary(&result, color()));
        }
        Command::Gen {
            kind,
            n,
            offset,
            outliers,
            magnitude,
            jitter,
            seed,
            out_a,
            out_b,
        } => {
            let (a, b) = generate(&GenParams {
                kind,
                n,
                offset,
                outliers,
                magnitude,
                jitter,
                seed,
            })?;
            write_curve(&out_a, &a)?;
            write_curve(&out_b, &b)?;
            emit(&serde_json::json!({
                "n": n,
                "seed": seed,
                "outA": out_a.display().to_string(),
                "outB": out_b.display().to_string(),
            }))?;
        }
        Command::Bench {
            sizes,
            trials,
            variant,
            measure,
            seed,
            naive_cutoff,
        } => {
            let report = bench(&BenchParams {
                sizes,
                trials,
                variant: variant.into(),
                measure,
                seed,
                naive_cutoff,
            })?;
            emit(&report)?;
            eprint!("{}", table(&report));
            if !report.all_agree {
                return Err(CliError::Internal("fast and naive values disagree".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

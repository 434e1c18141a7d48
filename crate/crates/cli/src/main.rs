use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_core::hecke::oracle_check;
use hecke_core::hypergeometric::HypSeriesRecord;
use hecke_core::multiplicative::{classify_cm, CmError};
use hecke_core::spectral::classify_eigen;
use hecke_core::{suites, GaussianRational, HypSeries, TruncatedSeries};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Hecke operators U_n and V_n on exact power series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a hypergeometric document to order K.
    Expand {
        #[arg(long)]
        order: usize,
        /// Input document; `-` or nothing reads standard input.
        input: Option<PathBuf>,
    },
    /// Apply U_n, symbolically (with an oracle check) or to the expansion.
    Apply {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
        mode: Mode,
        #[arg(long, default_value_t = 40)]
        order: usize,
        input: Option<PathBuf>,
    },
    /// Decide whether the series is an eigenfunction of every U_n.
    Classify { input: Option<PathBuf> },
    /// Test complete multiplicativity of c(n) = prod (a)_{n-1} / prod (b)_{n-1}.
    Cm {
        /// Comma-separated upper parameters.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        upper: String,
        /// Comma-separated lower parameters.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lower: String,
        #[arg(long, default_value_t = 60)]
        terms: usize,
    },
    /// Run a seeded property suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(suites::SUITES))]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symbolic,
    Numeric,
}

/// A failed command: the message for stderr and the exit status.
struct Failure {
    code: u8,
    message: String,
}

const SUITE_FAILURE: u8 = 1;
const PARSE_ERROR: u8 = 2;
const ILLEGAL_INPUT: u8 = 3;
const ORACLE_MISMATCH: u8 = 4;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

#[derive(Serialize)]
struct SymbolicApply {
    n: usize,
    image: HypSeries,
    canonical: HypSeries,
    verification: Verification,
}

#[derive(Serialize)]
struct Verification {
    order: usize,
    matches: bool,
    first_mismatch: Option<usize>,
    symbolic: TruncatedSeries,
    oracle: TruncatedSeries,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(doc) => {
            let mut out = io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = writeln!(out, "{doc}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            eprintln!("hecke: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Expand { order, input } => render(&read_series(input)?.expand(order)),
        Command::Apply { n, mode, order, input } => {
            let h = read_series(input)?;
            let n = usize::try_from(n).map_err(|_| fail(ILLEGAL_INPUT, "n is too large"))?;
            match mode {
                Mode::Numeric => render(&h.expand(n * order).u_n(n)),
                Mode::Symbolic => apply_symbolic(&h, n, order),
            }
        }
        Command::Classify { input } => render(&classify_eigen(&read_series(input)?)),
        Command::Cm { upper, lower, terms } => {
            let upper = parse_list(&upper)?;
            let lower = parse_list(&lower)?;
            match classify_cm(&upper, &lower, terms) {
                Ok(report) => render(&report),
                Err(err @ CmError::RouteDisagreement { .. }) => Err(fail(ORACLE_MISMATCH, err.to_string())),
                Err(err) => Err(fail(ILLEGAL_INPUT, err.to_string())),
            }
        }
        Command::Verify { suite, seed } => {
            let report = suites::run(&suite, seed).map_err(|e| fail(PARSE_ERROR, e.to_string()))?;
            let doc = render(&report)?;
            match &report.failure {
                None => Ok(doc),
                Some(counterexample) => {
                    println!("{doc}");
                    Err(fail(SUITE_FAILURE, format!("suite {suite} failed: {counterexample}")))
                }
            }
        }
    }
}

fn apply_symbolic(h: &HypSeries, n: usize, order: usize) -> Result<String, Failure> {
    let cmp = oracle_check(h, n, order);
    let doc = SymbolicApply {
        n,
        canonical: cmp.image.canonicalize(),
        image: cmp.image,
        verification: Verification {
            order,
            matches: cmp.first_mismatch.is_none(),
            first_mismatch: cmp.first_mismatch,
            symbolic: cmp.symbolic,
            oracle: cmp.oracle,
        },
    };
    let text = render(&doc)?;
    if doc.verification.matches {
        Ok(text)
    } else {
        println!("{text}");
        Err(fail(
            ORACLE_MISMATCH,
            format!("symbolic image disagrees with decimation at index {:?}", doc.verification.first_mismatch),
        ))
    }
}

fn render<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| fail(ORACLE_MISMATCH, format!("cannot serialize output: {e}")))
}

fn read_input(input: Option<PathBuf>) -> Result<String, Failure> {
    match input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(&path)
            .map_err(|e| fail(PARSE_ERROR, format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| fail(PARSE_ERROR, format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

/// Syntax problems exit with 2; a well-formed document with an illegal lower
/// parameter exits with 3.
fn read_series(input: Option<PathBuf>) -> Result<HypSeries, Failure> {
    let text = read_input(input)?;
    let record: HypSeriesRecord =
        serde_json::from_str(&text).map_err(|e| fail(PARSE_ERROR, format!("malformed document: {e}")))?;
    HypSeries::try_from(record).map_err(|e| fail(ILLEGAL_INPUT, e.to_string()))
}

fn parse_list(text: &str) -> Result<Vec<GaussianRational>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| item.parse().map_err(|e: hecke_core::scalar::ScalarError| fail(PARSE_ERROR, e.to_string())))
        .collect()
}

//! `ghost5`: build U₅ minors, reproduce the corank tables, and run the
//! verification suites from the command line.
//!
//! Exit codes: 0 success, 1 a verification suite failed, 2 usage or
//! precondition error.

mod cache;
mod config;
mod error;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ghost5::ghost::{compare_conjecture, GhostCoefficient};
use ghost5::{MinorRecord, Valuation, WeightComponent};
use serde::Serialize;

use crate::cache::Cache;
use crate::config::{Format, GridArgs, SweepConfig};
use crate::error::CliError;
use crate::suites::{Context, Suite, SuiteParams};

#[derive(Parser)]
#[command(name = "ghost5", version, about = "Exact U5 minors, classical dimensions and ghost series")]
struct Cli {
    /// Directory for cached sweep results.
    #[arg(long, global = true, env = "GHOST5_CACHE")]
    cache: Option<PathBuf>,
    /// Worker threads for sweeps; defaults to one per core.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the leading minor P_n(k, a).
    Matrix {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coranks of P_n(k, a) over a (a, k0, n) grid.
    CorankTable {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Iwahori and unramified dimensions with the invariant-subspace cross-check.
    Dims {
        #[arg(long, default_value_t = 74)]
        k_max: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Ghost coefficients and their valuations at w_k.
    Ghost {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        a: i64,
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
    /// Newton polygons of the characteristic and ghost series at weight k.
    Newton {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        a: i64,
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        grid: GridArgs,
        /// Largest weight for the dims and proof-identity suites.
        #[arg(long)]
        k_max: Option<i64>,
        /// Coefficients compared by the conjecture report.
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
}

#[derive(Serialize)]
struct GhostTerm {
    n: usize,
    valuation: Valuation,
    support: Vec<(i64, usize)>,
}

#[derive(Serialize)]
struct GhostOutput {
    k: i64,
    a: u8,
    coefficients: Vec<GhostTerm>,
}

/// Output text and whether the command succeeded.
fn execute(cli: &Cli) -> Result<(String, bool), CliError> {
    let ctx = Context { cache: cli.cache.as_deref().map(Cache::open).transpose()? };
    match &cli.command {
        Command::Matrix { k, a, n, format } => {
            let record = MinorRecord::build(WeightComponent::new(*k, *a)?, *n)?;
            Ok((output::matrix(&record, *format)?, true))
        }
        Command::CorankTable { grid, format } => {
            let cfg = SweepConfig::from_args(grid)?;
            let cells = ctx.sweep(&cfg)?;
            Ok((output::corank_table(&cells, &cfg, *format)?, true))
        }
        Command::Dims { k_max, format } => {
            let rows = suites::dims_rows(*k_max)?;
            Ok((output::dims(&rows, *format)?, true))
        }
        Command::Ghost { k, a, terms } => {
            let wc = WeightComponent::new(*k, *a)?;
            let coefficients = (1..=*terms)
                .map(|n| {
                    let c = GhostCoefficient::compute(n, wc.a());
                    GhostTerm { n, valuation: c.valuation_at(wc.k()), support: c.support }
                })
                .collect();
            Ok((output::json(&GhostOutput { k: wc.k(), a: wc.a(), coefficients })?, true))
        }
        Command::Newton { k, a, terms } => {
            let report = compare_conjecture(WeightComponent::new(*k, *a)?, *terms)?;
            Ok((output::json(&report)?, true))
        }
        Command::Verify { suite, grid, k_max, terms } => {
            let params = SuiteParams { grid: SweepConfig::from_args(grid)?, k_max: *k_max, terms: *terms };
            let report = suites::run(&ctx, *suite, &params)?;
            eprintln!("suite {}: {}/{} checks passed", report.suite, report.passed, report.total);
            Ok((output::json(&report)?, report.ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(CliError::Usage(format!("cannot start {jobs} worker threads: {e}"))),
        },
        None => execute(&cli),
    };
    match result {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

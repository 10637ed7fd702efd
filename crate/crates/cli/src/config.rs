//! Command-line configuration and its validation.

use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

/// Grid flags shared by the table and verification commands.
#[derive(Clone, Debug, Args)]
pub struct GridArgs {
    /// Components to include, comma separated.
    #[arg(long = "a", value_delimiter = ',', default_values_t = [0u8, 1, 2, 3])]
    pub a_list: Vec<u8>,
    #[arg(long, default_value_t = 3)]
    pub k0_min: i64,
    #[arg(long, default_value_t = 20)]
    pub k0_max: i64,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
}

/// A validated sweep over `(a, k₀, n)`.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub a_list: Vec<u8>,
    pub k0s: RangeInclusive<i64>,
    pub ns: RangeInclusive<usize>,
}

impl SweepConfig {
    pub fn from_args(args: &GridArgs) -> Result<Self, CliError> {
        if args.a_list.is_empty() {
            return Err(CliError::Usage("component list is empty".into()));
        }
        if let Some(a) = args.a_list.iter().find(|&&a| a > 3) {
            return Err(CliError::Usage(format!("component a={a} is outside 0..=3")));
        }
        if args.k0_min < 1 || args.k0_min > args.k0_max {
            return Err(CliError::Usage(format!("k0 range {}..={} is empty or starts below 1", args.k0_min, args.k0_max)));
        }
        if args.n_min < 1 || args.n_min > args.n_max {
            return Err(CliError::Usage(format!("n range {}..={} is empty or starts below 1", args.n_min, args.n_max)));
        }
        let mut a_list = args.a_list.clone();
        a_list.sort_unstable();
        a_list.dedup();
        Ok(Self { a_list, k0s: args.k0_min..=args.k0_max, ns: args.n_min..=args.n_max })
    }

    /// `(a, k₀)` columns in output order.
    pub fn columns(&self) -> Vec<(u8, i64)> {
        self.a_list.iter().flat_map(|&a| self.k0s.clone().map(move |k0| (a, k0))).collect()
    }

    pub fn n_values(&self) -> Vec<usize> {
        self.ns.clone().collect()
    }
}

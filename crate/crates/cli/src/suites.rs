//! Grid sweeps (optionally cached) and the verification suites built on them.

use clap::ValueEnum;
use ghost5::classical::{d_iw, d_unr, d_unr_oracle, ORACLE_WEIGHT_CAP};
use ghost5::ghost::{check_proof_identity, compare_conjecture, corollary_report, theorem_report};
use ghost5::heckeop::{entry_closed_form, entry_series_oracle};
use ghost5::oracle::wk_val_diff_oracle;
use ghost5::{column_cells, wk_val_diff, GridCell, WeightComponent};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::config::SweepConfig;
use crate::error::CliError;
use crate::output::DimsRow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Theorem,
    Corollary,
    Dims,
    Oracle,
    ProofIdentity,
    ConjectureReport,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Theorem => "theorem",
            Suite::Corollary => "corollary",
            Suite::Dims => "dims",
            Suite::Oracle => "oracle",
            Suite::ProofIdentity => "proof-identity",
            Suite::ConjectureReport => "conjecture-report",
        }
    }
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub ok: bool,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<Value>,
    pub reports: Vec<Value>,
}

impl SuiteReport {
    /// A hard suite: passes iff every check passes.
    fn from_checks(suite: Suite, checks: Vec<(bool, Value)>) -> Self {
        let total = checks.len();
        let failures: Vec<Value> = checks.iter().filter(|(ok, _)| !ok).map(|(_, v)| v.clone()).collect();
        Self {
            suite: suite.name(),
            ok: failures.is_empty(),
            passed: total - failures.len(),
            total,
            failures,
            reports: checks.into_iter().map(|(_, v)| v).collect(),
        }
    }
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

pub struct Context {
    pub cache: Option<Cache>,
}

impl Context {
    fn column(&self, a: u8, k0: i64, ns: &[usize]) -> Result<Vec<GridCell>, CliError> {
        let compute = || column_cells(a, k0, ns).map_err(CliError::from);
        match &self.cache {
            Some(cache) => {
                let params = format!("a{a}-k0{k0}-n{}-{}", ns[0], ns[ns.len() - 1]);
                cache.get_or_compute("minor-column", &params, compute)
            }
            None => compute(),
        }
    }

    /// All grid cells in `(a, k₀, n)` order.
    pub fn sweep(&self, cfg: &SweepConfig) -> Result<Vec<GridCell>, CliError> {
        let ns = cfg.n_values();
        let nested: Vec<Vec<GridCell>> =
            cfg.columns().par_iter().map(|&(a, k0)| self.column(a, k0, &ns)).collect::<Result<_, _>>()?;
        Ok(nested.into_iter().flatten().collect())
    }
}

fn admissible(k_min: i64, k_max: i64) -> Vec<WeightComponent> {
    (k_min..=k_max)
        .step_by(2)
        .flat_map(|k| (0..4).filter_map(move |a| WeightComponent::new(k, a).ok()))
        .collect()
}

pub fn dims_rows(k_max: i64) -> Result<Vec<DimsRow>, CliError> {
    admissible(2, k_max)
        .par_iter()
        .map(|&wc| {
            let oracle = d_unr_oracle(wc, ORACLE_WEIGHT_CAP)?;
            let (iw, unr) = (d_iw(wc), d_unr(wc));
            Ok(DimsRow { k: wc.k(), a: wc.a(), d_iw: iw, d_unr: unr, d_unr_oracle: oracle, agree: oracle == unr })
        })
        .collect()
}

pub struct SuiteParams {
    pub grid: SweepConfig,
    pub k_max: Option<i64>,
    pub terms: usize,
}

pub fn run(ctx: &Context, suite: Suite, p: &SuiteParams) -> Result<SuiteReport, CliError> {
    let report = match suite {
        Suite::Tables => {
            let checks = ctx
                .sweep(&p.grid)?
                .into_iter()
                .filter(|c| c.reference.is_some())
                .map(|c| (c.matches_reference(), json!({"a": c.a, "k0": c.k0, "n": c.n, "corank": c.corank, "reference": c.reference})))
                .collect();
            SuiteReport::from_checks(suite, checks)
        }
        Suite::Theorem => {
            let checks = ctx
                .sweep(&p.grid)?
                .into_iter()
                .map(|c| {
                    let r = theorem_report(WeightComponent::new(c.k, c.a as i64)?, c.n, c.corank);
                    Ok((r.holds, value(&r)))
                })
                .collect::<Result<_, CliError>>()?;
            SuiteReport::from_checks(suite, checks)
        }
        Suite::Corollary => {
            let checks = ctx
                .sweep(&p.grid)?
                .into_par_iter()
                .map(|c| {
                    let r = corollary_report(WeightComponent::new(c.k, c.a as i64)?, c.n, c.det_val);
                    Ok((r.holds, value(&r)))
                })
                .collect::<Result<_, CliError>>()?;
            SuiteReport::from_checks(suite, checks)
        }
        Suite::Dims => {
            let rows = dims_rows(p.k_max.unwrap_or(74))?;
            SuiteReport::from_checks(suite, rows.iter().map(|r| (r.agree, value(r))).collect())
        }
        Suite::Oracle => {
            let entry_checks: Vec<(bool, Value)> = (4..=42i64)
                .step_by(2)
                .collect::<Vec<_>>()
                .par_iter()
                .map(|&k| {
                    let series = entry_series_oracle(k, 12, 12)?;
                    let mut agree = true;
                    for i in 0..=12 {
                        for j in 0..=12 {
                            agree &= &entry_closed_form(k, i, j)? == series.get(i, j);
                        }
                    }
                    Ok((agree, json!({"check": "entries", "k": k, "agree": agree})))
                })
                .collect::<Result<_, CliError>>()?;
            let wk_checks: Vec<(bool, Value)> = (2..=60i64)
                .collect::<Vec<_>>()
                .par_iter()
                .map(|&k| {
                    let bad: Vec<i64> = (2..=60).filter(|&l| wk_val_diff(k, l) != wk_val_diff_oracle(k, l, 8)).collect();
                    (bad.is_empty(), json!({"check": "wk", "k": k, "agree": bad.is_empty(), "mismatched_l": bad}))
                })
                .collect();
            SuiteReport::from_checks(suite, entry_checks.into_iter().chain(wk_checks).collect())
        }
        Suite::ProofIdentity => {
            let checks = admissible(4, p.k_max.unwrap_or(50))
                .par_iter()
                .map(|&wc| {
                    let r = check_proof_identity(wc)?;
                    let ok = r.holds && (r.is_zero || (r.k, r.a) != (6, 0));
                    Ok((ok, value(&r)))
                })
                .collect::<Result<_, CliError>>()?;
            SuiteReport::from_checks(suite, checks)
        }
        Suite::ConjectureReport => {
            let reports: Vec<(bool, Value)> = p
                .grid
                .columns()
                .par_iter()
                .map(|&(a, k0)| {
                    let wc = WeightComponent::from_k0(a as i64, k0)?;
                    Ok(match compare_conjecture(wc, p.terms) {
                        Ok(r) => (r.agree, value(&r)),
                        Err(e) => (false, json!({"k": wc.k(), "a": a, "error": e.to_string()})),
                    })
                })
                .collect::<Result<_, CliError>>()?;
            let mut r = SuiteReport::from_checks(suite, reports);
            r.ok = true;
            r
        }
    };
    Ok(report)
}

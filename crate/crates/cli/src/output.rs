//! Rendering of command results as JSON, CSV or Markdown.

use std::fmt::Write as _;

use ghost5::{GridCell, MinorRecord};
use serde::Serialize;

use crate::config::{Format, SweepConfig};
use crate::error::CliError;

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn markdown_row(cells: impl IntoIterator<Item = String>) -> String {
    let cells: Vec<String> = cells.into_iter().collect();
    format!("| {} |\n", cells.join(" | "))
}

pub fn matrix(record: &MinorRecord, format: Format) -> Result<String, CliError> {
    let rows: Vec<Vec<String>> = (0..record.entries.rows())
        .map(|r| record.entries.row(r).iter().map(ToString::to_string).collect())
        .collect();
    Ok(match format {
        Format::Json => json(record)?,
        Format::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
        Format::Markdown => {
            let mut out = markdown_row(std::iter::once("i \\ j".to_string()).chain((0..record.n).map(|j| j.to_string())));
            out += &markdown_row((0..=record.n).map(|_| "---".to_string()));
            for (i, r) in rows.into_iter().enumerate() {
                out += &markdown_row(std::iter::once(i.to_string()).chain(r));
            }
            out
        }
    })
}

/// Grid cells without the internal reference column.
#[derive(Serialize)]
struct CorankRow {
    a: u8,
    k0: i64,
    k: i64,
    n: usize,
    corank: usize,
}

pub fn corank_table(cells: &[GridCell], cfg: &SweepConfig, format: Format) -> Result<String, CliError> {
    let rows: Vec<CorankRow> =
        cells.iter().map(|c| CorankRow { a: c.a, k0: c.k0, k: c.k, n: c.n, corank: c.corank }).collect();
    Ok(match format {
        Format::Json => json(&rows)?,
        Format::Csv => csv(
            &["a", "k0", "k", "n", "corank"],
            rows.iter().map(|r| vec![r.a.to_string(), r.k0.to_string(), r.k.to_string(), r.n.to_string(), r.corank.to_string()]),
        ),
        Format::Markdown => {
            let mut out = String::new();
            for &a in &cfg.a_list {
                let weight = if a % 2 == 0 { "4k0+2" } else { "4k0" };
                let _ = writeln!(out, "Corank of P_n({weight},{a})\n");
                out += &markdown_row(std::iter::once("n×n".to_string()).chain(cfg.k0s.clone().map(|k0| format!("k0={k0}"))));
                out += &markdown_row((0..=cfg.k0s.clone().count()).map(|_| "---".to_string()));
                for n in cfg.ns.clone() {
                    let cells = cfg.k0s.clone().map(|k0| {
                        rows.iter()
                            .find(|r| r.a == a && r.k0 == k0 && r.n == n)
                            .filter(|r| r.corank > 0)
                            .map_or(String::new(), |r| r.corank.to_string())
                    });
                    out += &markdown_row(std::iter::once(format!("{n}×{n}")).chain(cells));
                }
                out.push('\n');
            }
            out
        }
    })
}

#[derive(Serialize)]
pub struct DimsRow {
    pub k: i64,
    pub a: u8,
    pub d_iw: usize,
    pub d_unr: usize,
    pub d_unr_oracle: usize,
    pub agree: bool,
}

pub fn dims(rows: &[DimsRow], format: Format) -> Result<String, CliError> {
    let cells = |r: &DimsRow| {
        vec![r.k.to_string(), r.a.to_string(), r.d_iw.to_string(), r.d_unr.to_string(), r.d_unr_oracle.to_string(), r.agree.to_string()]
    };
    let header = ["k", "a", "d_iw", "d_unr", "d_unr_oracle", "agree"];
    Ok(match format {
        Format::Json => json(rows)?,
        Format::Csv => csv(&header, rows.iter().map(cells)),
        Format::Markdown => {
            let mut out = markdown_row(header.iter().map(ToString::to_string));
            out += &markdown_row(header.iter().map(|_| "---".to_string()));
            for r in rows {
                out += &markdown_row(cells(r));
            }
            out
        }
    })
}

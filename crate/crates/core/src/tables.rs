//! Corank grid of the leading minors `P_n(k, a)` and the published reference
//! values it is checked against.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{val5, Valuation};
use crate::heckeop::{block_minor, WeightComponent};
use crate::linalg::{corank, determinant};

/// k₀ range covered by the reference tables.
pub const REFERENCE_K0: RangeInclusive<i64> = 3..=20;
/// Minor sizes covered by the reference tables.
pub const REFERENCE_N: RangeInclusive<usize> = 2..=10;

type Table = [[u8; 18]; 9];

/// Rows are n = 2..10, columns k₀ = 3..20.
const REFERENCE: [Table; 4] = [
    [
        [1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 3, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0],
        [0, 0, 0, 0, 2, 2, 3, 3, 3, 2, 3, 2, 2, 2, 2, 1, 2, 1],
        [0, 0, 0, 0, 1, 1, 2, 3, 4, 3, 4, 3, 3, 3, 3, 2, 3, 2],
        [0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 4, 4, 4, 4, 3, 4, 3],
        [0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 5, 5, 5, 4, 5, 4],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 5, 6, 5, 6, 5],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 5, 5, 7, 6],
    ],
    [
        [1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 2, 2, 3, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 1, 3, 3, 3, 3, 3, 2, 3, 2, 2, 2, 2, 1],
        [0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 4, 3, 4, 3, 3, 3, 3, 2],
        [0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 4, 5, 4, 4, 4, 4, 3],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 5, 5, 5, 5, 4],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 5, 6, 6, 5],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 5, 6, 6],
    ],
    [
        [0, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 1, 2, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 2, 3, 2, 3, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 2, 2, 4, 3, 3, 3, 3, 2, 3, 2, 2, 2, 2],
        [0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 4, 4, 3, 4, 3, 3, 3, 3],
        [0, 0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 5, 4, 5, 4, 4, 4, 4],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 4, 6, 5, 5, 5, 5],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 5, 6, 6, 6],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 5, 6, 7],
    ],
    [
        [0, 1, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 2, 3, 3, 2, 3, 2, 2, 2, 2, 1, 2, 1, 1],
        [0, 0, 0, 0, 0, 1, 2, 3, 3, 4, 3, 3, 3, 3, 2, 3, 2, 2],
        [0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 4, 4, 4, 3, 4, 3, 3],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 5, 5, 4, 5, 4, 4],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 5, 5, 6, 5, 5],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 4, 6, 6, 6],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 5, 6],
    ],
];

/// Published corank of `P_n(k, a)` for `k₀ ∈ 3..=20`, `n ∈ 2..=10`.
pub fn reference_corank(a: u8, k0: i64, n: usize) -> Option<usize> {
    if a > 3 || !REFERENCE_K0.contains(&k0) || !REFERENCE_N.contains(&n) {
        return None;
    }
    Some(REFERENCE[a as usize][n - 2][(k0 - 3) as usize] as usize)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GridCell {
    pub a: u8,
    pub k0: i64,
    pub k: i64,
    pub n: usize,
    pub corank: usize,
    pub det_val: Valuation,
    pub reference: Option<usize>,
}

impl GridCell {
    /// False only when a reference value exists and differs.
    pub fn matches_reference(&self) -> bool {
        self.reference.is_none_or(|r| r == self.corank)
    }
}

/// Coranks and determinant valuations of `P_n` for every `n` in `ns`, sharing
/// one build of the largest minor.
pub fn minor_column(wc: WeightComponent, ns: &[usize]) -> Result<Vec<(usize, Valuation)>> {
    if ns.contains(&0) {
        return Err(Error::EmptyMinor);
    }
    let Some(&top) = ns.iter().max() else {
        return Ok(Vec::new());
    };
    let full = block_minor(wc, top)?;
    ns.iter()
        .map(|&n| {
            let m = full.leading(n);
            Ok((corank(&m), val5(&determinant(&m)?)))
        })
        .collect()
}

/// Grid cells of one `(a, k₀)` column, one per entry of `ns`.
pub fn column_cells(a: u8, k0: i64, ns: &[usize]) -> Result<Vec<GridCell>> {
    let wc = WeightComponent::from_k0(a as i64, k0)?;
    let values = minor_column(wc, ns)?;
    Ok(ns
        .iter()
        .zip(values)
        .map(|(&n, (corank, det_val))| GridCell {
            a,
            k0,
            k: wc.k(),
            n,
            corank,
            det_val,
            reference: reference_corank(a, k0, n),
        })
        .collect())
}

/// Sweep every `(a, k₀, n)` in the given ranges. `threads = None` uses the
/// current rayon pool; output order is fixed by `(a, k₀, n)` regardless.
pub fn sweep(a_list: &[u8], k0s: RangeInclusive<i64>, ns: RangeInclusive<usize>, threads: Option<usize>) -> Result<Vec<GridCell>> {
    let columns: Vec<(u8, i64)> = a_list.iter().flat_map(|&a| k0s.clone().map(move |k0| (a, k0))).collect();
    let ns: Vec<usize> = ns.collect();
    let run = || -> Result<Vec<Vec<GridCell>>> { columns.par_iter().map(|&(a, k0)| column_cells(a, k0, &ns)).collect() };
    let nested = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(run)?,
        None => run()?,
    };
    Ok(nested.into_iter().flatten().collect())
}

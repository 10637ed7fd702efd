//! Dimensions of classical forms at Iwahori and unramified level, split by
//! U₂-eigencomponent.
//!
//! The unramified dimension comes from a short table plus the rule
//! `d(k + 24) = d(k) + 1`. [`d_unr_oracle`] recomputes it from scratch as the
//! dimension of the polynomials of degree ≤ k − 2 fixed by all 24 units under
//! the weight-k action, restricted to monomials of degree ≡ a (mod 4).

use std::collections::HashSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::heckeop::{units, weight_action_matrix, WeightComponent};
use crate::linalg::{kernel_basis, rank};
use crate::matrix::BlockMatrix;

/// Default weight cap for [`d_unr_oracle`].
pub const ORACLE_WEIGHT_CAP: i64 = 120;

/// Unramified dimensions for k₀ = 1..6, indexed `[k₀ − 1][a]`, where the
/// weight is 4k₀ + 2 for even `a` and 4k₀ for odd `a`.
const UNRAMIFIED_BASE: [[usize; 4]; 6] = [
    [0, 0, 0, 0],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [1, 1, 0, 0],
    [1, 1, 1, 1],
    [2, 1, 1, 0],
];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct DimensionProfile {
    pub k: i64,
    pub a: u8,
    pub d_iw: usize,
    pub d_unr: usize,
}

impl DimensionProfile {
    pub fn of(wc: WeightComponent) -> Self {
        Self { k: wc.k(), a: wc.a(), d_iw: d_iw(wc), d_unr: d_unr(wc) }
    }
}

/// Iwahori-level dimension: k₀ + 1, k₀, k₀, k₀ − 1 for a = 0, 1, 2, 3.
pub fn d_iw(wc: WeightComponent) -> usize {
    let k0 = wc.k0();
    let d = match wc.a() {
        0 => k0 + 1,
        1 | 2 => k0,
        _ => k0 - 1,
    };
    d as usize
}

pub fn d_unr(wc: WeightComponent) -> usize {
    let k0 = wc.k0();
    let a = wc.a() as usize;
    if (1..=6).contains(&k0) {
        return UNRAMIFIED_BASE[(k0 - 1) as usize][a];
    }
    if k0 > 6 {
        let lower = WeightComponent::new(wc.k() - 24, a as i64).expect("same class");
        return d_unr(lower) + 1;
    }
    // only k = 2 remains (a ∈ {0, 2})
    let upper = WeightComponent::new(wc.k() + 24, a as i64).expect("same class");
    d_unr(upper) - 1
}

/// Weight-k action matrices of the 24 units on polynomials of degree ≤ k − 2.
pub fn unit_representations(k: i64) -> Vec<BlockMatrix> {
    units().iter().map(|u| weight_action_matrix(&u.matrix, k)).collect()
}

/// Stack of all `ρ(u) − I`, restricted to the given columns, with repeated
/// and zero rows dropped (they cannot change the rank or the kernel).
fn stacked_conditions(reps: &[BlockMatrix], cols: &[usize]) -> BlockMatrix {
    let n = reps.first().map_or(0, BlockMatrix::rows);
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for rep in reps {
        for r in 0..n {
            let row: Vec<GaussianRational> = cols
                .iter()
                .map(|&c| if r == c { rep.get(r, c) - &GaussianRational::one() } else { rep.get(r, c).clone() })
                .collect();
            if row.iter().all(Zero::is_zero) {
                continue;
            }
            if seen.insert(row.clone()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        BlockMatrix::zeros(0, cols.len())
    } else {
        BlockMatrix::from_rows(rows)
    }
}

/// Basis of the polynomials of degree ≤ k − 2 fixed by every unit.
pub fn invariant_subspace(k: i64) -> Vec<Vec<GaussianRational>> {
    let reps = unit_representations(k);
    let cols: Vec<usize> = (0..=(k - 2) as usize).collect();
    let stacked = stacked_conditions(&reps, &cols);
    if stacked.rows() == 0 {
        return kernel_basis(&BlockMatrix::zeros(1, cols.len()));
    }
    kernel_basis(&stacked)
}

/// Unramified dimension recomputed as the invariants supported on degrees ≡ a (mod 4).
pub fn d_unr_oracle(wc: WeightComponent, cap: i64) -> Result<usize> {
    if wc.k() > cap {
        return Err(Error::CapExceeded { k: wc.k(), cap });
    }
    let cols: Vec<usize> = (0..wc.classical_size()).map(|r| wc.degree(r)).collect();
    if cols.is_empty() {
        return Ok(0);
    }
    let stacked = stacked_conditions(&unit_representations(wc.k()), &cols);
    Ok(cols.len() - rank(&stacked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckeop::{u2_matrix, Mat2};
    use crate::linalg::in_span;

    fn wc(k: i64, a: i64) -> WeightComponent {
        WeightComponent::new(k, a).unwrap()
    }

    #[test]
    fn iwahori_examples() {
        assert_eq!(d_iw(wc(14, 0)), 4);
        assert_eq!(d_iw(wc(12, 3)), 2);
        assert_eq!(d_iw(wc(4, 3)), 0);
        for k in (2..80).step_by(2) {
            for a in 0..4 {
                if let Ok(w) = WeightComponent::new(k, a) {
                    assert_eq!(d_iw(w), w.classical_size());
                }
            }
        }
    }

    #[test]
    fn unramified_examples() {
        assert_eq!(d_unr(wc(6, 0)), 0);
        assert_eq!(d_unr(wc(26, 0)), 2);
        assert_eq!(d_unr(wc(30, 0)), 1);
        assert_eq!(d_unr(wc(22, 2)), 1);
        assert_eq!(d_unr(wc(2, 0)), 1);
        assert_eq!(d_unr(wc(2, 2)), 0);
        assert_eq!(d_unr(wc(24 * 3 + 20, 3)), 4);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(d_unr_oracle(wc(6, 0), ORACLE_WEIGHT_CAP).unwrap(), 0);
        assert_eq!(d_unr_oracle(wc(22, 2), ORACLE_WEIGHT_CAP).unwrap(), 1);
        assert_eq!(d_unr_oracle(wc(30, 0), ORACLE_WEIGHT_CAP).unwrap(), 1);
        assert_eq!(d_unr_oracle(wc(2, 0), ORACLE_WEIGHT_CAP).unwrap(), 1);
        assert_eq!(d_unr_oracle(wc(130, 0), ORACLE_WEIGHT_CAP), Err(Error::CapExceeded { k: 130, cap: 120 }));
    }

    #[test]
    fn degree_classes_partition_the_basis() {
        for k in (4..40).step_by(2) {
            let total: usize = (0..4)
                .map(|a| {
                    let top = k - 2;
                    if top < a { 0 } else { ((top - a) / 4 + 1) as usize }
                })
                .sum();
            assert_eq!(total, (k - 1) as usize);
            let admissible: usize = (0..4).filter_map(|a| WeightComponent::new(k, a).ok()).map(d_iw).sum();
            assert!(admissible <= total);
        }
    }

    #[test]
    fn invariants_are_u2_stable_and_split_by_class() {
        for k in [14i64, 26, 30] {
            let inv = invariant_subspace(k);
            let u2 = u2_matrix(k).unwrap();
            for v in &inv {
                assert!(in_span(&inv, &u2.mul_vec(v)), "k={k}");
            }
            let by_class: usize = (0..4).filter_map(|a| WeightComponent::new(k, a).ok()).map(d_unr).sum();
            assert_eq!(inv.len(), by_class, "k={k}");
        }
    }

    #[test]
    fn unit_representations_are_invertible() {
        let k = 10;
        for u in units() {
            let inv: Mat2 = u.matrix.inverse().unwrap();
            let prod = &weight_action_matrix(&u.matrix, k) * &weight_action_matrix(&inv, k);
            assert_eq!(prod, BlockMatrix::identity((k - 1) as usize), "{}", u.label);
        }
    }

    #[test]
    fn profiles_bound_unramified_by_iwahori() {
        for k0 in 1..40 {
            for a in 0..4 {
                let p = DimensionProfile::of(WeightComponent::from_k0(a, k0).unwrap());
                assert!(p.d_unr <= p.d_iw, "{p:?}");
            }
        }
    }
}

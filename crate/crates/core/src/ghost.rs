//! Ghost series and the checks that compare it against the U₅ minors.
//!
//! For component `a`, the n-th ghost coefficient is `∏_l (w − w_l)^{m_n(l)}`
//! over weights `l` of the same class as the weights of component `a`, with
//! `m_n(l)` a tent function of `n` supported on `d_unr(l) < n < d_iw(l) − d_unr(l)`.
//! Only 5-adic valuations at `w = w_k` are ever needed, and
//! `v(w_k − w_l) = 1 + v₅(k − l)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::classical::{d_iw, d_unr};
use crate::error::Result;
use crate::exactnum::{v5_int, val5, Valuation};
use crate::heckeop::{antidiagonal_operator, block_minor, classical_block, WeightComponent};
use crate::linalg::{agreement_prefix, corank, determinant, newton_polygon, rank, stabilized_char_valuations, NewtonPolygon};

/// `min{n − d_unr, d_iw − d_unr − n}` inside the open interval, else 0.
fn tent(n: usize, d_unr: usize, d_iw: usize) -> usize {
    if d_unr < n && n + d_unr < d_iw {
        (n - d_unr).min(d_iw - d_unr - n)
    } else {
        0
    }
}

/// Multiplicity of the ghost zero at `w_l` in the n-th coefficient.
pub fn ghost_exponent(n: usize, l: WeightComponent) -> usize {
    tent(n, d_unr(l), d_iw(l))
}

/// `v₅(w_k − w_l)` with `w_k = exp(5(k − 2)) − 1`.
pub fn wk_val_diff(k: i64, l: i64) -> Valuation {
    if k == l {
        Valuation::Infinite
    } else {
        Valuation::Finite(1 + v5_int(&BigInt::from(k - l)))
    }
}

/// Smallest weight of the class of component `a`.
fn first_weight(a: u8) -> i64 {
    if a.is_multiple_of(2) { 2 } else { 4 }
}

/// A weight `L` such that `d_unr(l, a) ≥ n` for every class weight `l ≥ L`,
/// so no such `l` can carry a ghost zero in coefficient `n`.
///
/// Within each residue class mod 24 the unramified dimension grows by one per
/// step, so it suffices to find, per residue, the first weight reaching `n`.
pub fn support_bound(n: usize, a: u8) -> i64 {
    let start = first_weight(a);
    (0..6)
        .map(|t| {
            let mut l = start + 4 * t;
            while d_unr(WeightComponent::new(l, a as i64).expect("class weight")) < n {
                l += 24;
            }
            l
        })
        .max()
        .expect("six residues")
}

/// The n-th ghost coefficient of component `a` as its list of zeros.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GhostCoefficient {
    pub n: usize,
    pub a: u8,
    /// `(l, m)`: a zero of order `m` at `w_l`.
    pub support: Vec<(i64, usize)>,
}

impl GhostCoefficient {
    pub fn compute(n: usize, a: u8) -> Self {
        let bound = support_bound(n, a);
        let support = (first_weight(a)..bound)
            .step_by(4)
            .filter_map(|l| {
                let m = ghost_exponent(n, WeightComponent::new(l, a as i64).expect("class weight"));
                (m > 0).then_some((l, m))
            })
            .collect();
        Self { n, a, support }
    }

    /// Valuation of the coefficient evaluated at `w_k`.
    pub fn valuation_at(&self, k: i64) -> Valuation {
        self.support.iter().fold(Valuation::Finite(0), |acc, &(l, m)| match wk_val_diff(k, l) {
            Valuation::Finite(v) => acc + Valuation::Finite(v * m as i64),
            Valuation::Infinite => Valuation::Infinite,
        })
    }
}

/// `G^{(a)}(w, t) = 1 + Σ g_n(w) tⁿ`, with coefficients built on demand.
#[derive(Clone, Copy, Debug)]
pub struct GhostSeries {
    a: u8,
}

impl GhostSeries {
    pub fn new(a: u8) -> Self {
        Self { a }
    }

    pub fn coefficient(&self, n: usize) -> GhostCoefficient {
        GhostCoefficient::compute(n, self.a)
    }

    pub fn coefficients(&self, upto: usize) -> Vec<GhostCoefficient> {
        (1..=upto).map(|n| self.coefficient(n)).collect()
    }
}

pub fn ghost_coeff_valuation(n: usize, wc: WeightComponent) -> Valuation {
    if n == 0 {
        return Valuation::Finite(0);
    }
    GhostCoefficient::compute(n, wc.a()).valuation_at(wc.k())
}

pub fn ghost_newton_polygon(wc: WeightComponent, terms: usize) -> Result<NewtonPolygon> {
    let points: Vec<(i64, Valuation)> = (0..=terms).map(|n| (n as i64, ghost_coeff_valuation(n, wc))).collect();
    newton_polygon(&points)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TheoremReport {
    pub k: i64,
    pub a: u8,
    pub n: usize,
    pub corank: usize,
    pub bound: usize,
    pub holds: bool,
}

/// Lower bound for the corank of `P_n(k, a)`.
pub fn theorem_bound(wc: WeightComponent, n: usize) -> usize {
    tent(n, d_unr(wc), d_iw(wc))
}

pub fn theorem_report(wc: WeightComponent, n: usize, corank: usize) -> TheoremReport {
    let bound = theorem_bound(wc, n);
    TheoremReport { k: wc.k(), a: wc.a(), n, corank, bound, holds: corank >= bound }
}

pub fn check_theorem(wc: WeightComponent, n: usize) -> Result<TheoremReport> {
    Ok(theorem_report(wc, n, corank(&block_minor(wc, n)?)))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CorollaryReport {
    pub k: i64,
    pub a: u8,
    pub n: usize,
    pub det_val: Valuation,
    pub ghost_val: Valuation,
    pub holds: bool,
}

pub fn corollary_report(wc: WeightComponent, n: usize, det_val: Valuation) -> CorollaryReport {
    let ghost_val = ghost_coeff_valuation(n, wc);
    CorollaryReport { k: wc.k(), a: wc.a(), n, det_val, ghost_val, holds: det_val >= ghost_val }
}

/// Whether `det P_n(k, a)` is divisible by the n-th ghost coefficient at `w_k`.
pub fn check_corollary(wc: WeightComponent, n: usize) -> Result<CorollaryReport> {
    let det = determinant(&block_minor(wc, n)?)?;
    Ok(corollary_report(wc, n, val5(&det)))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProofIdentityReport {
    pub k: i64,
    pub a: u8,
    pub size: usize,
    pub rank: usize,
    pub bound: usize,
    pub holds: bool,
    pub is_zero: bool,
    /// Rank with the anti-diagonal operator scaled by `(−1)^a`.
    pub signed_rank: usize,
    pub signed_holds: bool,
}

/// Rank of (classical U₅ block + anti-diagonal operator) against `d_unr`.
///
/// The sum as written only meets the bound for even `a`; for odd `a` the bound
/// is met once the anti-diagonal operator is scaled by −1, which
/// `signed_rank` records.
pub fn check_proof_identity(wc: WeightComponent) -> Result<ProofIdentityReport> {
    let block = classical_block(wc)?;
    let ad = antidiagonal_operator(wc)?;
    let sum = &block + &ad;
    let signed = if wc.a().is_multiple_of(2) { sum.clone() } else { &block - &ad };
    let r = rank(&sum);
    let signed_rank = rank(&signed);
    let bound = d_unr(wc);
    Ok(ProofIdentityReport {
        k: wc.k(),
        a: wc.a(),
        size: sum.rows(),
        rank: r,
        bound,
        holds: r <= bound,
        is_zero: sum.is_zero(),
        signed_rank,
        signed_holds: signed_rank <= bound,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConjectureReport {
    pub k: i64,
    pub a: u8,
    pub terms: usize,
    pub char_valuations: Vec<(i64, Valuation)>,
    pub char_polygon: NewtonPolygon,
    pub ghost_polygon: NewtonPolygon,
    pub agree_up_to: i64,
    pub agree: bool,
}

/// Newton polygons of the stabilized characteristic series and of the ghost
/// series at `w_k`, side by side. Reports only; never asserts agreement.
pub fn compare_conjecture(wc: WeightComponent, terms: usize) -> Result<ConjectureReport> {
    let char_valuations = stabilized_char_valuations(wc, terms, None)?;
    let char_polygon = newton_polygon(&char_valuations)?;
    let ghost_polygon = ghost_newton_polygon(wc, terms)?;
    let agree_up_to = agreement_prefix(&char_polygon, &ghost_polygon);
    let agree = char_polygon == ghost_polygon;
    Ok(ConjectureReport {
        k: wc.k(),
        a: wc.a(),
        terms,
        char_valuations,
        char_polygon,
        ghost_polygon,
        agree_up_to,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::wk_val_diff_oracle;

    fn wc(k: i64, a: i64) -> WeightComponent {
        WeightComponent::new(k, a).unwrap()
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(ghost_exponent(1, wc(6, 0)), 1);
        assert_eq!(ghost_exponent(1, wc(4, 3)), 0);
        assert_eq!(ghost_exponent(3, wc(30, 0)), 2);
    }

    #[test]
    fn exponent_is_a_symmetric_tent() {
        for l in (6..200).step_by(4) {
            let w = wc(l, 0);
            let (u, d) = (d_unr(w), d_iw(w));
            for n in 0..=d + 2 {
                let m = ghost_exponent(n, w);
                if u < n && n + u < d {
                    assert_eq!(m, ghost_exponent(d - n, w), "l={l} n={n}");
                    assert!(m > 0);
                } else {
                    assert_eq!(m, 0);
                }
            }
        }
    }

    #[test]
    fn wk_examples() {
        assert_eq!(wk_val_diff(6, 26), Valuation::Finite(2));
        assert_eq!(wk_val_diff(6, 10), Valuation::Finite(1));
        assert_eq!(wk_val_diff(6, 6), Valuation::Infinite);
        for (k, l) in [(6, 26), (6, 10), (2, 52), (7, 57)] {
            assert_eq!(wk_val_diff(k, l), wk_val_diff_oracle(k, l, 6));
        }
    }

    /// Brute-force support: every class weight up to a generous limit.
    fn brute_support(n: usize, a: u8, limit: i64) -> Vec<(i64, usize)> {
        (first_weight(a)..limit)
            .step_by(4)
            .filter_map(|l| {
                let m = ghost_exponent(n, wc(l, a as i64));
                (m > 0).then_some((l, m))
            })
            .collect()
    }

    #[test]
    fn support_matches_enumeration() {
        for a in 0..4u8 {
            for n in 1..8 {
                let c = GhostCoefficient::compute(n, a);
                assert_eq!(c.support, brute_support(n, a, 24 * (n as i64 + 6) + 200), "a={a} n={n}");
                for &(l, _) in &c.support {
                    let w = wc(l, a as i64);
                    assert!(d_unr(w) < n && n < d_iw(w) - d_unr(w));
                }
            }
        }
        assert_eq!(GhostCoefficient::compute(1, 0).support, vec![(6, 1)]);
    }

    #[test]
    fn coefficient_valuation_examples() {
        assert_eq!(ghost_coeff_valuation(1, wc(6, 0)), Valuation::Infinite);
        assert_eq!(ghost_coeff_valuation(1, wc(10, 0)), Valuation::Finite(1));
        assert_eq!(ghost_coeff_valuation(0, wc(10, 0)), Valuation::Finite(0));
        assert_eq!(GhostCoefficient::compute(1, 3).support, vec![(12, 1), (16, 1), (24, 1)]);
        assert_eq!(ghost_coeff_valuation(1, wc(8, 3)), Valuation::Finite(3));
        for n in 0..6 {
            let inf = ghost_coeff_valuation(n, wc(30, 0)).is_infinite();
            assert_eq!(inf, n > 0 && ghost_exponent(n, wc(30, 0)) > 0);
        }
    }

    #[test]
    fn ghost_polygon_examples() {
        let p = ghost_newton_polygon(wc(10, 0), 3).unwrap();
        assert_eq!(p.vertices()[0], (0, 0));
        assert_eq!(p.value_at(1), Some(num_rational::Ratio::from_integer(1)));
        let p = ghost_newton_polygon(wc(6, 0), 3).unwrap();
        assert!(p.vertices().iter().all(|v| v.0 != 1));
    }

    #[test]
    fn theorem_examples() {
        let r = check_theorem(wc(30, 0), 4).unwrap();
        assert_eq!((r.bound, r.corank, r.holds), (3, 3, true));
        let r = check_theorem(wc(6, 0), 1).unwrap();
        assert_eq!((r.bound, r.corank, r.holds), (1, 1, true));
        let r = check_theorem(wc(30, 0), 9).unwrap();
        assert_eq!(r.bound, 0);
        assert!(r.holds);
    }

    #[test]
    fn corollary_examples() {
        let r = check_corollary(wc(6, 0), 1).unwrap();
        assert_eq!(r.det_val, Valuation::Infinite);
        assert!(r.holds);
        let r = check_corollary(wc(14, 0), 2).unwrap();
        assert_eq!(r.det_val, Valuation::Infinite);
        assert!(r.holds);
        let r = check_corollary(wc(10, 0), 1).unwrap();
        assert_eq!(r.ghost_val, Valuation::Finite(1));
        assert!(r.holds);
        assert!(r.det_val >= Valuation::Finite(1) && !r.det_val.is_infinite());
    }

    #[test]
    fn proof_identity_examples() {
        let r = check_proof_identity(wc(6, 0)).unwrap();
        assert!(r.is_zero && r.holds);
        let r = check_proof_identity(wc(26, 0)).unwrap();
        assert!(r.rank <= 2 && r.holds);
        let r = check_proof_identity(wc(14, 2)).unwrap();
        assert!(r.rank <= 1 && r.holds);
        let r = check_proof_identity(wc(4, 3)).unwrap();
        assert_eq!((r.size, r.rank), (0, 0));
        // odd components need the sign twist
        let r = check_proof_identity(wc(16, 1)).unwrap();
        assert_eq!((r.rank, r.signed_rank, r.bound), (4, 1, 1));
        assert!(!r.holds && r.signed_holds);
        let r = check_proof_identity(wc(26, 0)).unwrap();
        assert_eq!(r.rank, r.signed_rank);
    }

    #[test]
    fn conjecture_report_is_deterministic() {
        let a = compare_conjecture(wc(10, 0), 3).unwrap();
        let b = compare_conjecture(wc(10, 0), 3).unwrap();
        assert_eq!(a, b);
        assert!(a.agree_up_to >= 0);
        assert_eq!(a.char_polygon.vertices()[0], (0, 0));
    }
}

//! The U₅ operator on Q₅⟨z⟩ and the quaternionic data it is built from.
//!
//! Matrices act on the monomial basis z⁰, z¹, …: column `j` holds the image
//! of `z^j`, row `i` the coefficient of `z^i`. For γ = [[a, b], [c, d]] the
//! weight-k action is `(f ||_k γ)(z) = (cz + d)^{k-2} f((az + b)/(cz + d))`,
//! and U₅ is the sum of this action over five fixed matrices δ₁..δ₅.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{GaussianInteger, GaussianRational};
pub use crate::matrix::BlockMatrix;

/// A 2×2 matrix over Q(i), stored as `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub a: GaussianRational,
    pub b: GaussianRational,
    pub c: GaussianRational,
    pub d: GaussianRational,
}

impl Mat2 {
    pub fn new(a: GaussianRational, b: GaussianRational, c: GaussianRational, d: GaussianRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(GaussianRational::one(), GaussianRational::zero(), GaussianRational::zero(), GaussianRational::one())
    }

    /// Image of the quaternion `c₁·1 + cᵢ·i + cⱼ·j + cₖ·k` under
    /// 1 ↦ I, i ↦ [[0,1],[−1,0]], j ↦ diag(ν₅, −ν₅), k ↦ [[0,−ν₅],[−ν₅,0]].
    pub fn from_quaternion(coords: [&GaussianRational; 4]) -> Self {
        let [one, qi, qj, qk] = coords;
        let nu = GaussianRational::i();
        let nj = qj * &nu;
        let nk = qk * &nu;
        Self::new(one + &nj, qi - &nk, -(qi + &nk), one - &nj)
    }

    /// Quaternion with half-integer coordinates `halves / 2`.
    pub fn from_quaternion_halves(halves: [i64; 4]) -> Self {
        let c: Vec<GaussianRational> = halves.iter().map(|&h| GaussianRational::from_frac(h, 0, 2)).collect();
        Self::from_quaternion([&c[0], &c[1], &c[2], &c[3]])
    }

    pub fn det(&self) -> GaussianRational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det().inv()?;
        Some(Mat2::new(&self.d * &det, -(&self.b * &det), -(&self.c * &det), &self.a * &det))
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn entries(&self) -> [&GaussianRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

/// α = (1 + 3i)/2, the image of (1 + 3ν₅)/2.
pub fn alpha() -> GaussianRational {
    GaussianRational::from_frac(1, 3, 2)
}

/// The five matrices whose weight-k actions sum to U₅.
pub fn deltas() -> [Mat2; 5] {
    let al = alpha();
    let one = GaussianRational::one();
    let nu = GaussianRational::i();
    let om = &one - &al; // 1 − α
    let am = &al - &one; // α − 1
    [
        Mat2::new(GaussianRational::from_ints(-2, 1), GaussianRational::zero(), GaussianRational::zero(), GaussianRational::from_ints(-2, -1)),
        Mat2::new(om.clone(), al.clone(), am.clone(), al.clone()),
        Mat2::new(om.clone(), -(&al * &nu), &am * &nu, al.clone()),
        Mat2::new(om.clone(), &al * &nu, &om * &nu, al.clone()),
        Mat2::new(om.clone(), -al.clone(), om, al),
    ]
}

/// Quaternion coordinates (doubled) of δ₁..δ₅.
pub const DELTA_QUATERNIONS: [[i64; 4]; 5] = [
    [-4, 0, 2, 0],
    [1, 1, -3, -3],
    [1, 3, -3, 1],
    [1, -3, -3, -1],
    [1, -1, -3, 3],
];

/// A unit of the maximal order together with its image in M₂(Q(i)) and its
/// reduction mod 5 as tabulated.
#[derive(Clone, Debug)]
pub struct UnitImage {
    pub label: String,
    pub quaternion_halves: [i64; 4],
    pub matrix: Mat2,
    pub mod5: [[u8; 2]; 2],
}

struct UnitRow {
    label: &'static str,
    quat: [i64; 4],
    // (x, y) meaning (x + y·ν₅)/2, order a, b, c, d
    entries: [(i64, i64); 4],
    mod5: [[u8; 2]; 2],
}

const UNIT_TABLE: [UnitRow; 12] = [
    UnitRow { label: "1", quat: [2, 0, 0, 0], entries: [(2, 0), (0, 0), (0, 0), (2, 0)], mod5: [[1, 0], [0, 1]] },
    UnitRow { label: "i", quat: [0, 2, 0, 0], entries: [(0, 0), (2, 0), (-2, 0), (0, 0)], mod5: [[0, 1], [4, 0]] },
    UnitRow { label: "j", quat: [0, 0, 2, 0], entries: [(0, 2), (0, 0), (0, 0), (0, -2)], mod5: [[2, 0], [0, 3]] },
    UnitRow { label: "k", quat: [0, 0, 0, 2], entries: [(0, 0), (0, -2), (0, -2), (0, 0)], mod5: [[0, 3], [3, 0]] },
    UnitRow { label: "(1+i+j+k)/2", quat: [1, 1, 1, 1], entries: [(1, 1), (1, -1), (-1, -1), (1, -1)], mod5: [[4, 2], [1, 2]] },
    UnitRow { label: "(-1+i+j+k)/2", quat: [-1, 1, 1, 1], entries: [(-1, 1), (1, -1), (-1, -1), (-1, -1)], mod5: [[3, 2], [1, 1]] },
    UnitRow { label: "(1-i+j+k)/2", quat: [1, -1, 1, 1], entries: [(1, 1), (-1, -1), (1, -1), (1, -1)], mod5: [[4, 1], [2, 2]] },
    UnitRow { label: "(1+i-j+k)/2", quat: [1, 1, -1, 1], entries: [(1, -1), (1, -1), (-1, -1), (1, 1)], mod5: [[2, 2], [1, 4]] },
    UnitRow { label: "(1+i+j-k)/2", quat: [1, 1, 1, -1], entries: [(1, 1), (1, 1), (-1, 1), (1, -1)], mod5: [[4, 4], [3, 2]] },
    UnitRow { label: "(-1-i+j+k)/2", quat: [-1, -1, 1, 1], entries: [(-1, 1), (-1, -1), (1, -1), (-1, -1)], mod5: [[3, 1], [2, 1]] },
    UnitRow { label: "(-1+i-j+k)/2", quat: [-1, 1, -1, 1], entries: [(-1, -1), (1, -1), (-1, -1), (-1, 1)], mod5: [[1, 2], [1, 3]] },
    UnitRow { label: "(-1+i+j-k)/2", quat: [-1, 1, 1, -1], entries: [(-1, 1), (1, 1), (-1, 1), (-1, -1)], mod5: [[3, 4], [3, 1]] },
];

/// All 24 units, each tabulated row followed by its negative.
pub fn units() -> Vec<UnitImage> {
    let mut out = Vec::with_capacity(24);
    for row in &UNIT_TABLE {
        let [a, b, c, d] = row.entries.map(|(x, y)| GaussianRational::from_frac(x, y, 2));
        let m = Mat2::new(a, b, c, d);
        let neg_mod5 = row.mod5.map(|r| r.map(|v| (5 - v) % 5));
        out.push(UnitImage { label: row.label.to_string(), quaternion_halves: row.quat, matrix: m.clone(), mod5: row.mod5 });
        out.push(UnitImage {
            label: format!("-{}", row.label),
            quaternion_halves: row.quat.map(|q| -q),
            matrix: m.neg(),
            mod5: neg_mod5,
        });
    }
    out
}

/// A weight together with a U₂-eigencomponent index.
///
/// Admissible pairs: `k ≡ 2 (mod 4)` for `a ∈ {0, 2}` and `k ≡ 0 (mod 4)`
/// for `a ∈ {1, 3}`, with `k ≥ 2` even.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct WeightComponent {
    k: i64,
    a: u8,
}

impl WeightComponent {
    pub fn new(k: i64, a: i64) -> Result<Self> {
        if !(0..=3).contains(&a) {
            return Err(Error::ComponentOutOfRange(a));
        }
        let a = a as u8;
        let need = if a.is_multiple_of(2) { "k ≡ 2 mod 4" } else { "k ≡ 0 mod 4" };
        let residue = if a.is_multiple_of(2) { 2 } else { 0 };
        if k.rem_euclid(4) != residue {
            return Err(Error::WeightParity { k, a, need });
        }
        if k < 2 || (residue == 0 && k < 4) {
            return Err(Error::WeightOutOfRange(k));
        }
        Ok(Self { k, a })
    }

    /// The weight `4k₀ + 2` (a even) or `4k₀` (a odd).
    pub fn from_k0(a: i64, k0: i64) -> Result<Self> {
        let k = if a.rem_euclid(2) == 0 { 4 * k0 + 2 } else { 4 * k0 };
        Self::new(k, a)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn k0(&self) -> i64 {
        self.k / 4
    }

    /// Number of monomials z^d with d ≤ k − 2 and d ≡ a (mod 4).
    pub fn classical_size(&self) -> usize {
        let top = self.k - 2;
        let a = self.a as i64;
        if top < a {
            0
        } else {
            ((top - a) / 4 + 1) as usize
        }
    }

    /// Monomial degree of block index `r`.
    pub fn degree(&self, r: usize) -> usize {
        4 * r + self.a as usize
    }
}

fn check_weight(k: i64) -> Result<()> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::WeightOutOfRange(k));
    }
    Ok(())
}

/// Generalized binomial coefficient C(m, r) for any integer `m` and `r ≥ 0`.
pub fn binomial(m: i64, r: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..r {
        num *= m - t;
        den *= t + 1;
    }
    num / den
}

/// Closed-form entry `P_{i,j}` of the U₅ matrix in weight `k`.
pub fn entry_closed_form(k: i64, i: usize, j: usize) -> Result<GaussianRational> {
    check_weight(k)?;
    if (i as i64 - j as i64).rem_euclid(4) != 0 {
        return Ok(GaussianRational::zero());
    }
    let (ii, jj) = (i as i64, j as i64);
    let al = alpha();
    let be = GaussianRational::from_frac(1, -3, 2);
    let prefactor = al.pow(k - ii - 2) * be.pow(ii);

    let mut sum = BigInt::zero();
    for n in 0..=ii.min(jj) {
        let term = binomial(jj, n) * binomial(k - jj - 2, ii - n);
        if (ii - n) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let mut inner = GaussianRational::from(sum * 4);
    if i == j {
        let nu = GaussianRational::i();
        inner += &((&nu - &GaussianRational::one()).pow(k - 2) * nu.pow(ii));
    }
    Ok(prefactor * inner)
}

/// Dense truncated power series in two variables, indexed `[x-degree][y-degree]`.
struct Bivariate {
    coeffs: Vec<Vec<GaussianRational>>,
}

impl Bivariate {
    fn zero(max_x: usize, max_y: usize) -> Self {
        Self { coeffs: vec![vec![GaussianRational::zero(); max_y + 1]; max_x + 1] }
    }

    fn max_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn max_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    /// Product with a sparse series given as `(x-degree, y-degree, coefficient)` terms.
    fn mul_sparse(&self, terms: &[(usize, usize, GaussianRational)]) -> Self {
        let mut out = Self::zero(self.max_x(), self.max_y());
        for (px, row) in self.coeffs.iter().enumerate() {
            for (py, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (tx, ty, t) in terms {
                    let (x, y) = (px + tx, py + ty);
                    if x <= self.max_x() && y <= self.max_y() && !t.is_zero() {
                        out.coeffs[x][y] += &(c * t);
                    }
                }
            }
        }
        out
    }

    fn add_constant(&mut self, c: &GaussianRational) {
        self.coeffs[0][0] += c;
    }

    fn add_assign(&mut self, o: &Bivariate) {
        for (r, orow) in self.coeffs.iter_mut().zip(&o.coeffs) {
            for (c, oc) in r.iter_mut().zip(orow) {
                *c += oc;
            }
        }
    }
}

/// Power-series expansion of `(cx + d)^{k-1} / (cx + d − axy − by)`,
/// truncated to x-degree ≤ `max_i` and y-degree ≤ `max_j`.
fn generating_series(m: &Mat2, k: i64, max_i: usize, max_j: usize) -> Bivariate {
    // denominator = d·(1 − u) with u = −(c/d)x + (a/d)xy + (b/d)y
    let dinv = m.d.inv().expect("δ has nonzero lower-right entry");
    let u = [
        (1, 0, -(&m.c * &dinv)),
        (1, 1, &m.a * &dinv),
        (0, 1, &m.b * &dinv),
    ];
    let mut geom = Bivariate::zero(max_i, max_j);
    geom.add_constant(&GaussianRational::one());
    // u has no constant term, so u^t vanishes in the window once t > max_i + max_j.
    for _ in 0..(max_i + max_j) {
        geom = geom.mul_sparse(&u);
        geom.add_constant(&GaussianRational::one());
    }
    // numerator (cx + d)^{k−1} / d = Σ_t C(k−1, t) c^t d^{k−2−t} x^t
    let numer: Vec<(usize, usize, GaussianRational)> = (0..=max_i.min((k - 1) as usize))
        .map(|t| {
            let coeff = GaussianRational::from(binomial(k - 1, t as i64))
                * m.c.pow(t as i64)
                * m.d.pow(k - 2 - t as i64);
            (t, 0, coeff)
        })
        .collect();
    geom.mul_sparse(&numer)
}

/// The U₅ matrix up to `(max_i, max_j)` from the summed generating series of the
/// five δ's; coefficient of `x^i y^j` is `P_{i,j}`.
pub fn entry_series_oracle(k: i64, max_i: usize, max_j: usize) -> Result<BlockMatrix> {
    check_weight(k)?;
    Ok(series_of(&deltas(), k, max_i, max_j))
}

/// Generating-series coefficients for an arbitrary sum of weight-k actions.
pub fn series_of(mats: &[Mat2], k: i64, max_i: usize, max_j: usize) -> BlockMatrix {
    let mut total = Bivariate::zero(max_i, max_j);
    for m in mats {
        total.add_assign(&generating_series(m, k, max_i, max_j));
    }
    BlockMatrix::from_fn(max_i + 1, max_j + 1, |i, j| total.coeffs[i][j].clone())
}

/// Monomial-basis matrix of `f ↦ f ||_k γ` on polynomials of degree ≤ k − 2.
///
/// Computed over Z[i] for `D·γ`, with `D` the common denominator of the
/// entries, and divided by `D^{k−2}` at the end (the action is homogeneous of
/// degree k − 2 in γ).
pub fn weight_action_matrix(g: &Mat2, k: i64) -> BlockMatrix {
    assert!(k >= 2);
    let top = (k - 2) as usize;
    let size = top + 1;
    let den = g.entries().iter().fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator_lcm()));
    let [a, b, c, d] = g.entries().map(|e| e.scaled_integer(&den));
    // powers of (s·z + t) as coefficient vectors
    let lin_pows = |s: &GaussianInteger, t: &GaussianInteger| {
        let mut pows: Vec<Vec<GaussianInteger>> = vec![vec![GaussianInteger::one()]];
        for e in 1..=top {
            let prev = &pows[e - 1];
            let mut next = vec![GaussianInteger::zero(); e + 1];
            for (deg, coef) in prev.iter().enumerate() {
                next[deg] = next[deg].add(&coef.mul(t));
                next[deg + 1] = coef.mul(s);
            }
            pows.push(next);
        }
        pows
    };
    let cd = lin_pows(&c, &d);
    let ab = lin_pows(&a, &b);
    let mut acc = vec![vec![GaussianInteger::zero(); size]; size];
    for j in 0..size {
        let left = &cd[top - j];
        let right = &ab[j];
        for (p, x) in left.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in right.iter().enumerate() {
                if !y.is_zero() {
                    acc[p + q][j] = acc[p + q][j].add(&x.mul(y));
                }
            }
        }
    }
    let scale = GaussianRational::from(den.pow(top as u32)).inv().expect("nonzero denominator");
    BlockMatrix::from_fn(size, size, |r, c| {
        let v = &acc[r][c];
        if v.is_zero() {
            GaussianRational::zero()
        } else {
            &GaussianRational::from_gaussian_integer(v) * &scale
        }
    })
}

/// The minor `P_n(k, a) = (P_{4r+a, 4c+a})_{0 ≤ r, c < n}`.
pub fn block_minor(wc: WeightComponent, n: usize) -> Result<BlockMatrix> {
    if n == 0 {
        return Err(Error::EmptyMinor);
    }
    check_weight(wc.k())?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let mut row = Vec::with_capacity(n);
        for c in 0..n {
            row.push(entry_closed_form(wc.k(), wc.degree(r), wc.degree(c))?);
        }
        rows.push(row);
    }
    Ok(BlockMatrix::from_rows(rows))
}

/// The U₅ block on classical forms: `P_d(k, a)` with `d` the number of
/// degree-≤(k−2) monomials in class `a`. Empty when `d = 0`.
pub fn classical_block(wc: WeightComponent) -> Result<BlockMatrix> {
    match wc.classical_size() {
        0 => Ok(BlockMatrix::zeros(0, 0)),
        d => block_minor(wc, d),
    }
}

/// U₂-eigenvalue `((1+i)/2)^{k−2} · (−i)^a` on component `a`.
pub fn u2_eigenvalue(wc: WeightComponent) -> GaussianRational {
    GaussianRational::from_frac(1, 1, 2).pow(wc.k() - 2) * GaussianRational::from_ints(0, -1).pow(wc.a() as i64)
}

/// Diagonal matrix of φ(z) ↦ ((−1−i)/2)^{k−2} φ(−i z) on z⁰..z^{k−2}.
pub fn u2_matrix(k: i64) -> Result<BlockMatrix> {
    check_weight(k)?;
    let scalar = GaussianRational::from_frac(-1, -1, 2).pow(k - 2);
    let minus_i = GaussianRational::from_ints(0, -1);
    Ok(BlockMatrix::diagonal((0..=(k - 2)).map(|d| &scalar * &minus_i.pow(d)).collect()))
}

/// The operator φ ↦ φ ||_k [[0, −2−i], [−2+i, 0]] restricted to component `a`
/// of the classical space: anti-diagonal, sending degree `4c+a` to degree
/// `k−2−(4c+a)` with coefficient `(−2+i)^{out}(−2−i)^{in}`.
pub fn antidiagonal_operator(wc: WeightComponent) -> Result<BlockMatrix> {
    let d = wc.classical_size();
    let p = GaussianRational::from_ints(-2, 1);
    let q = GaussianRational::from_ints(-2, -1);
    let mut m = BlockMatrix::zeros(d, d);
    for c in 0..d {
        let r = d - 1 - c;
        let (out_deg, in_deg) = (wc.degree(r) as i64, wc.degree(c) as i64);
        debug_assert_eq!(out_deg + in_deg, wc.k() - 2);
        m.set(r, c, p.pow(out_deg) * q.pow(in_deg));
    }
    Ok(m)
}

/// JSON form of a minor: `{k, a, n, entries}`.
#[derive(Serialize, Debug)]
pub struct MinorRecord {
    pub k: i64,
    pub a: u8,
    pub n: usize,
    pub entries: BlockMatrix,
}

impl MinorRecord {
    pub fn build(wc: WeightComponent, n: usize) -> Result<Self> {
        Ok(Self { k: wc.k(), a: wc.a(), n, entries: block_minor(wc, n)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{embed_mod, val5, Valuation};

    fn g(re: i64, im: i64, den: i64) -> GaussianRational {
        GaussianRational::from_frac(re, im, den)
    }

    #[test]
    fn closed_form_examples() {
        assert!(entry_closed_form(10, 0, 1).unwrap().is_zero());
        assert!(entry_closed_form(6, 0, 0).unwrap().is_zero());
        assert_eq!(entry_closed_form(4, 0, 0).unwrap(), g(-5, 10, 1));
        assert_eq!(entry_closed_form(6, 4, 0).unwrap(), g(7, 24, 1));
        // α²(4 + (i − 1)²)
        let al = alpha();
        let alt = &al * &al * (GaussianRational::from(4) + (GaussianRational::i() - GaussianRational::from(1)).pow(2));
        assert_eq!(entry_closed_form(4, 0, 0).unwrap(), alt);
    }

    #[test]
    fn closed_form_rejects_bad_weights() {
        assert_eq!(entry_closed_form(3, 0, 0), Err(Error::WeightOutOfRange(3)));
        assert_eq!(entry_closed_form(2, 0, 0), Err(Error::WeightOutOfRange(2)));
    }

    #[test]
    fn series_examples() {
        let k = 10;
        let s = entry_series_oracle(k, 8, 8).unwrap();
        assert!(entry_series_oracle(6, 0, 0).unwrap().get(0, 0).is_zero());
        for i in 0..=8usize {
            for j in 0..=8usize {
                if (i as i64 - j as i64).rem_euclid(4) != 0 {
                    assert!(s.get(i, j).is_zero(), "({i},{j})");
                }
            }
        }
        // δ₁ alone is diagonal: (−2−i)^{k−2} ((2−i)/(2+i))^i
        let d1 = series_of(&deltas()[..1], k, 6, 6);
        let ratio = g(2, -1, 1) / g(2, 1, 1);
        for i in 0..=6usize {
            assert_eq!(d1.get(i, i), &(g(-2, -1, 1).pow(k - 2) * ratio.pow(i as i64)));
        }
    }

    #[test]
    fn delta_matrices_match_quaternion_images() {
        let ds = deltas();
        for (d, q) in ds.iter().zip(DELTA_QUATERNIONS) {
            assert_eq!(d, &Mat2::from_quaternion_halves(q));
            assert_eq!(d.det(), GaussianRational::from(5));
        }
        // δ₂ written out: ½[[1−3ν, 1+3ν], [−1+3ν, 1+3ν]]
        assert_eq!(ds[1], Mat2::new(g(1, -3, 2), g(1, 3, 2), g(-1, 3, 2), g(1, 3, 2)));
        assert_eq!(ds[2], Mat2::new(g(1, -3, 2), g(3, -1, 2), g(-3, -1, 2), g(1, 3, 2)));
        assert_eq!(ds[3], Mat2::new(g(1, -3, 2), g(-3, 1, 2), g(3, 1, 2), g(1, 3, 2)));
        assert_eq!(ds[4], Mat2::new(g(1, -3, 2), g(-1, -3, 2), g(1, -3, 2), g(1, 3, 2)));
    }

    #[test]
    fn unit_table_is_consistent() {
        let us = units();
        assert_eq!(us.len(), 24);
        for u in &us {
            assert_eq!(u.matrix, Mat2::from_quaternion_halves(u.quaternion_halves), "{}", u.label);
            assert_eq!(u.matrix.det(), GaussianRational::one(), "{}", u.label);
            let red: Vec<u8> = u
                .matrix
                .entries()
                .iter()
                .map(|e| embed_mod(e, 1).unwrap().residue().to_string().parse().unwrap())
                .collect();
            assert_eq!(red, vec![u.mod5[0][0], u.mod5[0][1], u.mod5[1][0], u.mod5[1][1]], "{}", u.label);
        }
        // closed under multiplication
        for x in &us {
            for y in &us {
                let p = x.matrix.mul(&y.matrix);
                assert!(us.iter().any(|z| z.matrix == p));
            }
        }
    }

    #[test]
    fn weight_component_admissibility() {
        assert!(WeightComponent::new(6, 0).is_ok());
        assert!(WeightComponent::new(8, 1).is_ok());
        assert!(WeightComponent::new(2, 0).is_ok());
        let e = WeightComponent::new(7, 0).unwrap_err();
        assert!(e.to_string().contains("weight parity"));
        assert!(matches!(WeightComponent::new(8, 0), Err(Error::WeightParity { .. })));
        assert!(matches!(WeightComponent::new(6, 1), Err(Error::WeightParity { .. })));
        assert_eq!(WeightComponent::new(6, 4), Err(Error::ComponentOutOfRange(4)));
        assert_eq!(WeightComponent::new(0, 1), Err(Error::WeightOutOfRange(0)));
        assert_eq!(WeightComponent::from_k0(3, 6).unwrap().k(), 24);
        assert_eq!(WeightComponent::from_k0(2, 3).unwrap().k(), 14);
    }

    #[test]
    fn minor_examples() {
        let p = block_minor(WeightComponent::new(6, 0).unwrap(), 1).unwrap();
        assert!(p.is_zero());
        assert_eq!(block_minor(WeightComponent::new(6, 0).unwrap(), 0), Err(Error::EmptyMinor));
        let wc = WeightComponent::new(18, 2).unwrap();
        let m = block_minor(wc, 5).unwrap();
        for r in 0..5 {
            for c in 0..5 {
                assert!(val5(m.get(r, c)) >= Valuation::Finite(wc.degree(r) as i64));
            }
        }
    }

    #[test]
    fn u2_examples() {
        assert_eq!(u2_eigenvalue(WeightComponent::new(4, 1).unwrap()), g(1, 0, 2));
        assert_eq!(u2_eigenvalue(WeightComponent::new(2, 0).unwrap()), g(1, 0, 1));
        assert_eq!(u2_eigenvalue(WeightComponent::new(6, 0).unwrap()), g(-1, 0, 4));
        let u = u2_matrix(6).unwrap();
        assert_eq!(u.get(0, 0), &g(-1, 0, 4));
        let u = u2_matrix(14).unwrap();
        for d in 0..8 {
            assert_eq!(u.get(d, d), u.get(d + 4, d + 4));
        }
        let fourth = u.pow(4);
        let scalar = g(1, 1, 2).pow(4 * 12);
        assert_eq!(fourth, BlockMatrix::identity(13).scale(&scalar));
        // eigenvalue on class a matches the diagonal entries z^{4r+a}
        for a in 0..4 {
            let k = if a % 2 == 0 { 14 } else { 12 };
            let wc = WeightComponent::new(k, a).unwrap();
            let um = u2_matrix(k).unwrap();
            assert_eq!(um.get(a as usize, a as usize), &u2_eigenvalue(wc));
        }
    }

    #[test]
    fn antidiagonal_examples() {
        let m = antidiagonal_operator(WeightComponent::new(6, 0).unwrap()).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.get(0, 1), &g(-7, 24, 1));
        assert_eq!(m.get(1, 0), &g(-7, -24, 1));
        assert!(m.get(0, 0).is_zero() && m.get(1, 1).is_zero());
        let m = antidiagonal_operator(WeightComponent::new(24, 3).unwrap()).unwrap();
        assert_eq!(m.rows(), 5);
        assert_eq!(m.get(0, 4), &(g(-2, 1, 1).pow(3) * g(-2, -1, 1).pow(19)));
    }

    #[test]
    fn weight_action_sum_matches_closed_form_classically() {
        for k in [4i64, 6, 10, 16] {
            let total = deltas()
                .iter()
                .map(|d| weight_action_matrix(d, k))
                .reduce(|x, y| &x + &y)
                .unwrap();
            for i in 0..=(k - 2) as usize {
                for j in 0..=(k - 2) as usize {
                    assert_eq!(total.get(i, j), &entry_closed_form(k, i, j).unwrap(), "k={k} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn minor_record_json_shape() {
        let r = MinorRecord::build(WeightComponent::new(6, 0).unwrap(), 1).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"k":6,"a":0,"n":1,"entries":[["0/1 + 0/1*i"]]}"#);
    }
}

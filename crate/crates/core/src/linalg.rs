//! Exact linear algebra over Q(i): rank, determinant, kernels, characteristic
//! polynomials, and Newton polygons of valuation data.
//!
//! Rank and determinant clear each row to Z[i] and run fraction-free
//! (Bareiss) elimination, pivoting on the first nonzero entry in row order.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{val5, GaussianInteger, GaussianRational, Valuation};
use crate::heckeop::{block_minor, WeightComponent};
use crate::matrix::BlockMatrix;

fn integer_rows(m: &BlockMatrix) -> (Vec<Vec<GaussianInteger>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.rows());
    let mut scales = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let row = m.row(r);
        let scale = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator_lcm()));
        rows.push(row.iter().map(|e| e.scaled_integer(&scale)).collect());
        scales.push(scale);
    }
    (rows, scales)
}

/// Fraction-free forward elimination in place; returns pivot columns and the
/// parity of row swaps. Stops early at the first pivotless column when
/// `stop_on_gap` is set (enough for determinants).
fn bareiss(a: &mut [Vec<GaussianInteger>], cols: usize, stop_on_gap: bool) -> (Vec<usize>, bool) {
    let rows = a.len();
    let mut prev = GaussianInteger::one();
    let mut pivots = Vec::new();
    let mut odd = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| !a[p][c].is_zero()) else {
            if stop_on_gap {
                break;
            }
            continue;
        };
        if p != r {
            a.swap(p, r);
            odd = !odd;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in (c + 1)..cols {
                let v = if lead.is_zero() {
                    piv.mul(&row[j])
                } else {
                    piv.mul(&row[j]).sub(&lead.mul(&pivot_row[j]))
                };
                row[j] = v.div_exact(&prev);
            }
            row[c] = GaussianInteger::zero();
        }
        prev = piv.clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, odd)
}

pub fn rank(m: &BlockMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let (mut rows, _) = integer_rows(m);
    bareiss(&mut rows, m.cols(), false).0.len()
}

/// `min(rows, cols) − rank`.
pub fn corank(m: &BlockMatrix) -> usize {
    m.rows().min(m.cols()) - rank(m)
}

pub fn determinant(m: &BlockMatrix) -> Result<GaussianRational> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(GaussianRational::one());
    }
    let (mut rows, scales) = integer_rows(m);
    let (pivots, odd) = bareiss(&mut rows, n, true);
    if pivots.len() < n {
        return Ok(GaussianRational::zero());
    }
    let mut det = GaussianRational::from_gaussian_integer(&rows[n - 1][n - 1]);
    if odd {
        det = -det;
    }
    let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(det / GaussianRational::from(scale))
}

/// Reduced row echelon form over Q(i); returns the reduced matrix and pivot columns.
pub fn rref(m: &BlockMatrix) -> (BlockMatrix, Vec<usize>) {
    let mut a = m.row_vecs();
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| !a[p][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *x -= &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let out = if rows == 0 { BlockMatrix::zeros(0, cols) } else { BlockMatrix::from_rows(a) };
    (out, pivots)
}

/// A basis of `{v : M v = 0}`.
pub fn kernel_basis(m: &BlockMatrix) -> Vec<Vec<GaussianRational>> {
    let (red, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![GaussianRational::zero(); m.cols()];
            v[f] = GaussianRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f);
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<GaussianRational>], v: &[GaussianRational]) -> bool {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero);
    }
    let b = BlockMatrix::from_rows(basis.to_vec());
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(&BlockMatrix::from_rows(with)) == rank(&b)
}

/// Coefficients `c_0..c_n` of `det(I − X·M)`, ascending in X.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CharPoly {
    pub coefficients: Vec<GaussianRational>,
}

impl CharPoly {
    pub fn degree_bound(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, j: usize) -> GaussianRational {
        self.coefficients.get(j).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn valuations(&self, upto: usize) -> Vec<(i64, Valuation)> {
        (0..=upto).map(|j| (j as i64, val5(&self.coefficient(j)))).collect()
    }
}

/// `det(I − X·M)` by Faddeev–LeVerrier over Z[i] after scaling M to integers.
pub fn char_poly(m: &BlockMatrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let den = m.entries().fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator_lcm()));
    let a: Vec<Vec<GaussianInteger>> =
        (0..n).map(|r| m.row(r).iter().map(|e| e.scaled_integer(&den)).collect()).collect();

    let mut coeffs = vec![GaussianInteger::one()];
    let mut mk: Vec<Vec<GaussianInteger>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { GaussianInteger::one() } else { GaussianInteger::zero() }).collect())
        .collect();
    for k in 1..=n {
        let mut am = vec![vec![GaussianInteger::zero(); n]; n];
        for r in 0..n {
            for t in 0..n {
                if a[r][t].is_zero() {
                    continue;
                }
                for c in 0..n {
                    if !mk[t][c].is_zero() {
                        am[r][c] = am[r][c].add(&a[r][t].mul(&mk[t][c]));
                    }
                }
            }
        }
        let tr = (0..n).fold(GaussianInteger::zero(), |acc, i| acc.add(&am[i][i]));
        let ck = tr.neg().div_exact_int(&BigInt::from(k));
        for (i, row) in am.iter_mut().enumerate() {
            row[i] = row[i].add(&ck);
        }
        coeffs.push(ck);
        mk = am;
    }
    let mut scale = BigInt::one();
    let coefficients = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if j > 0 {
                scale *= &den;
            }
            GaussianRational::from_gaussian_integer(c) / GaussianRational::from(scale.clone())
        })
        .collect();
    Ok(CharPoly { coefficients })
}

/// One edge of a Newton polygon.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Segment {
    pub slope: Ratio<i64>,
    pub length: i64,
}

/// Lower convex hull of finite `(index, valuation)` points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonPolygon {
    vertices: Vec<(i64, i64)>,
}

impl NewtonPolygon {
    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.vertices
            .windows(2)
            .map(|w| {
                let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
                Segment { slope: Ratio::new(dy, dx), length: dx }
            })
            .collect()
    }

    /// Slopes repeated by horizontal length.
    pub fn slope_multiset(&self) -> Vec<Ratio<i64>> {
        self.segments().iter().flat_map(|s| std::iter::repeat_n(s.slope, s.length as usize)).collect()
    }

    /// Rightmost index covered by the polygon.
    pub fn end(&self) -> i64 {
        self.vertices.last().map_or(0, |v| v.0)
    }

    /// Height of the polygon at `x`, if `x` lies in its horizontal range.
    pub fn value_at(&self, x: i64) -> Option<Ratio<i64>> {
        let first = self.vertices.first()?;
        if x < first.0 || x > self.end() {
            return None;
        }
        if self.vertices.len() == 1 {
            return Some(Ratio::from_integer(first.1));
        }
        let w = self.vertices.windows(2).find(|w| x <= w[1].0)?;
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        Some(Ratio::from_integer(y0) + Ratio::new((y1 - y0) * (x - x0), x1 - x0))
    }
}

impl Serialize for NewtonPolygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let vertices: Vec<(i64, Valuation)> =
            self.vertices.iter().map(|&(x, y)| (x, Valuation::Finite(y))).collect();
        let slopes: Vec<[i64; 3]> =
            self.segments().iter().map(|s| [*s.slope.numer(), *s.slope.denom(), s.length]).collect();
        let mut st = serializer.serialize_struct("NewtonPolygon", 2)?;
        st.serialize_field("vertices", &vertices)?;
        st.serialize_field("slopes", &slopes)?;
        st.end()
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

pub fn newton_polygon(points: &[(i64, Valuation)]) -> Result<NewtonPolygon> {
    if points.is_empty() {
        return Err(Error::EmptyPolygon);
    }
    let mut finite: Vec<(i64, i64)> = points.iter().filter_map(|&(x, v)| v.finite().map(|y| (x, y))).collect();
    finite.sort_by(|p, q| p.0.cmp(&q.0).then(p.1.cmp(&q.1)));
    finite.dedup_by_key(|p| p.0);
    if finite.first().map(|p| p.0) != Some(0) {
        return Err(Error::MissingOrigin);
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in finite {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    Ok(NewtonPolygon { vertices: hull })
}

/// Compares two polygons at every integer abscissa from 0 and returns the
/// last index up to which they coincide.
pub fn agreement_prefix(p: &NewtonPolygon, q: &NewtonPolygon) -> i64 {
    let end = p.end().min(q.end());
    let mut last = 0;
    for x in 0..=end {
        match p.value_at(x).cmp(&q.value_at(x)) {
            Ordering::Equal => last = x,
            _ => break,
        }
    }
    last
}

/// Valuations of `c_0..c_m` of `det(I − X·P_n(k,a))`, taking `n` up until two
/// consecutive sizes agree on all of them.
pub fn stabilized_char_valuations(wc: WeightComponent, m: usize, cap: Option<usize>) -> Result<Vec<(i64, Valuation)>> {
    let cap = cap.unwrap_or(4 * m + 16);
    let vals = |n: usize| -> Result<Vec<(i64, Valuation)>> {
        Ok(char_poly(&block_minor(wc, n)?)?.valuations(m))
    };
    let mut n = m.max(1);
    let mut prev = vals(n)?;
    while n < cap {
        n += 1;
        let cur = vals(n)?;
        if cur == prev {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NotStabilized { cap })
}

//! Exact arithmetic in Q(i) and the 5-adic valuation it inherits.
//!
//! Every matrix entry in this crate lives in Z[1/2, 1/5][i]. We compute with
//! exact Gaussian rationals and only ever look at 5-adic information through
//! the embedding i ↦ ν₅, where ν₅ ∈ Z₅ is the square root of −1 with
//! ν₅ ≡ 2 (mod 5). Under that embedding the prime of Z[i] above 5 that
//! becomes non-invertible is (2 − i).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `re + im·i` of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    /// `(re + im·i) / den`.
    pub fn from_frac(re: i64, im: i64, den: i64) -> Self {
        let den = BigInt::from(den);
        Self::new(
            BigRational::new(re.into(), den.clone()),
            BigRational::new(im.into(), den),
        )
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::new(q, BigRational::zero())
    }

    pub fn from_gaussian_integer(z: &GaussianInteger) -> Self {
        Self::new(
            BigRational::from_integer(z.re.clone()),
            BigRational::from_integer(z.im.clone()),
        )
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Field norm `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Integer power; negative exponents invert. Panics on `0^e` with `e < 0`.
    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Least common multiple of the two component denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// `self · scale` as a Gaussian integer; `scale` must clear both denominators.
    pub(crate) fn scaled_integer(&self, scale: &BigInt) -> GaussianInteger {
        let re = &self.re * BigRational::from_integer(scale.clone());
        let im = &self.im * BigRational::from_integer(scale.clone());
        debug_assert!(re.is_integer() && im.is_integer());
        GaussianInteger::new(re.to_integer(), im.to_integer())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(v: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v))
    }
}

fn add_impl(x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
    GaussianRational::new(&x.re + &y.re, &x.im + &y.im)
}

fn sub_impl(x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
    GaussianRational::new(&x.re - &y.re, &x.im - &y.im)
}

fn mul_impl(x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
    if x.im.is_zero() && y.im.is_zero() {
        return GaussianRational::from_rational(&x.re * &y.re);
    }
    GaussianRational::new(
        &x.re * &y.re - &x.im * &y.im,
        &x.re * &y.im + &x.im * &y.re,
    )
}

fn div_impl(x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
    mul_impl(x, &y.inv().expect("division by zero in Q(i)"))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                $imp(self, rhs)
            }
        }
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $imp(&self, &rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                $imp(&self, rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $imp(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

/// Canonical text form `a/b + c/d*i`, always with both fractions spelled out.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} + {}/{}*i",
            self.re.numer(),
            self.re.denom(),
            self.im.numer(),
            self.im.denom()
        )
    }
}

fn parse_fraction(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).ok()?;
    let d = BigInt::from_str(d).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "gaussian rational", input: s.to_string() };
        let (re, im) = s.split_once(" + ").ok_or_else(err)?;
        let im = im.trim().strip_suffix("*i").ok_or_else(err)?;
        Ok(Self::new(parse_fraction(re).ok_or_else(err)?, parse_fraction(im).ok_or_else(err)?))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of Z[i]; the working ring of fraction-free elimination.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        Self::new(BigInt::one(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Self::new(&self.re * &o.re, BigInt::zero());
        }
        Self::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Division known to be exact in Z[i].
    pub fn div_exact(&self, d: &Self) -> Self {
        if d.im.is_zero() {
            debug_assert!((&self.re % &d.re).is_zero() && (&self.im % &d.re).is_zero());
            return Self::new(&self.re / &d.re, &self.im / &d.re);
        }
        let n = d.norm();
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero(), "inexact Z[i] division");
        Self::new(re / &n, im / n)
    }

    pub fn div_exact_int(&self, d: &BigInt) -> Self {
        debug_assert!((&self.re % d).is_zero() && (&self.im % d).is_zero());
        Self::new(&self.re / d, &self.im / d)
    }

    /// Number of times (2 − i) divides `self`; `None` for zero.
    pub fn valuation_at_two_minus_i(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let five = BigInt::from(5);
        let (mut a, mut b) = (self.re.clone(), self.im.clone());
        let mut v = 0;
        // a + bi ≡ a + 2b at the prime i ≡ 2; then divide by (2 − i) as ·(2 + i)/5.
        while (&a + &b * 2u32).is_multiple_of(&five) {
            let na = (&a * 2u32 - &b) / &five;
            let nb = (&a + &b * 2u32) / &five;
            a = na;
            b = nb;
            v += 1;
        }
        Some(v)
    }
}

/// A 5-adic valuation: an integer, or +∞ for zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite valuations serialize as JSON integers, +∞ as the string `"inf"`.
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_i64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(Valuation::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(Valuation::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad valuation {s:?}"))),
        }
    }
}

/// Exponent of 5 in a nonzero integer.
pub fn v5_int(n: &BigInt) -> i64 {
    assert!(!n.is_zero(), "v5 of zero");
    let five = BigInt::from(5);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&five);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// 5-adic valuation of `x` under i ↦ ν₅, i.e. the (2 − i)-adic valuation on Q(i).
pub fn val5(x: &GaussianRational) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let den = x.denominator_lcm();
    let z = x.scaled_integer(&den);
    let num_v = z.valuation_at_two_minus_i().expect("nonzero numerator");
    Valuation::Finite(num_v - v5_int(&den))
}

/// A residue modulo 5^N.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PadicApprox {
    residue: BigUint,
    precision: u32,
}

impl PadicApprox {
    pub fn new(residue: BigInt, precision: u32) -> Self {
        let m = BigInt::from(5u32).pow(precision);
        let r = residue.mod_floor(&m);
        Self { residue: r.to_biguint().expect("nonnegative"), precision }
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn modulus(&self) -> BigUint {
        BigUint::from(5u32).pow(self.precision)
    }

    /// 5-adic digits, least significant first.
    pub fn digits(&self) -> Vec<u8> {
        let five = BigUint::from(5u32);
        let mut r = self.residue.clone();
        (0..self.precision)
            .map(|_| {
                let (q, d) = r.div_rem(&five);
                r = q;
                d.to_u8().unwrap()
            })
            .collect()
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Serialize for PadicApprox {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// The square root of −1 modulo 5^N that is ≡ 2 (mod 5), by Hensel lifting.
pub fn hensel_sqrt_minus_one(precision: u32) -> Result<PadicApprox> {
    if precision == 0 {
        return Err(Error::ZeroPrecision);
    }
    let mut x = BigInt::from(2);
    let mut modulus = BigInt::from(5);
    for _ in 1..precision {
        modulus *= 5;
        // x ← x − (x² + 1)/(2x)
        let f = &x * &x + 1u32;
        let inv = mod_inverse(&(&x * 2u32), &modulus).expect("2x is a unit");
        x = (&x - f * inv).mod_floor(&modulus);
    }
    Ok(PadicApprox::new(x, precision))
}

/// Image of a 5-integral `x` in Z/5^N under i ↦ ν₅.
pub fn embed_mod(x: &GaussianRational, precision: u32) -> Result<PadicApprox> {
    let nu = hensel_sqrt_minus_one(precision)?;
    let nu = BigInt::from_biguint(Sign::Plus, nu.residue().clone());
    if x.is_zero() {
        return Ok(PadicApprox::new(BigInt::zero(), precision));
    }
    if let Valuation::Finite(v) = val5(x) {
        if v < 0 {
            return Err(Error::NotIntegral(v));
        }
    }
    let modulus = BigInt::from(5u32).pow(precision);
    let den = x.denominator_lcm();
    let e = v5_int(&den);
    let unit_den = &den / BigInt::from(5u32).pow(e as u32);
    // x = z / (5^e · u) = (z / (2−i)^e) / ((2+i)^e · u); the first factor lies in Z[i].
    let mut z = x.scaled_integer(&den);
    let two_minus_i = GaussianInteger::new(2.into(), (-1).into());
    for _ in 0..e {
        z = z.div_exact(&two_minus_i);
    }
    let num = (&z.re + &z.im * &nu).mod_floor(&modulus);
    let mut d = unit_den.mod_floor(&modulus);
    let two_plus_nu = (&nu + 2u32).mod_floor(&modulus);
    for _ in 0..e {
        d = (d * &two_plus_nu).mod_floor(&modulus);
    }
    let dinv = mod_inverse(&d, &modulus).expect("denominator is a 5-adic unit");
    Ok(PadicApprox::new(num * dinv, precision))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64, den: i64) -> GaussianRational {
        GaussianRational::from_frac(re, im, den)
    }

    /// Independent valuation: strip (2 − i) from the numerator by trial division in Z[i].
    fn val_by_division(num: GaussianInteger, den: i64) -> i64 {
        let p = GaussianInteger::new(2.into(), (-1).into());
        let mut z = num;
        let mut v = 0;
        loop {
            let n = p.norm();
            let re = &z.re * &p.re + &z.im * &p.im;
            let im = &z.im * &p.re - &z.re * &p.im;
            if (&re % &n).is_zero() && (&im % &n).is_zero() {
                z = GaussianInteger::new(re / &n, im / &n);
                v += 1;
            } else {
                break;
            }
        }
        v - v5_int(&den.into())
    }

    #[test]
    fn val5_examples() {
        assert_eq!(val5(&5.into()), Valuation::Finite(1));
        assert_eq!(val5(&GaussianRational::zero()), Valuation::Infinite);
        assert_eq!(val5(&g(1, -3, 2)), Valuation::Finite(1));
        assert_eq!(val5(&g(2, 1, 1)), Valuation::Finite(0));
        assert_eq!(val5(&g(2, -1, 1)), Valuation::Finite(1));
        assert_eq!(val5(&g(1, 3, 2)), Valuation::Finite(0));
        assert_eq!(val5(&g(1, 0, 25)), Valuation::Finite(-2));
    }

    #[test]
    fn val5_matches_division_oracle() {
        for (re, im, den) in [(1, -3, 2), (2, 1, 1), (-5, 10, 1), (7, 24, 4), (3, -4, 25)] {
            let expect = val_by_division(GaussianInteger::new(re.into(), im.into()), den);
            assert_eq!(val5(&g(re, im, den)), Valuation::Finite(expect), "{re} {im} {den}");
        }
    }

    #[test]
    fn hensel_examples() {
        assert_eq!(hensel_sqrt_minus_one(1).unwrap().to_string(), "2");
        assert_eq!(hensel_sqrt_minus_one(2).unwrap().to_string(), "7");
        assert_eq!(hensel_sqrt_minus_one(3).unwrap().to_string(), "57");
        assert_eq!(hensel_sqrt_minus_one(0), Err(Error::ZeroPrecision));
        assert_eq!(hensel_sqrt_minus_one(2).unwrap().digits(), vec![2, 1]);
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_mod(&GaussianRational::i(), 2).unwrap().to_string(), "7");
        assert_eq!(embed_mod(&g(1, 3, 2), 1).unwrap().to_string(), "1");
        assert_eq!(embed_mod(&g(2, -1, 1), 1).unwrap().to_string(), "0");
        assert_eq!(embed_mod(&g(1, 0, 5), 3), Err(Error::NotIntegral(-1)));
        // (1 − 3i)/5 · (2 + i)... a 5-adic unit with 5 in the denominator
        let u = g(1, -3, 5);
        assert_eq!(val5(&u), Valuation::Finite(0));
        let a = g(1, 3, 2);
        let prod = embed_mod(&(&u * &a), 4).unwrap();
        let m = BigUint::from(625u32);
        let lhs = (embed_mod(&u, 4).unwrap().residue() * embed_mod(&a, 4).unwrap().residue()) % &m;
        assert_eq!(&lhs, prod.residue());
    }

    #[test]
    fn canonical_text_roundtrip() {
        let x = g(-7, 24, 4);
        assert_eq!(x.to_string(), "-7/4 + 6/1*i");
        assert_eq!("-7/4 + 6/1*i".parse::<GaussianRational>().unwrap(), x);
        assert_eq!(GaussianRational::zero().to_string(), "0/1 + 0/1*i");
        assert!("garbage".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn valuation_order_and_sum() {
        assert!(Valuation::Finite(100) < Valuation::Infinite);
        assert_eq!(Valuation::Finite(2) + Valuation::Finite(3), Valuation::Finite(5));
        assert_eq!(Valuation::Finite(2) + Valuation::Infinite, Valuation::Infinite);
        assert_eq!(serde_json::to_string(&Valuation::Infinite).unwrap(), "\"inf\"");
        let v: Valuation = serde_json::from_str("3").unwrap();
        assert_eq!(v, Valuation::Finite(3));
    }

    fn arb_gr() -> impl Strategy<Value = GaussianRational> {
        (-400i64..400, -400i64..400, prop::sample::select(vec![1i64, 2, 3, 4, 5, 10, 25, 50, 125, 7]))
            .prop_map(|(re, im, den)| g(re, im, den))
    }

    fn arb_integral() -> impl Strategy<Value = GaussianRational> {
        (-400i64..400, -400i64..400, prop::sample::select(vec![1i64, 2, 3, 4, 8, 7]))
            .prop_map(|(re, im, den)| g(re, im, den))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn valuation_axioms(x in arb_gr(), y in arb_gr()) {
            prop_assert_eq!(val5(&(&x * &y)), val5(&x) + val5(&y));
            let s = val5(&(&x + &y));
            let (vx, vy) = (val5(&x), val5(&y));
            prop_assert!(s >= vx.min(vy));
            if vx != vy {
                prop_assert_eq!(s, vx.min(vy));
            }
        }

        #[test]
        fn rational_valuation_is_exponent_of_five(n in -100000i64..100000, d in 1i64..10000) {
            prop_assume!(n != 0);
            let q = GaussianRational::from_rational(BigRational::new(n.into(), d.into()));
            prop_assert_eq!(val5(&q), Valuation::Finite(v5_int(&n.into()) - v5_int(&d.into())));
        }

        #[test]
        fn embedding_is_a_ring_map(x in arb_integral(), y in arb_integral(), n in 1u32..=8) {
            let m = BigUint::from(5u32).pow(n);
            let ex = embed_mod(&x, n).unwrap();
            let ey = embed_mod(&y, n).unwrap();
            prop_assert_eq!(
                (ex.residue() + ey.residue()) % &m,
                embed_mod(&(&x + &y), n).unwrap().residue().clone()
            );
            prop_assert_eq!(
                (ex.residue() * ey.residue()) % &m,
                embed_mod(&(&x * &y), n).unwrap().residue().clone()
            );
            let nu = embed_mod(&GaussianRational::i(), n).unwrap();
            prop_assert_eq!((nu.residue() * nu.residue() + 1u32) % &m, BigUint::zero());
        }

        #[test]
        fn division_and_residue_views_agree(x in arb_gr()) {
            prop_assume!(!x.is_zero());
            let v = val5(&x).finite().unwrap();
            let shifted = &x * &GaussianRational::from(5).pow(-v);
            // shifted = x / 5^v is a unit: nonzero mod 5
            let r = embed_mod(&shifted, 1).unwrap();
            prop_assert!(!r.residue().is_zero());
            if v >= 1 {
                prop_assert!(embed_mod(&x, 12).unwrap().residue() % BigUint::from(5u32).pow(v as u32) == BigUint::zero());
            }
        }

        #[test]
        fn field_laws(x in arb_gr(), y in arb_gr(), z in arb_gr()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), GaussianRational::one());
            }
        }
    }
}

//! Independent cross-checks that do not reuse the closed forms they test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::{mod_inverse, v5_int, Valuation};

/// `w_k = exp(5(k − 2)) − 1` reduced modulo `5^precision`.
///
/// The exponential series is summed exactly over the rationals; a term
/// `(5m)ⁿ/n!` has valuation at least `n − (n − 1)/4`, so terms from the first
/// `n` where that reaches `precision` onward vanish modulo `5^precision`.
pub fn weight_coordinate_mod(k: i64, precision: u32) -> BigInt {
    let modulus = BigInt::from(5).pow(precision);
    let x = BigInt::from(5 * (k - 2));
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    let mut n: i64 = 0;
    while n - (n - 1).max(0) / 4 < precision as i64 {
        n += 1;
        term *= BigRational::new(x.clone(), BigInt::from(n));
        sum += &term;
    }
    let den = sum.denom().mod_floor(&modulus);
    let inv = mod_inverse(&den, &modulus).expect("factorial denominators are prime to 5 after cancellation");
    (sum.numer() * inv).mod_floor(&modulus)
}

/// Valuation of `w_k − w_l` read off from the truncated exponentials;
/// `Infinite` when they agree modulo `5^precision`.
pub fn wk_val_diff_oracle(k: i64, l: i64, precision: u32) -> Valuation {
    let diff = weight_coordinate_mod(k, precision) - weight_coordinate_mod(l, precision);
    if (&diff % BigInt::from(5).pow(precision)).is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(v5_int(&diff))
    }
}

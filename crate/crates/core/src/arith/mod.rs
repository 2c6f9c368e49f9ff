//! Exact numeric substrate: rationals, dense polynomials, Bernoulli numbers
//! and truncated Laurent series.

mod bernoulli;
mod poly;
mod series;

pub use bernoulli::{bernoulli, bernoulli_numbers};
pub use poly::{lagrange_interpolate, RationalPolynomial};
pub use series::{series_exp_linear, series_recip_one_minus_exp, TruncatedLaurentSeries, Window};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, always normalized with a positive denominator.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient, zero whenever `k < 0` or `k > n` (including `n < 0`).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(-1)^e` as a machine integer.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

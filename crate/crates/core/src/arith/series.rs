use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::{bernoulli_numbers, factorial, Rational};
use crate::error::{Error, Result};

/// Truncation bound for series construction: coefficients are produced
/// through `t^max_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub max_order: i64,
}

impl Window {
    pub fn new(max_order: i64) -> Self {
        Self { max_order }
    }

    /// The window used for constant terms in ambient dimension `n`: `n + 2`.
    pub fn for_dimension(n: usize) -> Self {
        Self::new(n as i64 + 2)
    }
}

/// Laurent series in `t` known exactly on orders `min_order..=max_order`.
///
/// Coefficients below `min_order` are zero. Coefficients above `max_order`
/// are unknown; every operation shrinks `max_order` to what it can still
/// guarantee.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLaurentSeries {
    min_order: i64,
    max_order: i64,
    coeffs: Vec<Rational>,
}

impl TruncatedLaurentSeries {
    /// Series with `coeffs[k]` the coefficient of `t^(min_order + k)`, known
    /// through `max_order`. Entries past `max_order` are discarded and missing
    /// ones are zero.
    pub fn new(min_order: i64, max_order: i64, mut coeffs: Vec<Rational>) -> Self {
        let len = (max_order - min_order + 1).max(0) as usize;
        coeffs.resize(len, Rational::zero());
        Self { min_order, max_order, coeffs }
    }

    /// The constant series 1 known through `window.max_order`.
    pub fn one(window: Window) -> Self {
        Self::new(0, window.max_order, vec![Rational::one()])
    }

    pub fn min_order(&self) -> i64 {
        self.min_order
    }

    /// Highest order whose coefficient is guaranteed correct.
    pub fn max_order(&self) -> i64 {
        self.max_order
    }

    /// Coefficient of `t^order`.
    pub fn coefficient(&self, order: i64) -> Result<Rational> {
        if order > self.max_order {
            return Err(Error::OutsideWindow { order, valid_through: self.max_order });
        }
        if order < self.min_order {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(order - self.min_order) as usize].clone())
    }

    pub fn constant_term(&self) -> Result<Rational> {
        self.coefficient(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            min_order: self.min_order,
            max_order: self.max_order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl Add for &TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;

    fn add(self, rhs: Self) -> TruncatedLaurentSeries {
        let lo = self.min_order.min(rhs.min_order);
        let hi = self.max_order.min(rhs.max_order);
        let coeffs = (lo..=hi)
            .map(|k| {
                // both orders are at most `hi`, so neither lookup can fail
                self.coefficient(k).unwrap() + rhs.coefficient(k).unwrap()
            })
            .collect();
        TruncatedLaurentSeries::new(lo, hi, coeffs)
    }
}

impl Mul for &TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;

    /// The coefficient of `t^k` in the product involves `a_i b_{k-i}` with
    /// `i >= min_a` and `k - i >= min_b`, so it is known as long as
    /// `k <= max_a + min_b` and `k <= max_b + min_a`.
    fn mul(self, rhs: Self) -> TruncatedLaurentSeries {
        let lo = self.min_order + rhs.min_order;
        let hi = (self.max_order + rhs.min_order).min(rhs.max_order + self.min_order);
        let len = (hi - lo + 1).max(0) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= len {
                    break;
                }
                out[k] += a * b;
            }
        }
        TruncatedLaurentSeries::new(lo, hi, out)
    }
}

/// Power series of `e^(c t)` through `window.max_order`.
pub fn series_exp_linear(c: &Rational, window: Window) -> TruncatedLaurentSeries {
    let mut coeffs = Vec::new();
    let mut term = Rational::one();
    for k in 0..=window.max_order.max(-1) {
        if k > 0 {
            term = term * c / Rational::from_integer(k.into());
        }
        coeffs.push(term.clone());
    }
    TruncatedLaurentSeries::new(0, window.max_order, coeffs)
}

/// Laurent expansion of `1 / (1 - e^(x t))`:
/// `-sum_{k >= -1} B_{k+1} x^k t^k / (k+1)!`, i.e. `-1/(x t) + 1/2 - x t/12 + ...`.
pub fn series_recip_one_minus_exp(x: &Rational, window: Window) -> Result<TruncatedLaurentSeries> {
    if x.is_zero() {
        return Err(Error::PoleOfUndeterminedOrder);
    }
    if window.max_order < -1 {
        return Err(Error::OutsideWindow { order: -1, valid_through: window.max_order });
    }
    let top = (window.max_order + 1) as usize;
    let bern = bernoulli_numbers(top);
    let mut coeffs = Vec::with_capacity(top + 1);
    let mut x_pow = x.recip();
    for (j, b) in bern.iter().enumerate() {
        coeffs.push(-(b * &x_pow) / Rational::from_integer(factorial(j as u64)));
        x_pow *= x;
    }
    Ok(TruncatedLaurentSeries::new(-1, window.max_order, coeffs))
}

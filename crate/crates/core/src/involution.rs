//! The Dehn–Sommerville type involution `S` on vectors `[E_0, ..., E_n]`, the
//! functional `c(E)`, and its evaluation through values of `E` and `S(E)` at
//! small integers.
//!
//! `S` sends `[E_0, ..., E_n]` to `[F_0, ..., F_n]` with
//! `F_p = sum_{j <= p} (-1)^j C(n-j, n-p) E_j`. It is an involution and
//! satisfies the generating identity
//! `sum_p (-z)^p (z+1)^(n-p) E_p = sum_p z^p F_p`.
//!
//! For `E` in `P_n` (`deg E_j <= j`) write `E_j = v_j t^j / j! + ...`; then
//! `c(E) = sum_p (-1)^(n-p) (p+1) v_p` can be recovered from `E_p(-i)` and
//! `F_p(i)` for `1 <= i <= p + 1 - m` and `p >= m`, where `m = ceil(n/2)`.

use num_traits::Zero;

use crate::arith::{binomial, factorial, rat, sign, Rational, RationalPolynomial};
use crate::error::{Error, Result};

fn s_coefficient(n: usize, j: usize, p: usize) -> Rational {
    Rational::from_integer(binomial(n as i64 - j as i64, n as i64 - p as i64) * sign(j as i64))
}

/// An element `[E_0(t), ..., E_n(t)]` of `P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    entries: Vec<RationalPolynomial>,
}

impl PolyVector {
    /// Fails if some `E_j` has degree above `j` or the list is empty.
    pub fn new(entries: Vec<RationalPolynomial>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, e) in entries.iter().enumerate() {
            if e.degree() > index as i64 {
                return Err(Error::DegreeBound { index, degree: e.degree() });
            }
        }
        Ok(Self { entries })
    }

    pub fn zero(n: usize) -> Self {
        Self { entries: vec![RationalPolynomial::zero(); n + 1] }
    }

    /// The index `n`; the vector has `n + 1` entries.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[RationalPolynomial] {
        &self.entries
    }

    pub fn s_transform(&self) -> Self {
        let n = self.n();
        let entries = (0..=n)
            .map(|p| {
                (0..=p).fold(RationalPolynomial::zero(), |acc, j| {
                    &acc + &self.entries[j].scale(&s_coefficient(n, j, p))
                })
            })
            .collect();
        Self { entries }
    }

    /// Entries evaluated at `t`.
    pub fn eval(&self, t: &Rational) -> ScalarVector {
        ScalarVector::new(self.entries.iter().map(|e| e.eval(t)).collect())
    }

    /// `v_j = j! * [t^j] E_j`.
    pub fn top_coefficients(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .enumerate()
            .map(|(j, e)| e.coeff(j) * Rational::from_integer(factorial(j as u64)))
            .collect()
    }
}

impl From<ScalarVector> for PolyVector {
    fn from(v: ScalarVector) -> Self {
        Self { entries: v.entries.into_iter().map(RationalPolynomial::constant).collect() }
    }
}

/// A vector of constants `[E_0, ..., E_n]`, e.g. an f-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarVector {
    pub entries: Vec<Rational>,
}

impl ScalarVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        assert!(!entries.is_empty(), "a vector in C^(n+1) has at least one entry");
        Self { entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn s_transform(&self) -> Self {
        let n = self.n();
        let entries = (0..=n)
            .map(|p| {
                (0..=p).fold(Rational::zero(), |acc, j| acc + &self.entries[j] * s_coefficient(n, j, p))
            })
            .collect();
        Self { entries }
    }
}

/// Both sides of the generating identity as polynomials in `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingIdentity {
    /// `sum_p (-z)^p (z+1)^(n-p) E_p(t0)`.
    pub lhs: RationalPolynomial,
    /// `sum_p z^p F_p(t0)`.
    pub rhs: RationalPolynomial,
    pub holds: bool,
}

/// Expands `sum_p (-z)^p (z+1)^(n-p) E_p = sum_p z^p F_p` with the entries
/// evaluated at `t0`.
pub fn check_generating_identity(e: &PolyVector, t0: &Rational) -> GeneratingIdentity {
    let n = e.n();
    let values = e.eval(t0).entries;
    let images = e.s_transform().eval(t0).entries;
    let neg_z = RationalPolynomial::from_ints(&[0, -1]);
    let z_plus_one = RationalPolynomial::from_ints(&[1, 1]);
    let power = |base: &RationalPolynomial, k: usize| {
        (0..k).fold(RationalPolynomial::from_ints(&[1]), |acc, _| &acc * base)
    };
    let lhs = values.iter().enumerate().fold(RationalPolynomial::zero(), |acc, (p, ep)| {
        &acc + &(&power(&neg_z, p) * &power(&z_plus_one, n - p)).scale(ep)
    });
    let rhs = RationalPolynomial::new(images);
    let holds = lhs == rhs;
    GeneratingIdentity { lhs, rhs, holds }
}

/// `c(E) = sum_p (-1)^(n-p) (p+1) v_p`.
pub fn c_of_vector(e: &PolyVector) -> Rational {
    let n = e.n() as i64;
    e.top_coefficients()
        .iter()
        .enumerate()
        .map(|(p, v)| v * rat(sign(n - p as i64) * (p as i64 + 1)))
        .sum()
}

/// `c(E)` from the values `E_p(-i)` and `F_p(i)`, `F = S(E)`.
///
/// For odd `n`, with `m = (n+1)/2`:
/// `sum_{p=m}^{n} sum_{i=1}^{p+1-m} (-1)^(p+m-i) C(p+1, m+i) i (E_p(-i) + F_p(i))`.
///
/// For even `n`, with `m = n/2`:
/// `sum_{p=m}^{n} sum_{i=1}^{p+1-m} (-1)^(p+1+m-i) (C(p+1, m+i) - C(p+1, m+i+1)) (i/2) (E_p(-i) + F_p(i))`.
///
/// `n = 0` goes through the even branch with `m = 0` and returns `E_0`.
pub fn c_via_theorem(e: &PolyVector) -> Rational {
    let n = e.n() as i64;
    let f = e.s_transform();
    let odd = n % 2 == 1;
    let m = if odd { (n + 1) / 2 } else { n / 2 };
    let mut total = Rational::zero();
    for p in m..=n {
        let ep = &e.entries()[p as usize];
        let fp = &f.entries()[p as usize];
        for i in 1..=(p + 1 - m) {
            let values = ep.eval_int(-i) + fp.eval_int(i);
            let weight = if odd {
                Rational::from_integer(binomial(p + 1, m + i) * sign(p + m - i) * i)
            } else {
                let diff = binomial(p + 1, m + i) - binomial(p + 1, m + i + 1);
                Rational::new(diff * sign(p + 1 + m - i) * i, 2.into())
            };
            total += weight * values;
        }
    }
    total
}

/// Coefficients `[V_0, ..., V_n]` of `prod_a (values[a] z + 1)` in `z`.
pub fn product_coefficients(values: &[Rational]) -> Vec<Rational> {
    let mut out = vec![rat(1)];
    for v in values {
        let mut next = vec![Rational::zero(); out.len() + 1];
        for (k, c) in out.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * v;
        }
        out = next;
    }
    out
}

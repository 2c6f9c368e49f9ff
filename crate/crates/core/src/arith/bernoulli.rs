use num_traits::Zero;

use super::{binomial, rat, Rational};

/// Bernoulli numbers `B_0..=B_k` with the convention `B_1 = -1/2`.
///
/// Uses the recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0` for `m >= 1`.
pub fn bernoulli_numbers(k: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(k + 1);
    b.push(rat(1));
    for m in 1..=k {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as i64 + 1, j as i64)) * bj;
        }
        b.push(-acc / rat(m as i64 + 1));
    }
    b
}

/// The `k`-th Bernoulli number, `B_1 = -1/2`.
pub fn bernoulli(k: usize) -> Rational {
    bernoulli_numbers(k).pop().expect("nonempty")
}

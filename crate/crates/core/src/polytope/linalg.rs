//! Small exact linear algebra over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][c].recip();
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = &row[c] * &inv;
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Dimension of the affine span of a nonempty point set.
pub fn affine_dimension(points: &[&[BigInt]]) -> usize {
    let Some((base, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<BigInt>> = rest
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs)
}

/// A vector orthogonal to the `n - 1` rows of an `(n-1) x n` matrix, built from
/// signed maximal minors. Zero iff the rows are linearly dependent.
pub fn orthogonal_complement(rows: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = determinant(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_unit(d: &BigInt) -> bool {
    d.abs().is_one()
}

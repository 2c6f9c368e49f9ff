//! The degree `c(P)` of the discriminant: by face volumes, by interior lattice
//! points of dilated faces, and the vanishing criterion for dual defectivity.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, sign};
use crate::ehrhart::{face_polynomials, interior_counts_from, volume_from_polynomial, EhrhartVector, InteriorCountTable};
use crate::error::{Error, Result};
use crate::polytope::{count_interior_points, LatticePolytope};

/// `c(P)` by face volumes together with `sum_{F in F_p} Vol_Z(F)` per `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeDegree {
    pub value: BigInt,
    pub per_dim_volume_sums: Vec<BigInt>,
}

/// `c(P) = sum_p (-1)^(n-p) (p+1) sum_{F in F_p(P)} Vol_Z(F)`.
///
/// Defined combinatorially for any polytope; it is the discriminant degree
/// only for smooth `P` whose dual variety is a hypersurface.
pub fn degree_via_volumes(p: &LatticePolytope) -> Result<VolumeDegree> {
    volumes_from_polynomials(p.dim(), &face_polynomials(p)?)
}

fn volumes_from_polynomials(
    n: usize,
    by_dim: &[Vec<crate::RationalPolynomial>],
) -> Result<VolumeDegree> {
    let per_dim_volume_sums = by_dim
        .iter()
        .enumerate()
        .map(|(dim, polys)| {
            polys
                .iter()
                .map(|e| volume_from_polynomial(e, dim))
                .sum::<Result<BigInt>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let value = volume_formula(n, &per_dim_volume_sums);
    Ok(VolumeDegree { value, per_dim_volume_sums })
}

/// The alternating sum over per-dimension volume totals.
pub fn volume_formula(n: usize, per_dim_volume_sums: &[BigInt]) -> BigInt {
    per_dim_volume_sums
        .iter()
        .enumerate()
        .map(|(p, vol)| vol * (sign(n as i64 - p as i64) * (p as i64 + 1)))
        .sum()
}

/// `m = (n+1)/2` for odd `n`, `n/2` for even `n`.
pub fn middle_index(n: usize) -> usize {
    n.div_ceil(2)
}

/// Largest dilation needed by [`interior_formula`]: `n + 1 - m`.
pub fn required_dilation(n: usize) -> u64 {
    (n + 1 - middle_index(n)) as u64
}

/// `c(P)` from interior counts `I_p(i)`, `p >= m`.
///
/// Odd `n`: `sum_{p=m}^{n} sum_{i=1}^{p+1-m} (-1)^(m-i) C(p+1, m+i) 2 i I_p(i)`.
///
/// Even `n`: `sum_{p=m}^{n} sum_{i=1}^{p+1-m} (-1)^(m+1-i) (C(p+1, m+i) - C(p+1, m+i+1)) i I_p(i)`.
///
/// Panics if the table does not reach dilation `n + 1 - m`.
pub fn interior_formula(n: usize, table: &InteriorCountTable) -> BigInt {
    let n = n as i64;
    let odd = n % 2 == 1;
    let m = middle_index(n as usize) as i64;
    let mut total = BigInt::zero();
    for p in m..=n {
        for i in 1..=(p + 1 - m) {
            let count = BigInt::from(table.get(p as usize, i as u64));
            let weight = if odd {
                binomial(p + 1, m + i) * (sign(m - i) * 2 * i)
            } else {
                (binomial(p + 1, m + i) - binomial(p + 1, m + i + 1)) * (sign(m + 1 - i) * i)
            };
            total += weight * count;
        }
    }
    total
}

/// `c(P)` from interior lattice points of dilated faces of dimension `>= m`.
/// Requires `P` simple.
pub fn degree_via_interior_points(p: &LatticePolytope) -> Result<BigInt> {
    if !p.is_simple() {
        return Err(Error::NotSimple);
    }
    let ev = EhrhartVector::from_face_polynomials(&face_polynomials(p)?);
    let table = interior_counts_from(p, &ev, required_dilation(p.dim()))?;
    Ok(interior_formula(p.dim(), &table))
}

/// `floor(n/2) + 1`, the number of dilates the defectivity criterion inspects.
pub fn defect_dilation_bound(n: usize) -> u64 {
    (n / 2 + 1) as u64
}

/// `true` iff `iP` has no interior lattice point for every `1 <= i <= floor(n/2) + 1`.
/// For odd `n` that range is `1..=(n+1)/2`. Requires `P` simple.
pub fn defectivity_criterion(p: &LatticePolytope) -> Result<bool> {
    if !p.is_simple() {
        return Err(Error::NotSimple);
    }
    criterion_fires(p)
}

fn criterion_fires(p: &LatticePolytope) -> Result<bool> {
    for i in 1..=defect_dilation_bound(p.dim()) {
        if count_interior_points(p, p.whole(), i)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both computations of `c(P)` with the data behind them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub dim: usize,
    pub f_vector: Vec<u64>,
    pub is_simple: bool,
    pub is_smooth: bool,
    pub c_volumes: BigInt,
    /// The interior-point formula evaluated on the table, whether or not `P`
    /// is simple. Only for simple `P` is it guaranteed to match `c_volumes`.
    pub c_interior: BigInt,
    pub per_dim_volume_sums: Vec<BigInt>,
    pub ehrhart_vector: EhrhartVector,
    pub interior_table: InteriorCountTable,
    /// Evaluated for simple polytopes only; `false` otherwise.
    pub defective_criterion_fires: bool,
}

impl DegreeReport {
    /// `c(P) = 0`, the signature of a dual defective embedding.
    pub fn is_dual_defective(&self) -> bool {
        self.c_volumes.is_zero()
    }

    /// Descriptions of every violated invariant; empty on consistent data.
    pub fn cross_check_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.is_simple && self.c_volumes != self.c_interior {
            out.push(format!(
                "simple polytope but volume formula gives {} and interior formula gives {}",
                self.c_volumes, self.c_interior
            ));
        }
        if self.defective_criterion_fires && !self.c_volumes.is_zero() {
            out.push(format!("defectivity criterion fires but c(P) = {}", self.c_volumes));
        }
        out
    }
}

/// Computes the full report. The interior table covers dilations up to
/// `max(max_dilation, n + 1)`; `None` means `n + 1`.
pub fn analyze(p: &LatticePolytope, max_dilation: Option<u64>) -> Result<DegreeReport> {
    let n = p.dim();
    let polys = face_polynomials(p)?;
    let volumes = volumes_from_polynomials(n, &polys)?;
    let ehrhart_vector = EhrhartVector::from_face_polynomials(&polys);
    let depth = max_dilation.unwrap_or(0).max(n as u64 + 1);
    let interior_table = interior_counts_from(p, &ehrhart_vector, depth)?;
    let c_interior = interior_formula(n, &interior_table);
    let is_simple = p.is_simple();
    let defective_criterion_fires = is_simple && criterion_fires(p)?;
    Ok(DegreeReport {
        dim: n,
        f_vector: p.face_lattice().f_vector(),
        is_simple,
        is_smooth: is_simple && p.is_smooth(),
        c_volumes: volumes.value,
        c_interior,
        per_dim_volume_sums: volumes.per_dim_volume_sums,
        ehrhart_vector,
        interior_table,
        defective_criterion_fires,
    })
}

//! Ehrhart polynomials of faces, the face-summed vector `E^P`, normalized
//! volumes and interior point counts.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{factorial, lagrange_interpolate, rat, Rational, RationalPolynomial};
use crate::error::{Error, Result};
use crate::involution::PolyVector;
use crate::polytope::{count_interior_points, count_lattice_points, Face, LatticePolytope};

/// `ehr_F` by counting `|iF ∩ Z^n|` for `i = 0..=dim F` and interpolating.
pub fn ehrhart_polynomial(p: &LatticePolytope, face: &Face) -> Result<RationalPolynomial> {
    let mut nodes = vec![(0i64, rat(1))];
    for i in 1..=face.dim as u64 {
        let c = count_lattice_points(p, face, i)?;
        nodes.push((i as i64, Rational::from_integer(c.into())));
    }
    lagrange_interpolate(&nodes)
}

/// `[E_0^P, ..., E_n^P]` where `E_k^P` sums `ehr_F` over the `k`-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartVector {
    pub entries: Vec<RationalPolynomial>,
}

impl EhrhartVector {
    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn to_poly_vector(&self) -> PolyVector {
        PolyVector::new(self.entries.clone()).expect("deg E_k <= k")
    }
}

impl EhrhartVector {
    /// Sums per-face polynomials grouped as returned by [`face_polynomials`].
    pub fn from_face_polynomials(by_dim: &[Vec<RationalPolynomial>]) -> Self {
        let entries = by_dim
            .iter()
            .map(|fs| fs.iter().fold(RationalPolynomial::zero(), |acc, e| &acc + e))
            .collect();
        Self { entries }
    }
}

/// `ehr_F` for every face, grouped by dimension in face-lattice order.
pub fn face_polynomials(p: &LatticePolytope) -> Result<Vec<Vec<RationalPolynomial>>> {
    let lattice = p.face_lattice();
    (0..=p.dim())
        .map(|k| {
            lattice
                .faces_of_dim(k)
                .iter()
                .map(|f| ehrhart_polynomial(p, f))
                .collect()
        })
        .collect()
}

pub fn ehrhart_vector(p: &LatticePolytope) -> Result<EhrhartVector> {
    Ok(EhrhartVector::from_face_polynomials(&face_polynomials(p)?))
}

/// `Vol_Z(F) = (dim F)! * (leading coefficient of ehr_F)`, in the lattice
/// induced on the affine span of `F`.
pub fn normalized_volume(p: &LatticePolytope, face: &Face) -> Result<BigInt> {
    volume_from_polynomial(&ehrhart_polynomial(p, face)?, face.dim)
}

/// `(dim)!` times the leading coefficient, checked to be a positive integer.
pub fn volume_from_polynomial(ehr: &RationalPolynomial, dim: usize) -> Result<BigInt> {
    if ehr.degree() != dim as i64 {
        return Err(Error::Consistency(format!(
            "Ehrhart polynomial {ehr} of a {dim}-face has degree {}",
            ehr.degree()
        )));
    }
    let vol = ehr.leading_coefficient() * Rational::from_integer(factorial(dim as u64));
    if !vol.is_integer() || !vol.is_positive() {
        return Err(Error::Consistency(format!("normalized volume {vol} is not a positive integer")));
    }
    Ok(vol.to_integer())
}

/// `I_p(i)`: total interior lattice points of the `i`-dilated `p`-faces, for
/// `1 <= i <= max_dilation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorCountTable {
    max_dilation: u64,
    counts: Vec<Vec<u64>>,
}

impl InteriorCountTable {
    pub fn max_dilation(&self) -> u64 {
        self.max_dilation
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    /// `I_p(i)`; panics if `i` is outside `1..=max_dilation`.
    pub fn get(&self, p: usize, i: u64) -> u64 {
        assert!((1..=self.max_dilation).contains(&i), "dilation {i} outside table");
        self.counts[p][i as usize - 1]
    }

    /// Rows indexed by face dimension, columns by dilation `1..=max_dilation`.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.counts
    }
}

/// Interior counts by reciprocity, `I_p(i) = (-1)^p E_p^P(-i)`, each checked
/// against a direct count over the faces.
pub fn interior_counts(p: &LatticePolytope, max_dilation: u64) -> Result<InteriorCountTable> {
    interior_counts_from(p, &ehrhart_vector(p)?, max_dilation)
}

pub fn interior_counts_from(
    p: &LatticePolytope,
    ev: &EhrhartVector,
    max_dilation: u64,
) -> Result<InteriorCountTable> {
    let lattice = p.face_lattice();
    let mut counts = Vec::with_capacity(p.dim() + 1);
    for (dim, entry) in ev.entries.iter().enumerate() {
        let mut row = Vec::with_capacity(max_dilation as usize);
        for i in 1..=max_dilation {
            let mut reciprocity = entry.eval_int(-(i as i64));
            if dim % 2 == 1 {
                reciprocity = -reciprocity;
            }
            let direct: u64 = lattice
                .faces_of_dim(dim)
                .iter()
                .map(|f| count_interior_points(p, f, i))
                .sum::<Result<u64>>()?;
            let agrees = reciprocity.is_integer()
                && reciprocity.to_integer().to_u64() == Some(direct);
            if !agrees {
                return Err(Error::ReciprocityMismatch {
                    dim,
                    dilation: i,
                    reciprocity: reciprocity.to_string(),
                    direct: direct.to_string(),
                });
            }
            row.push(direct);
        }
        counts.push(row);
    }
    Ok(InteriorCountTable { max_dilation, counts })
}

/// `true` when `iP` has no interior lattice point for `i = 1..=up_to`.
pub fn no_interior_points_up_to(p: &LatticePolytope, up_to: u64) -> Result<bool> {
    for i in 1..=up_to {
        if !count_interior_points(p, p.whole(), i)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::polytope::{gen_family, Family};

    #[test]
    fn polynomials_of_named_faces() {
        for d in 1..=5 {
            let seg = gen_family(Family::Segment, &[d]).unwrap();
            assert_eq!(
                ehrhart_polynomial(&seg, seg.whole()).unwrap(),
                RationalPolynomial::from_ints(&[1, d])
            );
            assert_eq!(normalized_volume(&seg, seg.whole()).unwrap(), BigInt::from(d));
        }
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        assert_eq!(ehrhart_polynomial(&sq, sq.whole()).unwrap(), RationalPolynomial::from_ints(&[1, 2, 1]));
        assert_eq!(normalized_volume(&sq, sq.whole()).unwrap(), BigInt::from(2));
        let tri = gen_family(Family::DilatedSimplex, &[2, 1]).unwrap();
        assert_eq!(
            ehrhart_polynomial(&tri, tri.whole()).unwrap(),
            RationalPolynomial::new(vec![rat(1), ratio(3, 2), ratio(1, 2)])
        );
        let tri2 = gen_family(Family::DilatedSimplex, &[2, 2]).unwrap();
        assert_eq!(normalized_volume(&tri2, tri2.whole()).unwrap(), BigInt::from(4));
    }

    #[test]
    fn ehrhart_vectors() {
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        let ev = ehrhart_vector(&sq).unwrap();
        assert_eq!(
            ev.entries,
            vec![
                RationalPolynomial::from_ints(&[4]),
                RationalPolynomial::from_ints(&[4, 4]),
                RationalPolynomial::from_ints(&[1, 2, 1]),
            ]
        );
        let seg = gen_family(Family::Segment, &[2]).unwrap();
        assert_eq!(
            ehrhart_vector(&seg).unwrap().entries,
            vec![RationalPolynomial::from_ints(&[2]), RationalPolynomial::from_ints(&[1, 2])]
        );
        let cube = gen_family(Family::Cube, &[3]).unwrap();
        let ev = ehrhart_vector(&cube).unwrap();
        assert_eq!(ev.entries[1].eval_int(1), rat(24));
        assert_eq!(ev.entries[1], RationalPolynomial::from_ints(&[12, 12]));
        for (k, fk) in cube.face_lattice().f_vector().iter().enumerate() {
            assert_eq!(ev.entries[k].eval_int(0), rat(*fk as i64));
        }
    }

    #[test]
    fn interior_tables() {
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        let t = interior_counts(&sq, 3).unwrap();
        assert_eq!(t.get(2, 2), 1);
        assert_eq!(t.get(2, 1), 0);
        assert_eq!(t.get(1, 1), 0);
        assert_eq!(t.get(0, 3), 4);
        for d in 1..=6i64 {
            let seg = gen_family(Family::Segment, &[d]).unwrap();
            let t = interior_counts(&seg, 4).unwrap();
            for i in 1..=4 {
                assert_eq!(t.get(1, i) as i64, d * i as i64 - 1);
            }
        }
        let prism = gen_family(Family::Prism, &[3]).unwrap();
        let t = interior_counts(&prism, 4).unwrap();
        assert_eq!((t.get(3, 1), t.get(3, 2), t.get(2, 1)), (0, 0, 0));
    }

    #[test]
    fn pyramid_reciprocity_still_holds() {
        let pyramid = LatticePolytope::from_i64(&[
            vec![1, 1, 0],
            vec![1, -1, 0],
            vec![-1, 1, 0],
            vec![-1, -1, 0],
            vec![0, 0, 1],
        ])
        .unwrap();
        assert!(interior_counts(&pyramid, 3).is_ok());
    }
}

//! Full-dimensional lattice polytopes: construction, facets, faces, and
//! brute-force lattice point counts.

mod count;
mod faces;
mod families;
pub mod linalg;

pub use count::{count_interior_points, count_lattice_points};
pub use faces::{Face, FaceLattice};
pub use families::{gen_family, Family};

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use linalg::{affine_dimension, dot, orthogonal_complement, primitive, rank};

/// Facet inequality `normal . x <= offset`, tight exactly on the facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetInequality {
    /// Primitive integer normal.
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl FacetInequality {
    /// `offset - normal . x`; nonnegative on the polytope, zero on the facet.
    pub fn slack(&self, x: &[BigInt]) -> BigInt {
        &self.offset - dot(&self.normal, x)
    }
}

impl fmt::Display for FacetInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) . x <= {}", self.normal.iter().join(", "), self.offset)
    }
}

/// Facets in machine integers, used by the enumeration loops.
#[derive(Clone, Debug)]
pub(crate) struct SmallFacets {
    pub normals: Vec<Vec<i64>>,
    pub offsets: Vec<i64>,
    pub vertices: Vec<Vec<i64>>,
}

/// A full-dimensional lattice polytope in `Z^n`, with its facets and face
/// lattice computed once at construction.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<BigInt>>,
    name: Option<String>,
    facets: Vec<FacetInequality>,
    faces: FaceLattice,
    small: Option<SmallFacets>,
}

impl LatticePolytope {
    /// Validates the point list and keeps only the vertices of its convex
    /// hull, in input order.
    pub fn new(raw_vertices: Vec<Vec<BigInt>>) -> Result<Self> {
        let Some(first) = raw_vertices.first() else {
            return Err(Error::EmptyInput);
        };
        let n = first.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        for (index, v) in raw_vertices.iter().enumerate() {
            if v.len() != n {
                return Err(Error::InconsistentDimension { index, expected: n, found: v.len() });
            }
        }
        let mut seen = BTreeSet::new();
        let points: Vec<Vec<BigInt>> = raw_vertices
            .into_iter()
            .filter(|v| seen.insert(v.clone()))
            .collect();
        let refs: Vec<&[BigInt]> = points.iter().map(Vec::as_slice).collect();
        let span = affine_dimension(&refs);
        if span < n {
            return Err(Error::NotFullDimensional { span, ambient: n });
        }

        let facets = enumerate_facets(&points, n);
        // a point is a vertex iff the normals of the facets through it span R^n
        let vertices: Vec<Vec<BigInt>> = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<BigInt>> = facets
                    .iter()
                    .filter(|f| f.slack(p).is_zero())
                    .map(|f| f.normal.clone())
                    .collect();
                rank(&tight) == n
            })
            .collect();
        let faces = FaceLattice::build(&vertices, &facets, n);
        let small = SmallFacets::from_big(&vertices, &facets);
        Ok(Self { ambient_dim: n, vertices, name: None, facets, faces, small })
    }

    pub fn from_i64(raw: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            raw.iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Ambient dimension `n`, which is also the dimension of the polytope.
    pub fn dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetInequality] {
        &self.facets
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        &self.faces
    }

    /// The face of dimension `n`, i.e. the polytope itself.
    pub fn whole(&self) -> &Face {
        &self.faces.faces_of_dim(self.ambient_dim)[0]
    }

    /// Every vertex lies on exactly `n` edges.
    pub fn is_simple(&self) -> bool {
        let n = self.ambient_dim;
        let mut degree = vec![0usize; self.vertices.len()];
        for edge in self.faces.faces_of_dim(1) {
            for &v in &edge.vertex_indices {
                degree[v] += 1;
            }
        }
        degree.iter().all(|&d| d == n)
    }

    /// Simple, and the primitive edge directions at each vertex form a basis
    /// of `Z^n`.
    pub fn is_smooth(&self) -> bool {
        self.is_simple()
            && (0..self.vertices.len()).all(|v| {
                let gens = self.vertex_cone_generators(v).expect("simple polytope");
                linalg::is_unit(&linalg::determinant(&gens))
            })
    }

    /// Primitive direction vectors of the edges leaving vertex `v`.
    pub fn vertex_cone_generators(&self, v: usize) -> Result<Vec<Vec<BigInt>>> {
        if v >= self.vertices.len() {
            return Err(Error::NoSuchVertex(v));
        }
        let gens: Vec<Vec<BigInt>> = self
            .faces
            .faces_of_dim(1)
            .iter()
            .filter(|e| e.vertex_indices.contains(&v))
            .map(|e| {
                let w = if e.vertex_indices[0] == v { e.vertex_indices[1] } else { e.vertex_indices[0] };
                let dir: Vec<BigInt> = self.vertices[w]
                    .iter()
                    .zip(&self.vertices[v])
                    .map(|(a, b)| a - b)
                    .collect();
                primitive(&dir)
            })
            .collect();
        if gens.len() != self.ambient_dim {
            return Err(Error::VertexNotSimple(v));
        }
        Ok(gens)
    }

    /// Number of integer points in the bounding box of `dilation * P`.
    pub fn scan_volume(&self, dilation: u64) -> BigInt {
        (0..self.ambient_dim)
            .map(|c| {
                let lo = self.vertices.iter().map(|v| &v[c]).min().unwrap();
                let hi = self.vertices.iter().map(|v| &v[c]).max().unwrap();
                (hi - lo) * BigInt::from(dilation) + 1
            })
            .product()
    }

    /// Image under `x -> matrix * x + shift`. The matrix should be unimodular
    /// for the result to be lattice-equivalent.
    pub fn transform(&self, matrix: &[Vec<BigInt>], shift: &[BigInt]) -> Result<Self> {
        let verts = self
            .vertices
            .iter()
            .map(|v| {
                matrix
                    .iter()
                    .zip(shift)
                    .map(|(row, s)| dot(row, v) + s)
                    .collect()
            })
            .collect();
        let mut p = Self::new(verts)?;
        p.name = self.name.clone();
        Ok(p)
    }

    pub(crate) fn small(&self) -> Result<&SmallFacets> {
        self.small.as_ref().ok_or(Error::CoordinateOverflow)
    }
}

impl SmallFacets {
    fn from_big(vertices: &[Vec<BigInt>], facets: &[FacetInequality]) -> Option<Self> {
        // keep headroom so that dilations and dot products stay inside i128
        const LIMIT: i64 = 1 << 24;
        let conv = |x: &BigInt| x.to_i64().filter(|v| v.abs() < LIMIT);
        let normals = facets
            .iter()
            .map(|f| f.normal.iter().map(conv).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        let offsets = facets.iter().map(|f| conv(&f.offset)).collect::<Option<Vec<_>>>()?;
        let vertices = vertices
            .iter()
            .map(|v| v.iter().map(conv).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Self { normals, offsets, vertices })
    }
}

/// Validating constructor; see [`LatticePolytope::new`].
pub fn build_polytope(raw_vertices: Vec<Vec<BigInt>>) -> Result<LatticePolytope> {
    LatticePolytope::new(raw_vertices)
}

/// All facets, found by trying the hyperplane through every affinely
/// independent `n`-subset of the points and keeping supporting ones.
fn enumerate_facets(points: &[Vec<BigInt>], n: usize) -> Vec<FacetInequality> {
    let mut found: BTreeSet<FacetInequality> = BTreeSet::new();
    for subset in (0..points.len()).combinations(n) {
        let base = &points[subset[0]];
        if found
            .iter()
            .any(|f| subset.iter().all(|&i| f.slack(&points[i]).is_zero()))
        {
            continue;
        }
        let diffs: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let normal = primitive(&orthogonal_complement(&diffs, n));
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let offset = dot(&normal, base);
        let mut below = false;
        let mut above = false;
        for p in points {
            let v = dot(&normal, p) - &offset;
            below |= v.is_negative();
            above |= v.is_positive();
        }
        let facet = match (below, above) {
            (true, true) => continue,
            (_, false) => FacetInequality { normal, offset },
            (false, true) => FacetInequality {
                normal: normal.iter().map(|x| -x).collect(),
                offset: -offset,
            },
        };
        found.insert(facet);
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ineq(normal: &[i64], offset: i64) -> FacetInequality {
        FacetInequality { normal: big(normal), offset: BigInt::from(offset) }
    }

    #[test]
    fn segment() {
        let p = LatticePolytope::from_i64(&[vec![0], vec![2]]).unwrap();
        assert_eq!(p.vertices().len(), 2);
        let q = LatticePolytope::from_i64(&[vec![0], vec![3], vec![1]]).unwrap();
        assert_eq!(q.vertices(), &[big(&[0]), big(&[3])]);
        let mut f = q.facets().to_vec();
        f.sort();
        assert_eq!(f, vec![ineq(&[-1], 0), ineq(&[1], 3)]);
    }

    #[test]
    fn drops_interior_point() {
        let p = LatticePolytope::from_i64(&[vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 1]]).unwrap();
        assert_eq!(p.vertices(), &[big(&[0, 0]), big(&[2, 0]), big(&[0, 2])]);
        // edge midpoints and duplicates go too
        let q = LatticePolytope::from_i64(&[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 2], vec![0, 0]]).unwrap();
        assert_eq!(q.vertices().len(), 3);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(LatticePolytope::new(vec![]).unwrap_err(), Error::EmptyInput);
        assert_eq!(
            LatticePolytope::from_i64(&[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap_err(),
            Error::NotFullDimensional { span: 1, ambient: 2 }
        );
        assert!(matches!(
            LatticePolytope::from_i64(&[vec![0, 0], vec![1]]).unwrap_err(),
            Error::InconsistentDimension { index: 1, .. }
        ));
        assert!(LatticePolytope::from_i64(&[vec![0, 0]])
            .unwrap_err()
            .to_string()
            .contains("not full-dimensional"));
    }

    #[test]
    fn unit_square_facets() {
        let p = LatticePolytope::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let mut f = p.facets().to_vec();
        f.sort();
        assert_eq!(
            f,
            vec![ineq(&[-1, 0], 0), ineq(&[0, -1], 0), ineq(&[0, 1], 1), ineq(&[1, 0], 1)]
        );
    }

    /// Oracle: every primitive normal with small entries, checked against all vertices.
    fn facets_by_exhaustive_normals(p: &LatticePolytope, bound: i64) -> BTreeSet<FacetInequality> {
        let n = p.dim();
        let mut out = BTreeSet::new();
        let range: Vec<i64> = (-bound..=bound).collect();
        for normal in std::iter::repeat_n(range.iter().copied(), n).multi_cartesian_product() {
            if normal.iter().all(|&x| x == 0) || primitive(&big(&normal)) != big(&normal) {
                continue;
            }
            let a = big(&normal);
            let offset = p.vertices().iter().map(|v| dot(&a, v)).max().unwrap();
            let tight: Vec<&[BigInt]> = p
                .vertices()
                .iter()
                .filter(|v| dot(&a, v) == offset)
                .map(Vec::as_slice)
                .collect();
            if affine_dimension(&tight) == n - 1 {
                out.insert(FacetInequality { normal: a, offset });
            }
        }
        out
    }

    #[test]
    fn prism_facets_match_oracle() {
        let p = gen_family(Family::Prism, &[3]).unwrap();
        let ours: BTreeSet<_> = p.facets().iter().cloned().collect();
        assert_eq!(ours.len(), 5);
        assert_eq!(ours, facets_by_exhaustive_normals(&p, 2));
        let tri = ours.iter().filter(|f| p.vertices().iter().filter(|v| f.slack(v).is_zero()).count() == 3).count();
        assert_eq!(tri, 2);
    }

    #[test]
    fn simplicity() {
        assert!(gen_family(Family::Cube, &[3]).unwrap().is_simple());
        assert!(gen_family(Family::Prism, &[3]).unwrap().is_simple());
        let pyramid = LatticePolytope::from_i64(&[
            vec![1, 1, 0],
            vec![1, -1, 0],
            vec![-1, 1, 0],
            vec![-1, -1, 0],
            vec![0, 0, 1],
        ])
        .unwrap();
        assert!(!pyramid.is_simple());
        assert!(!pyramid.is_smooth());
        assert_eq!(pyramid.vertex_cone_generators(4).unwrap_err(), Error::VertexNotSimple(4));
    }

    #[test]
    fn smoothness() {
        assert!(gen_family(Family::Cube, &[3]).unwrap().is_smooth());
        for n in 1..=3 {
            for d in 1..=3 {
                assert!(gen_family(Family::DilatedSimplex, &[n, d]).unwrap().is_smooth());
            }
        }
        let skew = LatticePolytope::from_i64(&[vec![0, 0], vec![2, 0], vec![1, 2]]).unwrap();
        assert!(skew.is_simple());
        assert!(!skew.is_smooth());
        // smooth at (0,0) and (0,2), but at (1,0) the edge directions
        // (-1,0), (-1,2) have determinant -2
        let thin = LatticePolytope::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 2]]).unwrap();
        assert!(!thin.is_smooth());
    }

    #[test]
    fn cone_generators() {
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        let at = |v: &[i64]| sq.vertices().iter().position(|w| w == &big(v)).unwrap();
        let mut g = sq.vertex_cone_generators(at(&[0, 0])).unwrap();
        g.sort();
        assert_eq!(g, vec![big(&[0, 1]), big(&[1, 0])]);
        let mut g = sq.vertex_cone_generators(at(&[1, 1])).unwrap();
        g.sort();
        assert_eq!(g, vec![big(&[-1, 0]), big(&[0, -1])]);
        let seg = gen_family(Family::Segment, &[3]).unwrap();
        assert_eq!(seg.vertex_cone_generators(1).unwrap(), vec![big(&[-1])]);
        assert_eq!(seg.vertex_cone_generators(2).unwrap_err(), Error::NoSuchVertex(2));
    }
}

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::affine_dimension;
use super::FacetInequality;

/// A nonempty face: the intersection of the polytope with its tight facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// Sorted indices of the polytope vertices lying on the face.
    pub vertex_indices: Vec<usize>,
    /// Sorted indices of the facets containing the face; empty for the
    /// polytope itself.
    pub tight_facets: Vec<usize>,
}

impl Face {
    pub fn contains(&self, other: &Face) -> bool {
        other.vertex_indices.iter().all(|v| self.vertex_indices.binary_search(v).is_ok())
    }
}

/// All faces of a polytope grouped by dimension, the polytope included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    faces_by_dim: Vec<Vec<Face>>,
}

impl FaceLattice {
    pub(crate) fn build(vertices: &[Vec<BigInt>], facets: &[FacetInequality], n: usize) -> Self {
        let facet_sets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| {
                (0..vertices.len())
                    .filter(|&v| f.slack(&vertices[v]).is_zero())
                    .collect()
            })
            .collect();

        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        let whole: Vec<usize> = (0..vertices.len()).collect();
        seen.insert(whole.clone());
        queue.push_back(whole);
        while let Some(face) = queue.pop_front() {
            for fs in &facet_sets {
                let meet: Vec<usize> = face
                    .iter()
                    .copied()
                    .filter(|v| fs.binary_search(v).is_ok())
                    .collect();
                if !meet.is_empty() && seen.insert(meet.clone()) {
                    queue.push_back(meet);
                }
            }
        }

        let mut faces_by_dim: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
        for vertex_indices in seen {
            let pts: Vec<&[BigInt]> = vertex_indices.iter().map(|&v| vertices[v].as_slice()).collect();
            let dim = affine_dimension(&pts);
            let tight_facets = if dim == n {
                Vec::new()
            } else {
                (0..facets.len())
                    .filter(|&f| {
                        vertex_indices
                            .iter()
                            .all(|v| facet_sets[f].binary_search(v).is_ok())
                    })
                    .collect()
            };
            faces_by_dim[dim].push(Face { dim, vertex_indices, tight_facets });
        }
        Self { faces_by_dim }
    }

    /// The dimension `n` of the polytope.
    pub fn dim(&self) -> usize {
        self.faces_by_dim.len() - 1
    }

    pub fn faces_of_dim(&self, p: usize) -> &[Face] {
        &self.faces_by_dim[p]
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces_by_dim.iter().flatten()
    }

    /// `[f_0, ..., f_n]` with `f_n = 1`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_dim.iter().map(|fs| fs.len() as u64).collect()
    }
}

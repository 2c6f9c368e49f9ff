//! Exact computation of the degree of the discriminant of the toric variety
//! attached to a lattice polytope.
//!
//! The degree `c(P)` is computed two ways: as an alternating sum of normalized
//! face volumes ([`discriminant::degree_via_volumes`]), and, for simple
//! polytopes, from interior lattice point counts of dilated faces of dimension
//! at least `n/2` ([`discriminant::degree_via_interior_points`]). The
//! [`involution`] module holds the Dehn–Sommerville type involution behind the
//! second formula, and [`symfun`] the constant-term identities with Brion's
//! vertex formulas. All arithmetic is exact.

pub mod arith;
pub mod discriminant;
pub mod ehrhart;
mod error;
pub mod involution;
pub mod polytope;
pub mod symfun;

pub use arith::{Rational, RationalPolynomial};
pub use discriminant::{analyze, DegreeReport};
pub use error::{Error, Result};
pub use involution::{PolyVector, ScalarVector};
pub use polytope::{build_polytope, gen_family, Face, FaceLattice, FacetInequality, Family, LatticePolytope};

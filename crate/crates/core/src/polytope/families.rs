use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::LatticePolytope;
use crate::error::{Error, Result};

/// Named polytope families used as a test corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `cube(n)`: the unit cube `[0,1]^n`.
    Cube,
    /// `dilated_simplex(n, d)`: `d * Delta_n`.
    DilatedSimplex,
    /// `product_of_simplices(n_1, ..., n_k)`.
    Product,
    /// `segment(d)`: `[0, d]`.
    Segment,
    /// `prism(n)`: `Delta_1 x Delta_{n-1}`.
    Prism,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cube => "cube",
            Family::DilatedSimplex => "simplex",
            Family::Product => "product",
            Family::Segment => "segment",
            Family::Prism => "prism",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cube" => Ok(Family::Cube),
            "simplex" | "dilated_simplex" => Ok(Family::DilatedSimplex),
            "product" | "product_of_simplices" => Ok(Family::Product),
            "segment" => Ok(Family::Segment),
            "prism" => Ok(Family::Prism),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Vertices of the standard simplex `d * Delta_n`: the origin, then `d e_i`.
fn simplex_vertices(n: usize, d: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; n]];
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = d;
        out.push(v);
    }
    out
}

fn product_vertices(dims: &[usize]) -> Vec<Vec<i64>> {
    dims.iter()
        .map(|&k| simplex_vertices(k, 1))
        .multi_cartesian_product()
        .map(|parts| parts.concat())
        .collect()
}

/// Builds a member of `family`; vertex order is canonical for each family.
pub fn gen_family(family: Family, params: &[i64]) -> Result<LatticePolytope> {
    let invalid = |reason: &str| Error::InvalidFamilyParams {
        family: family.name().to_string(),
        reason: reason.to_string(),
    };
    if params.iter().any(|&p| p <= 0) {
        return Err(invalid("parameters must be positive"));
    }
    let (vertices, label) = match (family, params) {
        (Family::Cube, &[n]) => (product_vertices(&vec![1; n as usize]), format!("cube:{n}")),
        (Family::DilatedSimplex, &[n, d]) => (simplex_vertices(n as usize, d), format!("simplex:{n}:{d}")),
        (Family::Product, dims) if !dims.is_empty() => {
            let dims: Vec<usize> = dims.iter().map(|&k| k as usize).collect();
            (product_vertices(&dims), format!("product:{}", dims.iter().join(",")))
        }
        (Family::Segment, &[d]) => (vec![vec![0], vec![d]], format!("segment:{d}")),
        (Family::Prism, &[n]) if n >= 2 => (product_vertices(&[1, n as usize - 1]), format!("prism:{n}")),
        (Family::Prism, &[_]) => return Err(invalid("prism needs n >= 2")),
        _ => return Err(invalid("wrong number of parameters")),
    };
    Ok(LatticePolytope::from_i64(&vertices)?.with_name(label))
}

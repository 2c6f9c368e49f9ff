#![allow(dead_code)]

use polydisc::{gen_family, Family, LatticePolytope};

pub fn family(f: Family, params: &[i64]) -> LatticePolytope {
    gen_family(f, params).unwrap()
}

/// Simple test corpus: cubes, dilated simplices, prisms, products of
/// simplices up to dimension 4, and segments.
pub fn simple_corpus() -> Vec<LatticePolytope> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(family(Family::Cube, &[n]));
    }
    for n in 1..=3 {
        for d in 1..=3 {
            out.push(family(Family::DilatedSimplex, &[n, d]));
        }
    }
    for n in 2..=4 {
        out.push(family(Family::Prism, &[n]));
    }
    for dims in [&[2, 2][..], &[1, 1, 2], &[1, 2], &[2, 1]] {
        out.push(family(Family::Product, dims));
    }
    for d in 1..=10 {
        out.push(family(Family::Segment, &[d]));
    }
    out
}

pub fn square_pyramid() -> LatticePolytope {
    LatticePolytope::from_i64(&[
        vec![1, 1, 0],
        vec![1, -1, 0],
        vec![-1, 1, 0],
        vec![-1, -1, 0],
        vec![0, 0, 1],
    ])
    .unwrap()
    .with_name("square pyramid")
}

pub fn label(p: &LatticePolytope) -> String {
    p.name().unwrap_or("unnamed").to_string()
}

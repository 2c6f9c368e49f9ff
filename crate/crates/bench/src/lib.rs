//! Fixed polytope inputs shared by the benchmarks.

use polydisc::{gen_family, Family, LatticePolytope};

/// Simple polytopes of increasing size, labelled for benchmark ids.
pub fn bench_corpus() -> Vec<LatticePolytope> {
    [
        (Family::Segment, vec![10]),
        (Family::DilatedSimplex, vec![2, 5]),
        (Family::Cube, vec![3]),
        (Family::DilatedSimplex, vec![3, 3]),
        (Family::Prism, vec![4]),
        (Family::Product, vec![2, 2]),
        (Family::Cube, vec![4]),
    ]
    .into_iter()
    .map(|(f, params)| gen_family(f, &params).expect("valid family parameters"))
    .collect()
}

//! `c(P)` under lattice translations and unimodular changes of coordinates.

mod common;

use common::family;
use num_bigint::BigInt;
use polydisc::discriminant::{degree_via_interior_points, degree_via_volumes};
use polydisc::polytope::linalg::determinant as linalg_determinant;
use polydisc::{Family, LatticePolytope};
use proptest::prelude::*;

/// Products of elementary row operations, kept only if every entry stays
/// within `[-3, 3]`.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec((0..n, 0..n, -1i64..=1, any::<bool>()), 1..8)
        .prop_map(move |ops| {
            let mut m: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect();
            for (a, b, k, flip) in ops {
                if a != b {
                    let row_b = m[b].clone();
                    for (x, y) in m[a].iter_mut().zip(&row_b) {
                        *x += k * y;
                    }
                }
                if flip {
                    m[a].iter_mut().for_each(|x| *x = -*x);
                }
            }
            m
        })
        .prop_filter("entries bounded by 3", |m| m.iter().flatten().all(|x| x.abs() <= 3))
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn base_polytopes() -> Vec<LatticePolytope> {
    vec![
        family(Family::Cube, &[2]),
        family(Family::DilatedSimplex, &[2, 2]),
        family(Family::Prism, &[3]),
        family(Family::Cube, &[3]),
        family(Family::DilatedSimplex, &[3, 2]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degree_is_unimodular_invariant(
        idx in 0usize..5,
        m2 in unimodular(2),
        m3 in unimodular(3),
        shift in proptest::collection::vec(-5i64..=5, 3),
    ) {
        let p = &base_polytopes()[idx];
        let m = if p.dim() == 2 { m2 } else { m3 };
        let matrix = to_big(&m);
        prop_assert_eq!(linalg_determinant(&matrix).magnitude().clone(), 1u32.into());
        let shift: Vec<BigInt> = shift[..p.dim()].iter().map(|&x| BigInt::from(x)).collect();
        let q = p.transform(&matrix, &shift).unwrap();
        let c = degree_via_volumes(p).unwrap().value;
        prop_assert_eq!(&degree_via_volumes(&q).unwrap().value, &c);
        prop_assert_eq!(degree_via_interior_points(&q).unwrap(), c);
        prop_assert_eq!(q.face_lattice().f_vector(), p.face_lattice().f_vector());
        prop_assert_eq!(q.is_smooth(), p.is_smooth());
    }
}

use super::{Face, LatticePolytope};
use crate::error::Result;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Region {
    Closed,
    RelativeInterior,
}

/// `|iF ∩ Z^n|` by scanning the bounding box of `iF`.
pub fn count_lattice_points(p: &LatticePolytope, face: &Face, dilation: u64) -> Result<u64> {
    scan(p, face, dilation, Region::Closed)
}

/// Lattice points in the relative interior of `iF`: equality on the facets
/// containing `F`, strict inequality on every other facet of `P`.
pub fn count_interior_points(p: &LatticePolytope, face: &Face, dilation: u64) -> Result<u64> {
    scan(p, face, dilation, Region::RelativeInterior)
}

/// A constraint `a . x (<= | =) rhs`.
struct Row {
    a: Vec<i128>,
    rhs: i128,
    equality: bool,
}

fn scan(p: &LatticePolytope, face: &Face, dilation: u64, region: Region) -> Result<u64> {
    let small = p.small()?;
    let n = p.dim();
    let i = dilation as i128;

    let mut lo = vec![i128::MAX; n];
    let mut hi = vec![i128::MIN; n];
    for &v in &face.vertex_indices {
        for c in 0..n {
            let x = small.vertices[v][c] as i128 * i;
            lo[c] = lo[c].min(x);
            hi[c] = hi[c].max(x);
        }
    }

    let rows: Vec<Row> = (0..small.normals.len())
        .map(|k| {
            let equality = face.tight_facets.binary_search(&k).is_ok();
            let mut rhs = small.offsets[k] as i128 * i;
            if !equality && region == Region::RelativeInterior {
                rhs -= 1;
            }
            Row { a: small.normals[k].iter().map(|&x| x as i128).collect(), rhs, equality }
        })
        .collect();

    let last = n - 1;
    let mut point = lo.clone();
    let mut count = 0u64;
    loop {
        count += count_last_coordinate(&rows, &point[..last], lo[last], hi[last]);
        // odometer over the first n - 1 coordinates
        let mut c = last;
        loop {
            if c == 0 {
                return Ok(count);
            }
            c -= 1;
            if point[c] < hi[c] {
                point[c] += 1;
                break;
            }
            point[c] = lo[c];
        }
    }
}

/// Number of integers `x` in `[lo, hi]` such that `(prefix, x)` satisfies
/// every row.
fn count_last_coordinate(rows: &[Row], prefix: &[i128], mut lo: i128, mut hi: i128) -> u64 {
    let last = prefix.len();
    for row in rows {
        let partial: i128 = row.a[..last].iter().zip(prefix).map(|(a, x)| a * x).sum();
        let rest = row.rhs - partial;
        let coef = row.a[last];
        if coef == 0 {
            let ok = if row.equality { rest == 0 } else { rest >= 0 };
            if !ok {
                return 0;
            }
            continue;
        }
        if row.equality {
            if rest % coef != 0 {
                return 0;
            }
            let x = rest / coef;
            lo = lo.max(x);
            hi = hi.min(x);
        } else if coef > 0 {
            hi = hi.min(rest.div_euclid(coef));
        } else {
            // coef < 0: x >= -rest / |coef|, i.e. x >= -floor(rest / |coef|)
            lo = lo.max(-rest.div_euclid(-coef));
        }
        if lo > hi {
            return 0;
        }
    }
    (hi - lo + 1) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{gen_family, Family};

    #[test]
    fn whole_polytope_counts() {
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        assert_eq!(count_lattice_points(&sq, sq.whole(), 1).unwrap(), 4);
        assert_eq!(count_interior_points(&sq, sq.whole(), 1).unwrap(), 0);
        assert_eq!(count_interior_points(&sq, sq.whole(), 2).unwrap(), 1);
        let tri = gen_family(Family::DilatedSimplex, &[2, 1]).unwrap();
        assert_eq!(count_lattice_points(&tri, tri.whole(), 2).unwrap(), 6);
        assert_eq!(count_interior_points(&tri, tri.whole(), 3).unwrap(), 1);
    }

    #[test]
    fn segment_interior() {
        for d in 1..=6 {
            let seg = gen_family(Family::Segment, &[d]).unwrap();
            assert_eq!(count_interior_points(&seg, seg.whole(), 1).unwrap(), d as u64 - 1);
            assert_eq!(count_lattice_points(&seg, seg.whole(), 1).unwrap(), d as u64 + 1);
        }
    }

    #[test]
    fn cube_edge_dilated() {
        let cube = gen_family(Family::Cube, &[3]).unwrap();
        for edge in cube.face_lattice().faces_of_dim(1) {
            assert_eq!(count_lattice_points(&cube, edge, 3).unwrap(), 4);
            assert_eq!(count_interior_points(&cube, edge, 3).unwrap(), 2);
        }
        for v in cube.face_lattice().faces_of_dim(0) {
            assert_eq!(count_lattice_points(&cube, v, 2).unwrap(), 1);
            assert_eq!(count_interior_points(&cube, v, 2).unwrap(), 1);
        }
    }

    // the hypotenuse is not axis-aligned, so most of its box lies off the face
    #[test]
    fn diagonal_edge_of_triangle() {
        let tri = gen_family(Family::DilatedSimplex, &[2, 3]).unwrap();
        // the hypotenuse from (3,0) to (0,3): 4 points, dilated by 2 -> 7
        let hyp = tri
            .face_lattice()
            .faces_of_dim(1)
            .iter()
            .find(|e| e.vertex_indices == vec![1, 2])
            .unwrap();
        assert_eq!(count_lattice_points(&tri, hyp, 1).unwrap(), 4);
        assert_eq!(count_lattice_points(&tri, hyp, 2).unwrap(), 7);
        assert_eq!(count_interior_points(&tri, hyp, 2).unwrap(), 5);
    }
}

mod common;

use common::{label, simple_corpus};
use num_bigint::BigInt;
use polydisc::discriminant::degree_via_volumes;
use polydisc::ehrhart::normalized_volume;
use polydisc::polytope::count_lattice_points;
use polydisc::symfun::{brion_count, brion_volume, generic_xis, verify_polytope_symfun_identity};
use polydisc::Rational;

#[test]
fn brion_matches_brute_force() {
    let mut smooth = 0;
    for p in simple_corpus().into_iter().filter(|p| p.is_smooth()) {
        smooth += 1;
        let points = BigInt::from(count_lattice_points(&p, p.whole(), 1).unwrap());
        let volume = normalized_volume(&p, p.whole()).unwrap();
        for xi in generic_xis(&p, 3) {
            assert_eq!(brion_count(&p, &xi).unwrap(), points, "{} xi={xi:?}", label(&p));
            assert_eq!(brion_volume(&p, &xi).unwrap(), volume, "{} xi={xi:?}", label(&p));
        }
    }
    assert!(smooth >= 20);
}

#[test]
fn vertex_identity_equals_degree() {
    for p in simple_corpus().into_iter().filter(|p| p.is_smooth()) {
        let c = Rational::from_integer(degree_via_volumes(&p).unwrap().value);
        let xi = generic_xis(&p, 1).remove(0);
        let check = verify_polytope_symfun_identity(&p, &xi).unwrap();
        assert!(check.equal, "{}", label(&p));
        assert_eq!(check.lhs, c, "{}", label(&p));
    }
}

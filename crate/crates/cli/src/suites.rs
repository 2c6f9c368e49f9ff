//! Seeded property suites behind `polydisc verify`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use polydisc::arith::{ratio, Rational};
use polydisc::discriminant::{degree_via_interior_points, degree_via_volumes, defectivity_criterion};
use polydisc::ehrhart::{ehrhart_polynomial, ehrhart_vector};
use polydisc::involution::{c_of_vector, c_via_theorem, check_generating_identity};
use polydisc::polytope::{count_interior_points, count_lattice_points};
use polydisc::symfun::{
    brion_count, brion_volume, generic_xis, verify_polytope_symfun_identity, verify_symfun_identity,
    Specialization,
};
use polydisc::{gen_family, Family, LatticePolytope, PolyVector, RationalPolynomial, ScalarVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SUITES: [&str; 7] = [
    "involution",
    "dehn-sommerville",
    "reciprocity",
    "theorem-nill",
    "theorem-degree",
    "symfun",
    "brion",
];

const MAX_RECORDED_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub suite: String,
    pub property: String,
    pub cases: u64,
    pub passed: u64,
    pub failures: Vec<String>,
}

impl PropertyResult {
    fn new(suite: &str, property: impl Into<String>) -> Self {
        Self { suite: suite.to_string(), property: property.into(), cases: 0, passed: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(describe());
        }
    }

    fn record_result(&mut self, outcome: polydisc::Result<bool>, describe: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(ok, describe),
            Err(e) => {
                let what = describe();
                self.record(false, || format!("{what}: {e}"));
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.cases > 0 && self.cases == self.passed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub properties: Vec<PropertyResult>,
    pub all_passed: bool,
}

impl VerifyReport {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {} seed {}", self.suite, self.seed);
        for p in &self.properties {
            let status = if p.ok() { "ok" } else { "FAILED" };
            let label = format!("{}/{}", p.suite, p.property);
            let _ = writeln!(s, "{label:<52}{:>7}/{:<7}{status}", p.passed, p.cases);
            for f in &p.failures {
                let _ = writeln!(s, "    {f}");
            }
        }
        let total: u64 = self.properties.iter().map(|p| p.cases).sum();
        let passed: u64 = self.properties.iter().map(|p| p.passed).sum();
        let verdict = if self.all_passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{verdict}: {passed}/{total} cases");
        s
    }
}

/// Runs one suite, or every suite for `"all"`. Each suite draws from its own
/// ChaCha8 stream of `seed`, so a suite gives the same cases alone or in `all`.
pub fn run_suite(name: &str, seed: u64) -> Result<VerifyReport, CliError> {
    let selected: Vec<(usize, &str)> = if name == "all" {
        SUITES.iter().copied().enumerate().collect()
    } else {
        let index = SUITES.iter().position(|s| *s == name).ok_or_else(|| {
            CliError::Usage(format!("unknown suite '{name}'; expected one of {} or all", SUITES.join(", ")))
        })?;
        vec![(index, SUITES[index])]
    };
    let mut properties = Vec::new();
    for (index, suite) in selected {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index as u64);
        properties.extend(match suite {
            "involution" => involution(&mut rng),
            "dehn-sommerville" => dehn_sommerville(),
            "reciprocity" => reciprocity(),
            "theorem-nill" => theorem_nill(&mut rng),
            "theorem-degree" => theorem_degree(),
            "symfun" => symfun(&mut rng),
            "brion" => brion(),
            _ => unreachable!("suite list is fixed"),
        });
    }
    let all_passed = properties.iter().all(PropertyResult::ok);
    Ok(VerifyReport { suite: name.to_string(), seed, properties, all_passed })
}

fn family(f: Family, params: &[i64]) -> LatticePolytope {
    gen_family(f, params).expect("valid family parameters")
}

/// Cubes of dimension 1..4, `d` times the standard `n`-simplex for
/// `d, n = 1..3`, `Δ_1 × Δ_(n-1)` for `n = 2..4`, `Δ_2 × Δ_2`, and segments
/// of length 1..10.
pub fn corpus() -> Vec<LatticePolytope> {
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
        out.push(family(Family::Product, &[1, n - 1]));
    }
    out.push(family(Family::Product, &[2, 2]));
    for d in 1..=10 {
        out.push(family(Family::Segment, &[d]));
    }
    out
}

/// The pyramid over a square: not simple, so Dehn–Sommerville must fail.
pub fn square_pyramid() -> LatticePolytope {
    LatticePolytope::from_i64(&[
        vec![1, 1, 0],
        vec![1, -1, 0],
        vec![-1, 1, 0],
        vec![-1, -1, 0],
        vec![0, 0, 1],
    ])
    .expect("valid pyramid")
    .with_name("square pyramid")
}

fn label(p: &LatticePolytope) -> String {
    p.name().unwrap_or("unnamed").to_string()
}

pub fn random_rational(rng: &mut impl Rng, bound: i64, max_den: i64) -> Rational {
    ratio(rng.random_range(-bound..=bound), rng.random_range(1..=max_den))
}

fn random_nonzero_rational(rng: &mut impl Rng, bound: i64, max_den: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random element of `P_n`: `E_j` has independent coefficients up to `t^j`.
pub fn random_poly_vector(rng: &mut impl Rng, n: usize) -> PolyVector {
    let entries = (0..=n)
        .map(|j| RationalPolynomial::new((0..=j).map(|_| random_rational(rng, 20, 6)).collect()))
        .collect();
    PolyVector::new(entries).expect("deg E_j <= j by construction")
}

pub fn random_specialization(rng: &mut impl Rng, n: usize) -> Specialization {
    let s = random_rational(rng, 9, 5);
    let x = (0..n).map(|_| random_nonzero_rational(rng, 9, 5)).collect();
    Specialization::new(s, x).expect("nonzero x")
}

fn involution(rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let mut squared = PropertyResult::new("involution", "s-squared-is-identity");
    for _ in 0..1000 {
        let n = rng.random_range(0..=8);
        let e = random_poly_vector(rng, n);
        squared.record(e.s_transform().s_transform() == e, || format!("S^2 != 1 for n={n}"));
    }
    let mut generating = PropertyResult::new("involution", "generating-identity");
    for _ in 0..200 {
        let n = rng.random_range(0..=8);
        let e = random_poly_vector(rng, n);
        let t0 = random_rational(rng, 10, 4);
        generating.record(check_generating_identity(&e, &t0).holds, || format!("n={n} t0={t0}"));
    }
    vec![squared, generating]
}

fn theorem_nill(rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    (1..=6)
        .map(|n| {
            let mut prop = PropertyResult::new("theorem-nill", format!("values-determine-c-n{n}"));
            for _ in 0..500 {
                let e = random_poly_vector(rng, n);
                let (direct, via) = (c_of_vector(&e), c_via_theorem(&e));
                prop.record(direct == via, || format!("n={n}: c(E)={direct}, from values {via}"));
            }
            prop
        })
        .collect()
}

fn f_vector_fixed(p: &LatticePolytope) -> bool {
    let f: Vec<i64> = p.face_lattice().f_vector().iter().map(|&x| x as i64).collect();
    let f = ScalarVector::from_ints(&f);
    f.s_transform() == f
}

fn extended_identity(p: &LatticePolytope) -> polydisc::Result<bool> {
    let ev = ehrhart_vector(p)?;
    let images = ev.to_poly_vector().s_transform();
    Ok(images.entries().iter().zip(&ev.entries).all(|(fp, ep)| *fp == ep.reflect()))
}

fn dehn_sommerville() -> Vec<PropertyResult> {
    let mut fixed = PropertyResult::new("dehn-sommerville", "f-vector-fixed");
    let mut extended = PropertyResult::new("dehn-sommerville", "extended-identity");
    for p in corpus().iter().filter(|p| p.is_simple()) {
        fixed.record(f_vector_fixed(p), || label(p));
        extended.record_result(extended_identity(p), || label(p));
    }
    let mut control = PropertyResult::new("dehn-sommerville", "non-simple-control-fails");
    let pyramid = square_pyramid();
    control.record_result(
        extended_identity(&pyramid).map(|ext| !ext && !f_vector_fixed(&pyramid)),
        || "square pyramid satisfied an identity it should violate".to_string(),
    );
    vec![fixed, extended, control]
}

fn reciprocity() -> Vec<PropertyResult> {
    let mut prop = PropertyResult::new("reciprocity", "interior-count-by-reciprocity");
    let mut polys = corpus();
    polys.push(square_pyramid());
    for p in &polys {
        for face in p.face_lattice().faces() {
            let ehr = match ehrhart_polynomial(p, face) {
                Ok(e) => e,
                Err(e) => {
                    prop.record(false, || format!("{}: {e}", label(p)));
                    continue;
                }
            };
            for i in 1..=4u64 {
                let mut value = ehr.eval_int(-(i as i64));
                if face.dim % 2 == 1 {
                    value = -value;
                }
                let outcome = count_interior_points(p, face, i)
                    .map(|direct| value == Rational::from_integer(BigInt::from(direct)));
                prop.record_result(outcome, || {
                    format!("{} face {:?} i={i}", label(p), face.vertex_indices)
                });
            }
        }
    }
    vec![prop]
}

fn theorem_degree() -> Vec<PropertyResult> {
    let mut agreement = PropertyResult::new("theorem-degree", "volume-and-interior-formulas-agree");
    let mut criterion = PropertyResult::new("theorem-degree", "criterion-implies-zero");
    for p in &corpus() {
        let outcome = degree_via_volumes(p)
            .and_then(|v| degree_via_interior_points(p).map(|i| v.value == i));
        agreement.record_result(outcome, || label(p));
        let outcome = defectivity_criterion(p)
            .and_then(|fires| Ok(!fires || degree_via_volumes(p)?.value.is_zero()));
        criterion.record_result(outcome, || label(p));
    }

    let mut closed = PropertyResult::new("theorem-degree", "closed-form-values");
    let mut expect = |p: LatticePolytope, value: i64| {
        let outcome = degree_via_volumes(&p).and_then(|v| {
            let i = degree_via_interior_points(&p)?;
            Ok(v.value == BigInt::from(value) && i == BigInt::from(value))
        });
        closed.record_result(outcome, || format!("{} expected {value}", label(&p)));
    };
    for d in 1..=10 {
        expect(family(Family::Segment, &[d]), 2 * (d - 1));
    }
    for d in 1..=5 {
        expect(family(Family::DilatedSimplex, &[2, d]), 3 * (d - 1) * (d - 1));
    }
    expect(family(Family::Product, &[1, 2]), 0);
    expect(family(Family::Cube, &[2]), 2);

    let mut products = PropertyResult::new("theorem-degree", "criterion-on-simplex-products");
    for n in 2..=4 {
        let p = family(Family::Product, &[1, n - 1]);
        let outcome = defectivity_criterion(&p).map(|fires| fires == (n >= 3));
        products.record_result(outcome, || format!("{} criterion should fire iff n >= 3", label(&p)));
    }
    vec![agreement, closed, criterion, products]
}

fn smooth_corpus() -> Vec<LatticePolytope> {
    corpus().into_iter().filter(LatticePolytope::is_smooth).collect()
}

fn symfun(rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let mut prop = PropertyResult::new("symfun", format!("constant-term-identity-n{n}"));
        for _ in 0..50 {
            let spec = random_specialization(rng, n);
            let outcome = verify_symfun_identity(&spec).map(|c| c.equal);
            prop.record_result(outcome, || format!("s={} x={:?}", spec.s(), spec.x()));
        }
        out.push(prop);
    }
    let mut vertex = PropertyResult::new("symfun", "vertex-sum-equals-degree");
    for p in &smooth_corpus() {
        for xi in generic_xis(p, 3) {
            let outcome = degree_via_volumes(p).and_then(|c| {
                let check = verify_polytope_symfun_identity(p, &xi)?;
                Ok(check.equal && check.lhs == Rational::from_integer(c.value))
            });
            vertex.record_result(outcome, || format!("{} xi={xi:?}", label(p)));
        }
    }
    out.push(vertex);
    out
}

fn brion() -> Vec<PropertyResult> {
    let mut count = PropertyResult::new("brion", "vertex-sum-counts-lattice-points");
    let mut volume = PropertyResult::new("brion", "vertex-sum-gives-volume");
    for p in &smooth_corpus() {
        for xi in generic_xis(p, 3) {
            let outcome = brion_count(p, &xi)
                .and_then(|b| Ok(b == BigInt::from(count_lattice_points(p, p.whole(), 1)?)));
            count.record_result(outcome, || format!("{} xi={xi:?}", label(p)));
            let outcome = brion_volume(p, &xi).and_then(|b| {
                let leading = ehrhart_polynomial(p, p.whole())?.coeff(p.dim());
                let factorial: BigInt = (1..=p.dim() as u64).map(BigInt::from).product();
                Ok(Rational::from_integer(b) == leading * Rational::from_integer(factorial))
            });
            volume.record_result(outcome, || format!("{} xi={xi:?}", label(p)));
        }
    }
    vec![count, volume]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_usage_error() {
        let err = run_suite("bogus", 1).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn streams_are_independent_of_selection() {
        let alone = run_suite("involution", 3).unwrap();
        assert!(alone.all_passed);
        assert_eq!(alone.properties[0].cases, 1000);
        assert_eq!(alone.properties[1].cases, 200);
    }

    #[test]
    fn corpus_shape() {
        let c = corpus();
        assert_eq!(c.len(), 4 + 9 + 3 + 1 + 10);
        assert!(c.iter().all(LatticePolytope::is_simple));
    }
}

//! Constant terms of `e^(ts) / prod_{a in J} (-t x_a)` and
//! `e^(ts) / prod_{a in J} (1 - e^(t x_a))` summed over `p`-subsets `J`, the
//! identity relating them, and Brion's vertex formulas for smooth polytopes.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{
    binomial, factorial, rat, series_exp_linear, series_recip_one_minus_exp, sign, Rational,
    TruncatedLaurentSeries, Window,
};
use crate::discriminant::middle_index;
use crate::error::{Error, Result};
use crate::involution::product_coefficients;
use crate::polytope::linalg::dot;
use crate::polytope::LatticePolytope;

/// Values for `s` and `x_1, ..., x_n`; every `x_a` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    s: Rational,
    x: Vec<Rational>,
}

impl Specialization {
    pub fn new(s: Rational, x: Vec<Rational>) -> Result<Self> {
        if let Some(a) = x.iter().position(Zero::is_zero) {
            return Err(Error::ZeroSpecialization(a));
        }
        Ok(Self { s, x })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// The same `x` with `s` replaced.
    pub fn with_s(&self, s: Rational) -> Self {
        Self { s, x: self.x.clone() }
    }

    fn check_p(&self, p: usize) -> Result<()> {
        if p > self.n() {
            return Err(Error::SubsetTooLarge { p, n: self.n() });
        }
        Ok(())
    }
}

/// `CTV_p = sum_{|J| = p} (-1)^p s^p / (p! prod_{a in J} x_a)`.
pub fn ct_v_p(spec: &Specialization, p: usize) -> Result<Rational> {
    spec.check_p(p)?;
    let recips: Vec<Rational> = spec.x.iter().map(Rational::recip).collect();
    let e_p = product_coefficients(&recips).swap_remove(p);
    let s_pow = (0..p).fold(rat(1), |acc, _| acc * &spec.s);
    Ok(e_p * s_pow * rat(sign(p as i64)) / Rational::from_integer(factorial(p as u64)))
}

/// `CTB_p`: constant term of `sum_{|J| = p} e^(ts) / prod_{a in J} (1 - e^(t x_a))`,
/// expanded with the window `n + 2`.
pub fn ct_b_p(spec: &Specialization, p: usize) -> Result<Rational> {
    spec.check_p(p)?;
    let window = Window::for_dimension(spec.n());
    let factors = spec
        .x
        .iter()
        .map(|x| series_recip_one_minus_exp(x, window))
        .collect::<Result<Vec<_>>>()?;
    ct_b_p_with(&spec.s, &factors, p, window)
}

fn ct_b_p_with(
    s: &Rational,
    factors: &[TruncatedLaurentSeries],
    p: usize,
    window: Window,
) -> Result<Rational> {
    let exp = series_exp_linear(s, window);
    let mut total = Rational::zero();
    for subset in (0..factors.len()).combinations(p) {
        let term = subset.iter().fold(exp.clone(), |acc, &a| &acc * &factors[a]);
        total += term.constant_term()?;
    }
    Ok(total)
}

/// Both sides of the constant-term identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl IdentityCheck {
    fn new(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        Self { lhs, rhs, equal }
    }
}

/// Left side `sum_{p=0}^{n} (-1)^(n-p) (p+1)! CTV_p(s, x)` against the right side
/// built from `CTB_p(-i s, x)`:
///
/// odd `n`, `m = (n+1)/2`: `sum_{p=m}^{n} (-1)^p sum_{i=1}^{p+1-m} (-1)^(m-i) C(p+1, m+i) 2 i CTB_p(-i s, x)`;
///
/// even `n`, `m = n/2`: `sum_{p=m}^{n} (-1)^p sum_{i=1}^{p+1-m} (-1)^(m+1-i) (C(p+1, m+i) - C(p+1, m+i+1)) i CTB_p(-i s, x)`.
pub fn verify_symfun_identity(spec: &Specialization) -> Result<IdentityCheck> {
    let (lhs, rhs) = identity_sides(spec)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

fn identity_sides(spec: &Specialization) -> Result<(Rational, Rational)> {
    let n = spec.n() as i64;
    let mut lhs = Rational::zero();
    for p in 0..=n {
        let weight = factorial(p as u64 + 1) * sign(n - p);
        lhs += Rational::from_integer(weight) * ct_v_p(spec, p as usize)?;
    }

    let window = Window::for_dimension(spec.n());
    let factors = spec
        .x
        .iter()
        .map(|x| series_recip_one_minus_exp(x, window))
        .collect::<Result<Vec<_>>>()?;
    let odd = n % 2 == 1;
    let m = middle_index(spec.n()) as i64;
    let mut rhs = Rational::zero();
    for p in m..=n {
        let mut inner = Rational::zero();
        for i in 1..=(p + 1 - m) {
            let weight = if odd {
                binomial(p + 1, m + i) * (sign(m - i) * 2 * i)
            } else {
                (binomial(p + 1, m + i) - binomial(p + 1, m + i + 1)) * (sign(m + 1 - i) * i)
            };
            if weight.is_zero() {
                continue;
            }
            let s = -(&spec.s * rat(i));
            inner += Rational::from_integer(weight) * ct_b_p_with(&s, &factors, p as usize, window)?;
        }
        rhs += inner * rat(sign(p));
    }
    Ok((lhs, rhs))
}

/// A vertex with its edge generators and the specialization
/// `s = <v, xi>`, `x_a = <g_a, xi>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub vertex: usize,
    pub generators: Vec<Vec<BigInt>>,
    pub spec: Specialization,
}

/// Vertex specializations of a smooth polytope at the covector `xi`.
pub fn vertex_data(p: &LatticePolytope, xi: &[BigInt]) -> Result<Vec<VertexData>> {
    if xi.len() != p.dim() {
        return Err(Error::CovectorDimension { expected: p.dim(), found: xi.len() });
    }
    if !p.is_smooth() {
        return Err(Error::NotSmooth);
    }
    (0..p.vertices().len())
        .map(|vertex| {
            let generators = p.vertex_cone_generators(vertex)?;
            let mut x = Vec::with_capacity(generators.len());
            for g in &generators {
                let pairing = dot(g, xi);
                if pairing.is_zero() {
                    return Err(Error::XiNotGeneric {
                        vertex,
                        generator: format!("({})", g.iter().join(", ")),
                    });
                }
                x.push(Rational::from_integer(pairing));
            }
            let s = Rational::from_integer(dot(&p.vertices()[vertex], xi));
            Ok(VertexData { vertex, generators, spec: Specialization { s, x } })
        })
        .collect()
}

fn integral(value: Rational, what: &str) -> Result<BigInt> {
    if !value.is_integer() {
        return Err(Error::Consistency(format!("{what} summed to non-integer {value}")));
    }
    Ok(value.to_integer())
}

/// `|P ∩ Z^n|` as `sum_v CTB_n(<v, xi>, <g, xi>)`.
pub fn brion_count(p: &LatticePolytope, xi: &[BigInt]) -> Result<BigInt> {
    let n = p.dim();
    let total = vertex_data(p, xi)?
        .iter()
        .map(|d| ct_b_p(&d.spec, n))
        .sum::<Result<Rational>>()?;
    integral(total, "vertex lattice-point terms")
}

/// `Vol_Z(P)` as `n! sum_v CTV_n(<v, xi>, <g, xi>)`.
pub fn brion_volume(p: &LatticePolytope, xi: &[BigInt]) -> Result<BigInt> {
    let n = p.dim();
    let total = vertex_data(p, xi)?
        .iter()
        .map(|d| ct_v_p(&d.spec, n))
        .sum::<Result<Rational>>()?;
    integral(total * Rational::from_integer(factorial(n as u64)), "vertex volume terms")
}

/// The constant-term identity summed over the vertices of `P`.
///
/// The left side sums `sum_p (-1)^(n-p) (p+1)! CTV_p` at `s = <v, xi>`,
/// `x_a = <g_a, xi>`. The right side evaluates `CTB_p` at the dilated vertex
/// `iv` paired with `-xi`, that is `s = -i <v, xi>`, while the generators stay
/// paired with `xi`. Both sides equal `c(P)`.
pub fn verify_polytope_symfun_identity(p: &LatticePolytope, xi: &[BigInt]) -> Result<IdentityCheck> {
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for d in vertex_data(p, xi)? {
        let (l, r) = identity_sides(&d.spec)?;
        lhs += l;
        rhs += r;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `(1, M, M^2, ...)` with `M` one more than the largest coordinate spread,
/// increased until every edge pairing is nonzero.
pub fn choose_generic_xi(p: &LatticePolytope) -> Vec<BigInt> {
    generic_xis(p, 1).swap_remove(0)
}

/// The first `count` generic covectors of the form `(1, M, M^2, ...)`.
pub fn generic_xis(p: &LatticePolytope, count: usize) -> Vec<Vec<BigInt>> {
    let n = p.dim();
    let spread = (0..n)
        .map(|c| {
            let lo = p.vertices().iter().map(|v| &v[c]).min().unwrap();
            let hi = p.vertices().iter().map(|v| &v[c]).max().unwrap();
            hi - lo
        })
        .max()
        .unwrap_or_default();
    let edges: Vec<Vec<BigInt>> = p
        .face_lattice()
        .faces_of_dim(1)
        .iter()
        .map(|e| {
            let [a, b] = [e.vertex_indices[0], e.vertex_indices[1]];
            p.vertices()[a].iter().zip(&p.vertices()[b]).map(|(x, y)| x - y).collect()
        })
        .collect();
    let mut out = Vec::with_capacity(count);
    let mut m = spread + 1;
    while out.len() < count {
        let xi: Vec<BigInt> = (0..n)
            .scan(BigInt::from(1), |pow, _| {
                let cur = pow.clone();
                *pow *= &m;
                Some(cur)
            })
            .collect();
        if edges.iter().all(|e| !dot(e, &xi).is_zero()) {
            out.push(xi);
        }
        m += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::polytope::{gen_family, Family};
    use proptest::prelude::*;

    fn spec(s: Rational, x: &[Rational]) -> Specialization {
        Specialization::new(s, x.to_vec()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// `CTV_p` through the series machinery: `e^(ts)` times the Laurent
    /// monomials `-1/(x_a t)`.
    fn ct_v_p_by_series(spec: &Specialization, p: usize) -> Rational {
        let window = Window::for_dimension(spec.n());
        let exp = series_exp_linear(spec.s(), window);
        let mut total = Rational::zero();
        for subset in (0..spec.n()).combinations(p) {
            let term = subset.iter().fold(exp.clone(), |acc, &a| {
                let mono = TruncatedLaurentSeries::new(-1, window.max_order, vec![-spec.x()[a].recip()]);
                &acc * &mono
            });
            total += term.constant_term().unwrap();
        }
        total
    }

    #[test]
    fn ct_v_examples() {
        let sp = spec(ratio(5, 3), &[ratio(2, 7)]);
        assert_eq!(ct_v_p(&sp, 0).unwrap(), rat(1));
        assert_eq!(ct_v_p(&sp, 1).unwrap(), -ratio(5, 3) / ratio(2, 7));
        let sp = spec(rat(1), &[rat(1), rat(2)]);
        assert_eq!(ct_v_p(&sp, 1).unwrap(), ratio(-3, 2));
        // the full subset reproduces (-1)^n s^n / (n! x_1 ... x_n)
        assert_eq!(ct_v_p(&sp, 2).unwrap(), ratio(1, 4));
        assert!(ct_v_p(&sp, 3).is_err());
    }

    #[test]
    fn ct_b_examples() {
        let sp = spec(ratio(5, 3), &[ratio(2, 7)]);
        assert_eq!(ct_b_p(&sp, 0).unwrap(), rat(1));
        assert_eq!(ct_b_p(&sp, 1).unwrap(), -ratio(5, 3) / ratio(2, 7) + ratio(1, 2));
        // 1/(1-e^u) + 1/(1-e^-u) = 1 pairs the two expansions
        let neg = spec(-ratio(5, 3), &[-ratio(2, 7)]);
        let sum = ct_b_p(&sp, 1).unwrap() + ct_b_p(&spec(ratio(5, 3), &[-ratio(2, 7)]), 1).unwrap();
        assert_eq!(sum, rat(1));
        // constant terms are invariant under t -> -t
        assert_eq!(ct_b_p(&neg, 1).unwrap(), ct_b_p(&sp, 1).unwrap());
    }

    #[test]
    fn zero_entry_rejected() {
        assert_eq!(
            Specialization::new(rat(1), vec![rat(1), rat(0)]).unwrap_err(),
            Error::ZeroSpecialization(1)
        );
    }

    #[test]
    fn identity_in_dimension_one() {
        let check = verify_symfun_identity(&spec(rat(1), &[rat(1)])).unwrap();
        assert_eq!(check.lhs, rat(-3));
        assert_eq!(check.rhs, rat(-3));
        assert!(check.equal);
    }

    #[test]
    fn brion_examples() {
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        assert_eq!(brion_count(&sq, &big(&[1, 2])).unwrap(), BigInt::from(4));
        assert_eq!(brion_volume(&sq, &big(&[1, 2])).unwrap(), BigInt::from(2));
        let seg = gen_family(Family::Segment, &[3]).unwrap();
        assert_eq!(brion_count(&seg, &big(&[1])).unwrap(), BigInt::from(4));
        assert_eq!(brion_volume(&seg, &big(&[1])).unwrap(), BigInt::from(3));
        let tri = gen_family(Family::DilatedSimplex, &[2, 3]).unwrap();
        assert_eq!(brion_count(&tri, &big(&[1, 2])).unwrap(), BigInt::from(10));
        let prism = gen_family(Family::Prism, &[3]).unwrap();
        let xi = choose_generic_xi(&prism);
        assert_eq!(brion_volume(&prism, &xi).unwrap(), BigInt::from(3));
    }

    #[test]
    fn per_vertex_terms_are_fractional() {
        let seg = gen_family(Family::Segment, &[3]).unwrap();
        let data = vertex_data(&seg, &big(&[1])).unwrap();
        let terms: Vec<Rational> = data.iter().map(|d| ct_b_p(&d.spec, 1).unwrap()).collect();
        assert_eq!(terms, vec![ratio(1, 2), ratio(7, 2)]);
        assert_eq!(data[1].spec.x(), &[rat(-1)]);
    }

    #[test]
    fn brion_errors() {
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        assert!(matches!(
            brion_count(&sq, &big(&[1, 0])).unwrap_err(),
            Error::XiNotGeneric { .. }
        ));
        assert!(matches!(brion_count(&sq, &big(&[1])).unwrap_err(), Error::CovectorDimension { .. }));
        let skew = LatticePolytope::from_i64(&[vec![0, 0], vec![2, 0], vec![1, 2]]).unwrap();
        assert_eq!(brion_count(&skew, &big(&[1, 5])).unwrap_err(), Error::NotSmooth);
    }

    #[test]
    fn polytope_identity_examples() {
        let seg = gen_family(Family::Segment, &[2]).unwrap();
        let check = verify_polytope_symfun_identity(&seg, &big(&[1])).unwrap();
        assert_eq!((check.lhs.clone(), check.rhs.clone()), (rat(2), rat(2)));
        let sq = gen_family(Family::Cube, &[2]).unwrap();
        let check = verify_polytope_symfun_identity(&sq, &big(&[1, 2])).unwrap();
        assert_eq!((check.lhs.clone(), check.rhs.clone()), (rat(2), rat(2)));
        let prism = gen_family(Family::Prism, &[3]).unwrap();
        let check = verify_polytope_symfun_identity(&prism, &choose_generic_xi(&prism)).unwrap();
        assert_eq!((check.lhs.clone(), check.rhs.clone()), (rat(0), rat(0)));
    }

    #[test]
    fn negating_xi_on_both_pairings_breaks_the_identity() {
        // B side evaluated at s = <iv, -xi> and x_a = <g_a, -xi>: by t -> -t
        // this is CTB_p(i s, x), which gives E_p(i) instead of E_p(-i).
        let seg = gen_family(Family::Segment, &[2]).unwrap();
        let mut rhs = Rational::zero();
        for d in vertex_data(&seg, &big(&[1])).unwrap() {
            let flipped = spec(-d.spec.s().clone(), &[-d.spec.x()[0].clone()]);
            rhs += rat(-2) * ct_b_p(&flipped, 1).unwrap();
        }
        assert_eq!(rhs, rat(-6));
    }

    #[test]
    fn generic_xi_choice() {
        let cube = gen_family(Family::Cube, &[3]).unwrap();
        assert_eq!(choose_generic_xi(&cube), big(&[1, 2, 4]));
        let xis = generic_xis(&cube, 3);
        assert_eq!(xis[2], big(&[1, 4, 16]));
    }

    fn arb_spec(n: usize) -> impl Strategy<Value = Specialization> {
        let nonzero = (-12i64..=12, 1i64..=6).prop_filter("nonzero", |(a, _)| *a != 0);
        ((-12i64..=12, 1i64..=6), proptest::collection::vec(nonzero, n)).prop_map(|((a, b), xs)| {
            Specialization::new(ratio(a, b), xs.into_iter().map(|(c, d)| ratio(c, d)).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn closed_form_matches_series(sp in (1usize..=4).prop_flat_map(arb_spec), p in 0usize..=4) {
            prop_assume!(p <= sp.n());
            prop_assert_eq!(ct_v_p(&sp, p).unwrap(), ct_v_p_by_series(&sp, p));
        }

        #[test]
        fn identity_holds(sp in (1usize..=4).prop_flat_map(arb_spec)) {
            let check = verify_symfun_identity(&sp).unwrap();
            prop_assert!(check.equal, "{} != {}", check.lhs, check.rhs);
        }

        #[test]
        fn symmetric_in_x(sp in (2usize..=4).prop_flat_map(arb_spec), rot in 1usize..4) {
            let mut x = sp.x().to_vec();
            let len = x.len();
            x.rotate_left(rot % len);
            x.swap(0, 1);
            let permuted = Specialization::new(sp.s().clone(), x).unwrap();
            for p in 0..=sp.n() {
                prop_assert_eq!(ct_v_p(&sp, p).unwrap(), ct_v_p(&permuted, p).unwrap());
                prop_assert_eq!(ct_b_p(&sp, p).unwrap(), ct_b_p(&permuted, p).unwrap());
            }
        }
    }
}

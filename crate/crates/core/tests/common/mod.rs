#![allow(dead_code)]

use std::collections::BTreeMap;

use nambu_core::algebroid::lbracket;
use nambu_core::exterior::{lie_form, lie_mv, vector_bracket, SkewTensor, TensorKind};
use nambu_core::{Form, Monomial, MultiIndex, Multivector, NambuStructure, Polynomial, Rational};
use proptest::prelude::*;
use proptest::sample::subsequence;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

/// Seed shared by every property suite; mirrored in the crate manifest.
pub const SEED: u64 = 0x4e616d6275;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn p(text: &str, m: usize) -> Polynomial {
    Polynomial::parse(text, m).unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

/// Sparse polynomials with at most four terms and small exponents.
pub fn poly(m: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..=2, m), rational()), 0..=4).prop_map(move |terms| {
        Polynomial::from_terms(m, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)))
    })
}

/// Polynomials of degree at most one.
pub fn affine(m: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), m + 1).prop_map(move |cs| {
        let mut f = Polynomial::constant(m, cs[0].clone());
        for (i, c) in cs[1..].iter().enumerate() {
            f += &Polynomial::var(m, i + 1).unwrap().scale(c);
        }
        f
    })
}

fn tensor_from<K: TensorKind>(m: usize, k: usize, comps: Vec<(Vec<usize>, Polynomial)>) -> SkewTensor<K> {
    SkewTensor::from_components(
        m,
        k,
        comps.into_iter().map(|(i, c)| (MultiIndex::new(&i, m).unwrap(), c)),
    )
    .unwrap()
}

pub fn tensor<K: TensorKind>(
    m: usize,
    k: usize,
    coeff: BoxedStrategy<Polynomial>,
) -> impl Strategy<Value = SkewTensor<K>> {
    let index = subsequence((1..=m).collect::<Vec<_>>(), k);
    prop::collection::vec((index, coeff), 0..=3).prop_map(move |comps| tensor_from(m, k, comps))
}

pub fn form(m: usize, k: usize) -> impl Strategy<Value = Form> {
    tensor(m, k, poly(m).boxed())
}

pub fn multivector(m: usize, k: usize) -> impl Strategy<Value = Multivector> {
    tensor(m, k, poly(m).boxed())
}

/// Vector fields with affine coefficients keep Lie derivatives cheap.
pub fn vector_field(m: usize) -> impl Strategy<Value = Multivector> {
    tensor(m, 1, affine(m).boxed())
}

/// An arbitrary (not necessarily Nambu) 3-vector on R^4 with affine coefficients.
pub fn ternary_structure() -> impl Strategy<Value = NambuStructure> {
    tensor::<_>(4, 3, affine(4).boxed()).prop_map(|l: Multivector| NambuStructure::new(l).unwrap())
}

/// Sign of the permutation sorting `seq`, or `None` on a repeated entry.
pub fn perm_sign(seq: &[usize]) -> Option<i64> {
    let mut sign = 1;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] == seq[b] {
                return None;
            }
            if seq[a] > seq[b] {
                sign = -sign;
            }
        }
    }
    Some(sign)
}

fn collect<K: TensorKind>(m: usize, k: usize, acc: BTreeMap<Vec<usize>, Polynomial>) -> SkewTensor<K> {
    tensor_from(m, k, acc.into_iter().collect())
}

fn push(acc: &mut BTreeMap<Vec<usize>, Polynomial>, mut idx: Vec<usize>, sign: i64, c: Polynomial) {
    idx.sort_unstable();
    let c = c.scale(&q(sign));
    let m = c.nvars();
    let slot = acc.entry(idx).or_insert_with(|| Polynomial::zero(m));
    *slot = &*slot + &c;
}

/// Wedge product from the permutation definition.
pub fn wedge_oracle<K: TensorKind>(a: &SkewTensor<K>, b: &SkewTensor<K>) -> SkewTensor<K> {
    let m = a.dim();
    let mut acc = BTreeMap::new();
    for (i, x) in a.components() {
        for (j, y) in b.components() {
            let seq: Vec<usize> = i.indices().into_iter().chain(j.indices()).collect();
            if let Some(s) = perm_sign(&seq) {
                push(&mut acc, seq, s, x * y);
            }
        }
    }
    if a.degree() + b.degree() > m {
        return SkewTensor::zero(m, a.degree() + b.degree());
    }
    collect(m, a.degree() + b.degree(), acc)
}

/// `ι_α P` from `(ι_α P)^K = Σ_I sgn(I, K) α_I P^{I ∪ K}`.
pub fn contract_oracle(alpha: &Form, pm: &Multivector) -> Multivector {
    let m = alpha.dim();
    let mut acc = BTreeMap::new();
    for (i, a) in alpha.components() {
        for (j, pj) in pm.components() {
            let (ii, jj) = (i.indices(), j.indices());
            if !ii.iter().all(|x| jj.contains(x)) {
                continue;
            }
            let rest: Vec<usize> = jj.iter().copied().filter(|x| !ii.contains(x)).collect();
            let seq: Vec<usize> = ii.iter().copied().chain(rest.iter().copied()).collect();
            push(&mut acc, rest, perm_sign(&seq).unwrap(), a * pj);
        }
    }
    collect(m, pm.degree() - alpha.degree(), acc)
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn poly_ring_laws() -> Result<(), String> {
    run(256, (poly(3), poly(3), poly(3)), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
        Ok(())
    })
}

fn poly_product_rule() -> Result<(), String> {
    run(256, (poly(3), poly(3), 1usize..=3), |(a, b, i)| {
        let lhs = (&a * &b).diff(i).unwrap();
        let rhs = &(&a.diff(i).unwrap() * &b) + &(&a * &b.diff(i).unwrap());
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

fn poly_mixed_partials() -> Result<(), String> {
    run(256, (poly(4), 1usize..=4, 1usize..=4), |(a, i, j)| {
        prop_assert_eq!(a.diff(i).unwrap().diff(j).unwrap(), a.diff(j).unwrap().diff(i).unwrap());
        Ok(())
    })
}

fn poly_canonical_form() -> Result<(), String> {
    let terms = prop::collection::vec((prop::collection::vec(0u16..=2, 3), rational()), 0..=6);
    run(256, (terms, poly(3)), |(terms, b)| {
        let mono = |(e, c): &(Vec<u16>, Rational)| (Monomial::from_exponents(e), c.clone());
        let fwd = Polynomial::from_terms(3, terms.iter().map(mono));
        let rev = Polynomial::from_terms(3, terms.iter().rev().map(mono));
        prop_assert_eq!(&fwd, &rev);
        prop_assert_eq!(fwd.to_string(), rev.to_string());
        prop_assert_eq!(Polynomial::parse(&fwd.to_string(), 3).unwrap(), fwd.clone());
        let round = &(&fwd + &b) - &b;
        prop_assert_eq!(format!("{round:?}"), format!("{fwd:?}"));
        check(fwd.terms().all(|(_, c)| !c.is_zero()), "zero coefficient stored")?;
        let order: Vec<_> = fwd.terms().map(|(m, _)| m.clone()).collect();
        check(order.windows(2).all(|w| w[0] < w[1]), "terms not strictly increasing")
    })
}

fn poly_evaluation_homomorphism() -> Result<(), String> {
    run(
        256,
        (poly(3), poly(3), prop::collection::vec(rational(), 3)),
        |(a, b, pt)| {
            let (ea, eb) = (a.eval(&pt).unwrap(), b.eval(&pt).unwrap());
            prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).eval(&pt).unwrap(), &ea + &eb);
            Ok(())
        },
    )
}

fn graded_pair() -> impl Strategy<Value = (Form, Form)> {
    (0usize..=2, 0usize..=2).prop_flat_map(|(k, l)| (form(4, k), form(4, l)))
}

fn exterior_graded_commutativity() -> Result<(), String> {
    run(256, graded_pair(), |(a, b)| {
        let sign = if a.degree() * b.degree() % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale_rational(&q(sign)));
        Ok(())
    })
}

fn exterior_wedge_oracle() -> Result<(), String> {
    let triple = (0usize..=2, 0usize..=2, 0usize..=1).prop_flat_map(|(k, l, r)| (form(4, k), form(4, l), form(4, r)));
    run(256, triple, |(a, b, c)| {
        prop_assert_eq!(a.wedge(&b), wedge_oracle(&a, &b));
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        Ok(())
    })
}

fn exterior_d_squared() -> Result<(), String> {
    run(256, (0usize..=3).prop_flat_map(|k| form(4, k)), |w| {
        prop_assert!(w.d().d().is_zero());
        Ok(())
    })
}

fn exterior_d_leibniz() -> Result<(), String> {
    run(256, graded_pair(), |(a, b)| {
        let sign = if a.degree() % 2 == 1 { -1 } else { 1 };
        let rhs = &a.d().wedge(&b) + &a.wedge(&b.d()).scale_rational(&q(sign));
        prop_assert_eq!(a.wedge(&b).d(), rhs);
        Ok(())
    })
}

fn exterior_adjunction() -> Result<(), String> {
    let s = (0usize..=2, 0usize..=2).prop_flat_map(|(a, c)| (form(4, a), form(4, c), multivector(4, a + c)));
    run(256, s, |(alpha, gamma, pm)| {
        let inner = alpha.contract(&pm);
        prop_assert_eq!(&inner, &contract_oracle(&alpha, &pm));
        prop_assert_eq!(gamma.pair(&inner), alpha.wedge(&gamma).pair(&pm));
        Ok(())
    })
}

fn exterior_cartan_naturality() -> Result<(), String> {
    let s = (0usize..=2, 0usize..=1)
        .prop_flat_map(|(k, l)| (vector_field(4), vector_field(4), form(4, k), form(4, l), form(4, k + 1)));
    run(128, s, |(x, y, a, b, w)| {
        let lx = |f: &Form| lie_form(&x, f).unwrap();
        prop_assert_eq!(lx(&a.d()), lx(&a).d());
        prop_assert_eq!(lx(&a.wedge(&b)), &lx(&a).wedge(&b) + &a.wedge(&lx(&b)));
        let xy = vector_bracket(&x, &y).unwrap();
        let lhs = &lx(&y.interior(&w)) - &y.interior(&lx(&w));
        prop_assert_eq!(lhs, xy.interior(&w));
        Ok(())
    })
}

fn exterior_lie_pairing() -> Result<(), String> {
    let s = (1usize..=3).prop_flat_map(|k| (vector_field(4), form(4, k), multivector(4, k)));
    run(128, s, |(x, w, pm)| {
        let lhs = x.apply(&w.pair(&pm));
        let rhs = &lie_form(&x, &w).unwrap().pair(&pm) + &w.pair(&lie_mv(&x, &pm).unwrap());
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

fn exterior_lie_decomposable() -> Result<(), String> {
    let s = (vector_field(4), vector_field(4), vector_field(4), poly(4));
    run(128, s, |(x, y, z, f)| {
        let br = |a: &Multivector, b: &Multivector| vector_bracket(a, b).unwrap();
        let lhs = lie_mv(&x, &y.wedge(&z)).unwrap();
        prop_assert_eq!(lhs, &br(&x, &y).wedge(&z) + &y.wedge(&br(&x, &z)));
        let commutator = &x.apply(&y.apply(&f)) - &y.apply(&x.apply(&f));
        prop_assert_eq!(br(&x, &y).apply(&f), commutator);
        Ok(())
    })
}

fn nambu_bracket_skew() -> Result<(), String> {
    run(128, (ternary_structure(), poly(4), poly(4), poly(4)), |(s, f, g, h)| {
        let b =
            |a: &Polynomial, b: &Polynomial, c: &Polynomial| s.nbracket(&[a.clone(), b.clone(), c.clone()]).unwrap();
        let base = b(&f, &g, &h);
        prop_assert_eq!(-b(&g, &f, &h), base.clone());
        prop_assert_eq!(-b(&f, &h, &g), base.clone());
        prop_assert_eq!(b(&g, &h, &f), base);
        Ok(())
    })
}

fn nambu_bracket_leibniz() -> Result<(), String> {
    run(
        128,
        (ternary_structure(), poly(4), poly(4), poly(4), poly(4)),
        |(s, f, k, g, h)| {
            let b = |a: &Polynomial| s.nbracket(&[a.clone(), g.clone(), h.clone()]).unwrap();
            prop_assert_eq!(b(&(&f * &k)), &(&f * &b(&k)) + &(&k * &b(&f)));
            Ok(())
        },
    )
}

fn nambu_hamiltonian() -> Result<(), String> {
    run(128, (ternary_structure(), poly(4), poly(4), poly(4)), |(s, f, g, h)| {
        let x = s.hamiltonian(&[f.clone(), g.clone()]).unwrap();
        prop_assert_eq!(x.apply(&h), s.nbracket(&[f, g, h]).unwrap());
        Ok(())
    })
}

fn algebroid_bilinearity() -> Result<(), String> {
    let s = (ternary_structure(), form(4, 2), form(4, 2), form(4, 2), rational());
    run(64, s, |(s, a, a2, b, c)| {
        let br = |x: &Form, y: &Form| lbracket(&s, x, y).unwrap();
        prop_assert_eq!(br(&(&a + &a2), &b), &br(&a, &b) + &br(&a2, &b));
        prop_assert_eq!(br(&b, &(&a + &a2)), &br(&b, &a) + &br(&b, &a2));
        prop_assert_eq!(br(&a.scale_rational(&c), &b), br(&a, &b).scale_rational(&c));
        prop_assert_eq!(br(&a, &b.scale_rational(&c)), br(&a, &b).scale_rational(&c));
        Ok(())
    })
}

fn algebroid_module_axiom() -> Result<(), String> {
    run(
        64,
        (ternary_structure(), form(4, 2), form(4, 2), poly(4)),
        |(s, a, b, f)| {
            let lhs = lbracket(&s, &a, &b.scale(&f)).unwrap();
            let anchor = s.sharp(&a).unwrap().apply(&f);
            let rhs = &lbracket(&s, &a, &b).unwrap().scale(&f) + &b.scale(&anchor);
            prop_assert_eq!(lhs, rhs);
            Ok(())
        },
    )
}

pub type Suite = (&'static str, fn() -> Result<(), String>);

pub const SUITES: &[Suite] = &[
    ("poly-ring-laws", poly_ring_laws),
    ("poly-product-rule", poly_product_rule),
    ("poly-mixed-partials", poly_mixed_partials),
    ("poly-canonical-form", poly_canonical_form),
    ("poly-evaluation-homomorphism", poly_evaluation_homomorphism),
    ("exterior-graded-commutativity", exterior_graded_commutativity),
    ("exterior-wedge-oracle", exterior_wedge_oracle),
    ("exterior-d-squared", exterior_d_squared),
    ("exterior-d-leibniz", exterior_d_leibniz),
    ("exterior-adjunction", exterior_adjunction),
    ("exterior-cartan-naturality", exterior_cartan_naturality),
    ("exterior-lie-pairing", exterior_lie_pairing),
    ("exterior-lie-decomposable", exterior_lie_decomposable),
    ("nambu-bracket-skew", nambu_bracket_skew),
    ("nambu-bracket-leibniz", nambu_bracket_leibniz),
    ("nambu-hamiltonian", nambu_hamiltonian),
    ("algebroid-bilinearity", algebroid_bilinearity),
    ("algebroid-module-axiom", algebroid_module_axiom),
];

pub fn suite(name: &str) -> Result<(), String> {
    let (_, f) = SUITES.iter().find(|(n, _)| *n == name).expect("known suite");
    f()
}

use hopf_cyclic::actions::{yd_condition, yd_condition_alt, yd_perturbation_suite};
use hopf_cyclic::catalog::{self_yd_algebras, sign_line, sign_line_braided};
use hopf_cyclic::rewrite::{podles_action, podles_sphere, uq_su2, NCPoly, Presentation};
use hopf_cyclic::scalar::{LaurentFrac, LaurentPoly, Rational};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..30).prop_map(|(n, d)| Rational::new(n, d))
}

/// Includes values past the machine-word range.
fn big_rat() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..i64::MAX, rat()).prop_map(|(n, d, r)| &(&Rational::new(n, d) * &Rational::new(n, 7)) + &r)
}

fn lpoly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..4, -4i64..5), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, Rational::from(c)))))
}

fn nonzero_lpoly() -> impl Strategy<Value = LaurentPoly> {
    lpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn frac() -> impl Strategy<Value = LaurentFrac> {
    (lpoly(), nonzero_lpoly()).prop_map(|(n, d)| LaurentFrac::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn rational_field_axioms(x in big_rat(), y in big_rat(), z in big_rat()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if let Some(inv) = x.recip() {
            prop_assert_eq!(&x * &inv, Rational::from(1));
        }
    }

    #[test]
    fn laurent_field_axioms(x in frac(), y in frac(), z in frac()) {
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_agrees_with_cross_multiplication(n1 in lpoly(), d1 in nonzero_lpoly(), n2 in lpoly(), d2 in nonzero_lpoly(), k in -2i64..3) {
        let a = LaurentFrac::new(n1.clone(), d1.clone()).unwrap();
        // a shifted and rescaled copy of (n1, d1) half the time
        let (n2, d2) = if k == 0 { (n1.shift(1).scale(&Rational::new(-3, 2)), d1.shift(1).scale(&Rational::new(-3, 2))) } else { (n2, d2) };
        let b = LaurentFrac::new(n2.clone(), d2.clone()).unwrap();
        prop_assert_eq!(a == b, n1.mul(&d2) == n2.mul(&d1));
    }

    #[test]
    fn rational_canonical_form(n1 in -50i64..50, d1 in 1i64..50, n2 in -50i64..50, d2 in 1i64..50) {
        prop_assert_eq!(Rational::new(n1, d1) == Rational::new(n2, d2), n1 * d2 == n2 * d1);
    }
}

fn word(ngens: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..ngens, 0..=max_len)
}

fn small_poly(ngens: u8) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(ngens, 3), -2i64..3, -2i64..3), 1..4).prop_map(|ts| {
        NCPoly::from_terms(ts.into_iter().map(|(w, c, e)| (w, LaurentFrac::monomial(Rational::from(c), e))))
    })
}

fn multiplicative(p: &Presentation, x: &NCPoly, y: &NCPoly) -> bool {
    p.nf(&p.nf(x).concat(&p.nf(y))) == p.nf(&x.concat(y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_multiplicative_on_uq(x in small_poly(4), y in small_poly(4)) {
        let h = uq_su2();
        prop_assert!(multiplicative(h.presentation(), &x, &y));
    }

    #[test]
    fn normal_form_is_multiplicative_on_podles(x in small_poly(3), y in small_poly(3)) {
        prop_assert!(multiplicative(&podles_sphere(), &x, &y));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn module_law_on_words(h in word(4, 2), h2 in word(4, 1), x in word(3, 3)) {
        let hopf = uq_su2();
        let alg = podles_sphere();
        let act = podles_action();
        let one = LaurentFrac::one();
        let hp = NCPoly::monomial(h.clone(), one.clone());
        let hp2 = NCPoly::monomial(h2.clone(), one.clone());
        let xp = NCPoly::monomial(x, one);
        let whole = act.apply(&hopf, &alg, &hp.concat(&hp2), &xp).unwrap();
        let inner = act.apply(&hopf, &alg, &hp2, &xp).unwrap();
        let nested = act.apply(&hopf, &alg, &hp, &inner).unwrap();
        prop_assert_eq!(whole, nested);
    }
}

#[test]
fn fifty_seeded_perturbations_agree() {
    let mut pool = self_yd_algebras();
    pool.push(sign_line());
    pool.push(sign_line_braided());
    for seed in [0, 7, 2024] {
        let r = yd_perturbation_suite(&pool, 50, seed);
        assert_eq!(r.checks.len(), 50);
        assert!(r.all_pass(), "{r}");
    }
    // same seed, same report
    assert_eq!(yd_perturbation_suite(&pool, 50, 3), yd_perturbation_suite(&pool, 50, 3));
}

#[test]
fn catalog_yd_verdicts_agree() {
    let mut pool = self_yd_algebras();
    pool.push(sign_line());
    pool.push(sign_line_braided());
    for a in &pool {
        let co = a.coaction.as_ref().unwrap();
        let v9 = yd_condition(&a.hopf, &a.algebra, &a.action, co);
        let v11 = yd_condition_alt(&a.hopf, &a.algebra, &a.action, co);
        assert!(v9.is_none() && v11.is_none(), "{}", a.name);
    }
}

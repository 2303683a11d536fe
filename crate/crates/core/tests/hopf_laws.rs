use hopf_cyclic::catalog::{kc2, kc3, ks3, sweedler_h4};
use hopf_cyclic::hopf::Elem;

#[test]
fn catalog_hopf_algebras_pass_the_axioms() {
    for h in [kc2(), kc3(), ks3(), sweedler_h4()] {
        let r = h.verify_hopf_axioms();
        assert!(r.all_pass(), "{r}");
    }
}

#[test]
fn iterated_coproduct_is_independent_of_bracketing() {
    for h in [kc2(), kc3(), ks3(), sweedler_h4()] {
        for n in 1..=4 {
            for i in 0..h.dim() {
                let want = h.coproduct_iter(&Elem::unit(i), n).unwrap();
                for (k, t) in h.coproduct_all_bracketings(i, n).into_iter().enumerate() {
                    assert_eq!(t, want, "{} basis {i}, n = {n}, bracketing {k}", h.name());
                }
            }
        }
    }
}

#[test]
fn cocommutativity_separates_group_algebras_from_h4() {
    for h in [kc2(), kc3(), ks3()] {
        assert!(h.is_cocommutative().is_none(), "{}", h.name());
    }
    let w = sweedler_h4().is_cocommutative().expect("H4 is not cocommutative");
    assert_eq!(w.witness, "x");
}

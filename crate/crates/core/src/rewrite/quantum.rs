//! U_q(su_2), the Podleś sphere and the action of one on the other.

use std::collections::HashMap;

use super::symbolic::{GeneratorAction, PresentedRep, SymbolicHopf, TensorPoly};
use super::{NCPoly, Presentation, Rule};
use crate::linalg::Mat;
use crate::scalar::LaurentFrac;

/// Generator indices of U_q(su_2), in monomial order.
pub mod uq {
    pub const KINV: u8 = 0;
    pub const K: u8 = 1;
    pub const E: u8 = 2;
    pub const F: u8 = 3;
}

/// Generator indices of the Podleś sphere, in monomial order.
pub mod podles {
    pub const B: u8 = 0;
    pub const A: u8 = 1;
    pub const ASTAR: u8 = 2;
}

type L = LaurentFrac;

fn qh(half: i64) -> L {
    L::q_half_pow(half)
}

fn c(n: i64) -> L {
    L::from_i64(n)
}

fn mono(w: &[u8], coef: L) -> NCPoly {
    NCPoly::monomial(w.to_vec(), coef)
}

fn poly(terms: &[(&[u8], L)]) -> NCPoly {
    NCPoly::from_terms(terms.iter().map(|(w, c)| (w.to_vec(), c.clone())))
}

fn t2(terms: &[(&[u8], &[u8])]) -> TensorPoly {
    let mut t = TensorPoly::zero(2);
    for (a, b) in terms {
        t.add_term(vec![a.to_vec(), b.to_vec()], &L::one());
    }
    t
}

/// U_q(su_2) with PBW normal form `K^l E^i F^j` (negative `l` written with `K^-1`).
pub fn uq_su2() -> SymbolicHopf {
    use uq::*;
    let q = qh(2);
    let qi = qh(-2);
    // (K^2 - K^-2)/(q - q^-1)
    let denom = q.sub(&qi).inv().expect("q - q^-1 is nonzero");
    let rules = vec![
        Rule { lhs: vec![K, KINV], rhs: NCPoly::one() },
        Rule { lhs: vec![KINV, K], rhs: NCPoly::one() },
        Rule { lhs: vec![E, K], rhs: mono(&[K, E], qi.clone()) },
        Rule { lhs: vec![F, K], rhs: mono(&[K, F], q.clone()) },
        Rule { lhs: vec![E, KINV], rhs: mono(&[KINV, E], q.clone()) },
        Rule { lhs: vec![F, KINV], rhs: mono(&[KINV, F], qi.clone()) },
        Rule {
            lhs: vec![F, E],
            rhs: poly(&[(&[E, F], L::one()), (&[K, K], denom.neg()), (&[KINV, KINV], denom.clone())]),
        },
    ];
    let pres = Presentation::new("U_q(su_2)", vec!["K^-1".into(), "K".into(), "E".into(), "F".into()], rules)
        .expect("U_q(su_2) rules decrease");
    let delta = vec![
        t2(&[(&[KINV], &[KINV])]),
        t2(&[(&[K], &[K])]),
        t2(&[(&[E], &[K]), (&[KINV], &[E])]),
        t2(&[(&[F], &[K]), (&[KINV], &[F])]),
    ];
    let counit = vec![L::one(), L::one(), L::zero(), L::zero()];
    let antipode = vec![NCPoly::gen(K), NCPoly::gen(KINV), mono(&[E], q.neg()), mono(&[F], qi.neg())];
    let antipode_inv = vec![NCPoly::gen(K), NCPoly::gen(KINV), mono(&[E], qi.neg()), mono(&[F], q.neg())];
    SymbolicHopf::new(pres, delta, counit, antipode, antipode_inv).expect("shapes agree")
}

/// The equator Podleś sphere; normal monomials are `b^i a^j` and `b^i (a*)^k`.
pub fn podles_sphere() -> Presentation {
    use podles::*;
    let rules = vec![
        Rule { lhs: vec![A, ASTAR], rhs: poly(&[(&[], L::one()), (&[B, B], qh(-8).neg())]) },
        Rule { lhs: vec![ASTAR, A], rhs: poly(&[(&[], L::one()), (&[B, B], c(-1))]) },
        Rule { lhs: vec![A, B], rhs: mono(&[B, A], qh(-4)) },
        Rule { lhs: vec![ASTAR, B], rhs: mono(&[B, ASTAR], qh(4)) },
    ];
    Presentation::new("S^2_q", vec!["b".into(), "a".into(), "a*".into()], rules).expect("Podleś rules decrease")
}

/// Generator table of the U_q(su_2)-action on the Podleś sphere.
pub fn podles_action() -> GeneratorAction {
    use podles::*;
    use uq::*;
    let mut t = HashMap::new();
    t.insert((K, A), mono(&[A], qh(2)));
    t.insert((K, ASTAR), mono(&[ASTAR], qh(-2)));
    t.insert((K, B), mono(&[B], L::one()));
    t.insert((KINV, A), mono(&[A], qh(-2)));
    t.insert((KINV, ASTAR), mono(&[ASTAR], qh(2)));
    t.insert((KINV, B), mono(&[B], L::one()));
    t.insert((E, B), mono(&[A], qh(5)));
    t.insert((E, ASTAR), mono(&[B], qh(3).mul(&L::one().add(&qh(-4))).neg()));
    t.insert((E, A), NCPoly::zero());
    t.insert((F, A), mono(&[B], qh(-7).mul(&L::one().add(&qh(4)))));
    t.insert((F, B), mono(&[ASTAR], qh(-1).neg()));
    t.insert((F, ASTAR), NCPoly::zero());
    GeneratorAction::new(t)
}

/// The two-dimensional representation `E = E_21`, `F = E_12`, `K = diag(q^{-1/2}, q^{1/2})`.
pub fn rep2_uq() -> PresentedRep {
    let z = L::zero;
    let o = L::one;
    let kinv = Mat::diag(vec![qh(1), qh(-1)]);
    let k = Mat::diag(vec![qh(-1), qh(1)]);
    let e = Mat::from_rows(vec![vec![z(), z()], vec![o(), z()]]);
    let f = Mat::from_rows(vec![vec![z(), o()], vec![z(), z()]]);
    PresentedRep::new(2, vec![kinv, k, e, f]).expect("2×2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn fe_rewrites_to_pbw_form() {
        let h = uq_su2();
        let p = h.presentation();
        let x = p.nf(&NCPoly::monomial(vec![uq::F, uq::E], L::one()));
        assert_eq!(x.coeff(&[uq::E, uq::F]), L::one());
        let d = qh(2).sub(&qh(-2));
        assert_eq!(x.coeff(&[uq::K, uq::K]).times(&d), c(-1));
        assert_eq!(x.coeff(&[uq::KINV, uq::KINV]).times(&d), c(1));
    }

    #[test]
    fn podles_two_step_reduction() {
        use podles::*;
        let p = podles_sphere();
        let x = p.nf(&mono(&[A, B, ASTAR], L::one()));
        let want = poly(&[(&[B], qh(-4)), (&[B, B, B], qh(-12).neg())]);
        assert_eq!(x, want);
        assert_eq!(p.nf(&mono(&[ASTAR, A], L::one())), poly(&[(&[], L::one()), (&[B, B], c(-1))]));
    }

    #[test]
    fn both_presentations_are_confluent() {
        let u = uq_su2().presentation().check_confluence(6);
        assert!(u.all_pass(), "{u}");
        let s = podles_sphere().check_confluence(6);
        assert!(s.all_pass(), "{s}");
    }

    #[test]
    fn hopf_axioms_on_generators() {
        let r = uq_su2().verify_axioms();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn second_coproduct_of_f() {
        use uq::*;
        let h = uq_su2();
        let d = h.coproduct(&NCPoly::gen(F), 2);
        let mut want = TensorPoly::zero(3);
        want.add_term(vec![vec![F], vec![K], vec![K]], &L::one());
        want.add_term(vec![vec![KINV], vec![F], vec![K]], &L::one());
        want.add_term(vec![vec![KINV], vec![KINV], vec![F]], &L::one());
        assert_eq!(d, want);
        assert_eq!(h.coproduct(&NCPoly::one(), 1), TensorPoly::one(2));
    }

    #[test]
    fn action_table_and_well_definedness() {
        use podles::*;
        let h = uq_su2();
        let p = podles_sphere();
        let act = podles_action();
        let k_a = act.apply(&h, &p, &NCPoly::gen(uq::K), &NCPoly::gen(A)).unwrap();
        assert_eq!(k_a, mono(&[A], qh(2)));
        let e_b = act.apply(&h, &p, &NCPoly::gen(uq::E), &NCPoly::gen(B)).unwrap();
        assert_eq!(e_b, mono(&[A], qh(5)));
        assert!(act.apply(&h, &p, &NCPoly::gen(uq::F), &NCPoly::gen(ASTAR)).unwrap().is_zero());
        let one = act.apply(&h, &p, &NCPoly::gen(uq::K), &NCPoly::one()).unwrap();
        assert_eq!(one, NCPoly::one());
        let r = act.verify_well_defined(&h, &p);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn representation_satisfies_relations() {
        let h = uq_su2();
        let rep = rep2_uq();
        let r = rep.verify(h.presentation());
        assert!(r.all_pass(), "{r}");
        let comm = rep.eval_word(&[uq::E, uq::F]).sub(&rep.eval_word(&[uq::F, uq::E]));
        assert_eq!(comm, Mat::diag(vec![c(-1), c(1)]));
    }
}

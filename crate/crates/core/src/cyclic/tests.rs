use std::sync::Arc;

use super::*;
use crate::actions::{FinAlgebra, HAlgebra};
use crate::catalog::{kc2, kc3, ks3, sign_line, sign_line_algebra, sweedler_h4};
use crate::hopf::Elem;
use crate::linalg::SVec;
use crate::scalar::Rational;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn assert_pass(rep: &Report) {
    assert!(rep.all_pass(), "{rep}");
}

fn h4_adjoint() -> HAlgebra {
    HAlgebra::adjoint(sweedler_h4()).unwrap()
}

#[test]
fn sign_line_is_cocyclic_through_degree_three() {
    assert_pass(&equivariant_complex(&sign_line()).verify(3, true));
}

#[test]
fn h4_adjoint_is_cocyclic_through_degree_two() {
    assert_pass(&equivariant_complex(&h4_adjoint()).verify(2, true));
}

#[test]
fn t_without_antipode_breaks_periodicity() {
    let m = EquivariantModule::from_halgebra(&h4_adjoint()).mutated(Mutation::NoAntipode);
    let rep = Complex::new(m).verify(2, true);
    let bad = rep.checks.iter().find(|c| c.identity == "τ^{n+1} = id" && !c.passed());
    let bad = bad.unwrap_or_else(|| panic!("{rep}"));
    assert!(bad.witness.as_ref().unwrap().contains("basis cochain"));
}

#[test]
fn sign_action_on_degree_zero_cochain() {
    let m = EquivariantModule::from_halgebra(&sign_line());
    // f(y)(1) = 1, all other values 0
    let f = Cochain::new(0, SVec::unit(2));
    let gf = m.cochain_action(&Elem::unit(1), &f);
    assert_eq!(gf.data, SVec::single(2, q(-1)));
    assert_eq!(m.cochain_action(&Elem::unit(0), &f), f);
}

#[test]
fn cochain_action_composes_in_reverse() {
    let a = h4_adjoint();
    let m = EquivariantModule::from_halgebra(&a);
    let h = &a.hopf;
    let f = Cochain::new(1, SVec::from_unsorted((0..m.dim(1)).map(|i| (i, q(i as i64 % 5 - 2))).collect()));
    for i in 0..4 {
        for j in 0..4 {
            let l = m.cochain_action(h.mul_basis(i, j), &f);
            let r = m.cochain_action(&Elem::unit(j), &m.cochain_action(&Elem::unit(i), &f));
            assert_eq!(l, r, "({i}, {j})");
        }
    }
}

#[test]
fn equivariant_basis_is_equivariant() {
    let a = sign_line();
    let m = EquivariantModule::from_halgebra(&a);
    for n in 0..3 {
        for f in equivariant_basis(&a, n) {
            assert_pass(&m.is_equivariant(&f));
        }
    }
    assert_pass(&m.is_equivariant(&Cochain::zero(2)));
    let bad = Cochain::new(0, SVec::unit(2));
    let rep = m.is_equivariant(&bad);
    assert!(!rep.all_pass());
}

#[test]
fn r_of_h_dimensions() {
    assert_eq!(r_of_h(&kc2()).unwrap().len(), 2);
    assert_eq!(r_of_h(&kc3()).unwrap().len(), 3);
    assert_eq!(r_of_h(&ks3()).unwrap().len(), 3);
    assert_pass(&verify_r_of_h(&sweedler_h4()));
    assert!(r_of_h(&sweedler_h4()).is_ok());
}

#[test]
fn trivial_action_dimension_law() {
    for h in [kc2(), kc3(), sweedler_h4()] {
        let a = HAlgebra::trivial(h.clone(), sign_line_algebra()).unwrap();
        let c = equivariant_complex(&a);
        let r = r_of_h(&h).unwrap().len();
        for n in 0..=3 {
            assert_eq!(c.space(n, false).dim(), 2usize.pow(n as u32 + 1) * r, "{} n={n}", h.name());
        }
    }
}

#[test]
fn mixed_complex_identities() {
    assert_pass(&equivariant_complex(&sign_line()).verify_mixed(3));
    assert_pass(&equivariant_complex(&h4_adjoint()).verify_mixed(2));
    assert_pass(&std_cyclic_ops(&sign_line_algebra()).verify_mixed(3));
}

#[test]
fn degree_zero_b_is_a_commutator() {
    let m = crate::catalog::ks3();
    let alg = FinAlgebra::from_hopf(&m);
    let c = std_cyclic_ops(&alg);
    let d = alg.dim();
    // f = δ_{(12)} on C^0
    let f = Cochain::new(0, SVec::unit(1));
    let bf = c.hochschild_b(&f);
    for x in 0..d {
        for y in 0..d {
            let expect = alg.mul_basis(x, y).get(1) - alg.mul_basis(y, x).get(1);
            assert_eq!(bf.data.get(x * d + y), expect);
        }
    }
}

#[test]
fn point_cohomology() {
    let k = FinAlgebra::ground();
    let c = std_cyclic_ops(&k);
    let dims = c.cohomology_dims(3).unwrap();
    assert_eq!(dims.hc, vec![1, 0, 1, 0]);
    assert_eq!(dims.hh, vec![1, 0, 0, 0]);
}

#[test]
fn trivial_kc2_on_point_gives_r_of_h() {
    let a = HAlgebra::trivial(kc2(), FinAlgebra::ground()).unwrap();
    let dims = equivariant_complex(&a).cohomology_dims(2).unwrap();
    assert_eq!(dims.hc[0], r_of_h(&kc2()).unwrap().len());
    assert_eq!(dims.hc, vec![2, 0, 2]);
}

#[test]
fn bicomplex_matches_connes_complex() {
    for a in [sign_line(), h4_adjoint()] {
        let c = equivariant_complex(&a);
        let n = if a.dim() > 2 { 1 } else { 2 };
        assert_eq!(c.cyclic_dims(n).unwrap(), c.connes_dims(n), "{}", a.name);
    }
}

#[test]
fn phi_is_a_cocyclic_map() {
    assert_pass(&verify_phi(&sign_line(), 2).unwrap());
    assert_pass(&verify_phi(&h4_adjoint(), 1).unwrap());
}

#[test]
fn phi_degree_zero_by_hand() {
    let a = sign_line();
    let x = Crossed::new(&a).unwrap();
    let phi = x.phi(0);
    // φ₀f(a⊗g) = f(S⁻¹(g)·a)(g) for group-like g; crossed basis index a*2 + g
    for a_ in 0..2 {
        for g in 0..2 {
            let sign = if a_ == 1 && g == 1 { -1 } else { 1 };
            assert_eq!(phi.row(a_ * 2 + g), &SVec::single(a_ * 2 + g, q(sign)));
        }
    }
}

#[test]
fn phi_over_trivial_hopf_is_reindexing() {
    let a = HAlgebra::trivial(crate::cyclic::ground_hopf(), sign_line_algebra()).unwrap();
    let x = Crossed::new(&a).unwrap();
    for n in 0..3 {
        assert_eq!(x.phi(n), LinOp::identity(2usize.pow(n as u32 + 1)));
    }
}

#[test]
fn cylindrical_module_of_sign_line() {
    let x = Arc::new(Crossed::new(&sign_line()).unwrap());
    assert_pass(&verify_cylindrical(&x, 2, 2));
    assert_pass(&verify_diagonal(&x, 2));
}

#[test]
fn cylindrical_module_of_h4() {
    let x = Arc::new(Crossed::new(&h4_adjoint()).unwrap());
    assert_pass(&verify_cylindrical(&x, 1, 1));
    assert_pass(&verify_diagonal(&x, 1));
}

#[test]
fn swapped_cylindricity_exponents_hold_only_on_the_diagonal() {
    let x = Crossed::new(&sign_line()).unwrap();
    assert!(cylindricity_swapped(&x, 1, 1).is_none());
    assert!(cylindricity_swapped(&x, 1, 0).is_some());
    assert!(cylindricity_swapped(&x, 0, 2).is_some());
}

#[test]
fn vertical_operator_without_action_breaks_cylindricity() {
    let x = Arc::new(Crossed::new(&sign_line()).unwrap().without_vertical_action());
    let rep = verify_cylindrical(&x, 1, 1);
    let c = rep.find("τ^{p+1}τ̄^{q+1} = id at (p, q) = (1, 1)").unwrap();
    assert!(!c.passed());
    assert!(c.witness.is_some());
}

fn sign_theta() -> Vec<Elem> {
    vec![Elem::unit(0), Elem::single(1, q(-1))]
}

#[test]
fn theta_twisted_sign_line() {
    let c = theta_twisted_ops(&sign_line_algebra(), sign_theta(), 1).unwrap();
    assert_pass(&c.verify(3, true));
    // t f(a₀, a₁) = f(θa₁, a₀)
    let t = c.tau(1);
    assert_eq!(t.row(1), &SVec::single(2, q(-1)));
    assert_eq!(t.row(2), &SVec::unit(1));
    assert_pass(&theta_twisted_ops(&sign_line_algebra(), sign_theta(), -3).unwrap().verify(2, true));
}

#[test]
fn theta_identity_gives_ordinary_operators() {
    let alg = sign_line_algebra();
    let c = theta_twisted_ops(&alg, vec![Elem::unit(0), Elem::unit(1)], 0).unwrap();
    let s = std_cyclic_ops(&alg);
    for n in 0..3 {
        assert_eq!(*c.tau(n), *s.tau(n));
        for i in 0..=n {
            if n > 0 {
                assert_eq!(*c.face(n, i).unwrap(), *s.face(n, i).unwrap());
            }
            assert_eq!(*c.degen(n, i).unwrap(), *s.degen(n, i).unwrap());
        }
    }
}

#[test]
fn theta_must_be_an_automorphism() {
    let alg = sign_line_algebra();
    assert!(theta_twisted_ops(&alg, vec![Elem::unit(0), Elem::unit(0)], 1).is_err());
    assert!(theta_twisted_ops(&alg, vec![Elem::unit(0), Elem::single(1, q(2))], 1).is_err());
}

#[test]
fn matrix_trace_is_a_cocyclic_map() {
    let t = MatrixTrace::new(&sign_line(), 2).unwrap();
    assert_pass(&t.verify(2));
    let one = MatrixTrace::new(&sign_line(), 1).unwrap();
    for n in 0..3 {
        assert_eq!(one.op(n), LinOp::identity(one.source().dim(n)));
    }
    // f(1)(1) = 1; (tr f)(1⊗E11)(1) = 1 and (tr f)(1⊗E12)(1) = 0
    let f = Cochain::new(0, SVec::unit(0));
    let tf = matrix_trace_cochain(&sign_line(), &f, 2).unwrap();
    assert_eq!(tf.data.get(0), q(1));
    assert_eq!(tf.data.get(2), q(0));
    assert!(matrix_trace_cochain(&sign_line(), &Cochain::new(0, SVec::unit(2)), 2).is_err());
}

#[test]
fn morita_invariance_of_cyclic_dimensions() {
    let a = sign_line();
    let t = MatrixTrace::new(&a, 2).unwrap();
    let lhs = t.source().cyclic_dims(1).unwrap();
    let rhs = t.target().cyclic_dims(1).unwrap();
    assert_eq!(lhs, rhs);
}

use std::sync::Arc;

use super::*;
use crate::actions::{HAlgebra, Representation};
use crate::catalog::{kc2, regular_kc2, sign_line, sign_line_braided, sign_line_idempotent_entries, sweedler_h4};
use crate::cyclic::{ground_hopf, Cochain, LinOp, MatrixTrace};
use crate::hopf::Elem;
use crate::linalg::{Mat, SVec};
use crate::scalar::Rational;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn m2(a: i64, b: i64, c: i64, d: i64) -> Mat {
    Mat::from_rows(vec![vec![q(a), q(b)], vec![q(c), q(d)]])
}

fn assert_pass(rep: &Report) {
    assert!(rep.all_pass(), "{rep}");
}

fn diag_alg() -> Arc<MatrixAlgebra> {
    MatrixAlgebra::new(&sign_line(), &regular_kc2(), Structure::Diagonal).unwrap()
}

fn sign_e() -> MatrixAlgElem {
    diag_alg().from_entries(&sign_line_idempotent_entries()).unwrap()
}

fn braided_alg(tag: Structure) -> Arc<MatrixAlgebra> {
    MatrixAlgebra::new(&sign_line_braided(), &regular_kc2(), tag).unwrap()
}

/// `½(1 ⊗ 1 + y ⊗ J)` with `J² = −1` and `gJg = −J`.
fn braided_e() -> MatrixAlgElem {
    let h = Rational::new(1, 2);
    braided_alg(Structure::Diagonal).from_entries(&[(0, Mat::identity(2).scale(&h)), (1, m2(0, 1, -1, 0).scale(&h))]).unwrap()
}

fn h4_rep2() -> Representation {
    let h = sweedler_h4();
    Representation::new(&h, "V2", vec![Mat::identity(2), m2(1, 0, 0, -1), m2(0, 0, 1, 0), m2(0, 0, -1, 0)]).unwrap()
}

fn invertible_u() -> MatrixAlgElem {
    diag_alg().from_entries(&[(0, m2(2, 1, 1, 2))]).unwrap()
}

#[test]
fn catalog_idempotent_is_invariant() {
    let e = sign_e();
    assert_pass(&e.is_invariant());
    assert_pass(&e.is_idempotent());
    let yd = diag_alg().from_entries(&[(1, m2(1, 0, 0, -1))]).unwrap();
    assert_pass(&yd.is_invariant());
    for x in [diag_alg().zero(), diag_alg().one()] {
        assert_pass(&x.is_invariant());
        assert_pass(&x.is_idempotent());
    }
    assert_eq!(e.entry(0, 0), SVec::from_dense(&[Rational::new(1, 2), Rational::new(1, 2)]));
    assert_eq!(e.entry(0, 1), SVec::new());
    let bad = diag_alg().from_entries(&[(1, Mat::identity(2))]).unwrap();
    let rep = bad.is_invariant();
    assert_eq!(rep.checks[0].witness.as_deref(), Some("g"));
    assert_pass(&braided_e().is_invariant());
    assert_pass(&braided_e().is_idempotent());
}

#[test]
fn direct_sums() {
    let e = sign_e();
    let z = e.direct_sum(&diag_alg().zero()).unwrap();
    assert_eq!(z.size(), 4);
    assert_pass(&z.is_invariant());
    assert_pass(&z.is_idempotent());
    let one = diag_alg().one();
    let big = one.direct_sum(&one).unwrap();
    assert_eq!(big, big.algebra().one());
    let other = MatrixAlgebra::new(&sign_line(), &regular_kc2(), Structure::NonDiagonal).unwrap();
    assert!(e.direct_sum(&other.zero()).is_err());
}

#[test]
fn murray_von_neumann_certificates() {
    let e = sign_e();
    let a = diag_alg();
    let vv = a.sum(&a).unwrap();
    let g1 = e.embed(&vv, 2, 0).unwrap();
    let g2 = e.embed(&vv, 0, 2).unwrap();
    assert_pass(&verify_mvn(&e, &e, &g1, &g2).unwrap());
    // e against e ⊕ 0
    let ez = e.direct_sum(&a.zero()).unwrap();
    let big = a.sum(ez.algebra()).unwrap();
    let g1 = e.embed(&big, 2, 0).unwrap();
    let g2 = e.embed(&big, 0, 2).unwrap();
    assert_pass(&verify_mvn(&e, &ez, &g1, &g2).unwrap());
    // a certificate in the wrong block
    let rep = verify_mvn(&e, &e, &e.embed(&vv, 0, 0).unwrap(), &g2_of(&e, &vv)).unwrap();
    assert!(!rep.find("γ₁ ∈ A ⊗ Hom(V, W)").unwrap().passed());
}

fn g2_of(e: &MatrixAlgElem, vv: &Arc<MatrixAlgebra>) -> MatrixAlgElem {
    e.embed(vv, 0, 2).unwrap()
}

#[test]
fn similarity_certificates() {
    let e = sign_e();
    let g = invertible_u();
    let gi = g.inverse().unwrap();
    let e2 = g.mul(&e).unwrap().mul(&gi).unwrap();
    assert_ne!(e2, e);
    assert_pass(&verify_similarity(&e, &e2, &g, &gi).unwrap());
    let bad = diag_alg().from_entries(&[(0, Mat::diag(vec![q(1), q(2)]))]).unwrap();
    let bad_inv = bad.inverse().unwrap();
    let e3 = bad.mul(&e).unwrap().mul(&bad_inv).unwrap();
    let rep = verify_similarity(&e, &e3, &bad, &bad_inv).unwrap();
    let c = rep.find("γ is invariant").unwrap();
    assert!(!c.passed());
    assert_eq!(c.witness.as_deref(), Some("g"));
}

#[test]
fn k0_registry_merges_certified_classes() {
    let e = sign_e();
    let a = diag_alg();
    let g = invertible_u();
    let gi = g.inverse().unwrap();
    let e2 = g.mul(&e).unwrap().mul(&gi).unwrap();
    let mut k = K0Registry::new();
    let i = k.register("e", e.clone()).unwrap();
    let j = k.register("γeγ⁻¹", e2).unwrap();
    let z = k.register("e⊕0", e.pad(&regular_kc2()).unwrap()).unwrap();
    let one = k.register("1", a.one()).unwrap();
    assert!(k.register("y", a.from_entries(&[(1, Mat::identity(2))]).unwrap()).is_err());
    assert!(!k.same_class(i, j));
    assert_pass(&k.relate(i, j, Certificate::Similar { g, g_inv: gi }).unwrap());
    assert_pass(&k.relate(i, z, Certificate::ZeroPadding { w: regular_kc2() }).unwrap());
    let rep = k.relate(i, one, Certificate::ZeroPadding { w: regular_kc2() }).unwrap();
    assert!(!rep.all_pass());
    assert!(k.same_class(j, z));
    assert!(!k.same_class(i, one));
    assert_eq!(k.classes(), vec![vec!["e".to_string(), "γeγ⁻¹".into(), "e⊕0".into()], vec!["1".into()]]);
}

#[test]
fn invariant_functional_dimensions() {
    assert_eq!(invariant_functionals(&ground_hopf()).unwrap().dim(), 1);
    let r = invariant_functionals(&kc2()).unwrap();
    assert_eq!(r.dim(), 2);
    assert!(r.contains(&SVec::single(1, q(3))));
    let h4 = invariant_functionals(&sweedler_h4()).unwrap();
    assert!(h4.dim() < 4);
}

#[test]
fn psi_is_an_equivariant_cocyclic_map() {
    for a in [sign_line(), sign_line_braided()] {
        let t = PsiTrace::new(&a, &regular_kc2()).unwrap();
        assert_pass(&t.verify(2));
        assert_pass(&t.verify_beta(2));
    }
    let h4 = HAlgebra::self_yd(sweedler_h4()).unwrap();
    let t = PsiTrace::new(&h4, &h4_rep2()).unwrap();
    assert_pass(&t.verify(1));
    assert_pass(&t.verify_beta(1));
}

#[test]
fn psi_with_trivial_representation_is_the_matrix_trace() {
    let a = sign_line();
    let v = Representation::trivial(&a.hopf, 2);
    let t = PsiTrace::new(&a, &v).unwrap();
    let m = MatrixTrace::new(&a, 2).unwrap();
    for n in 0..3 {
        assert_eq!(t.op(n), m.op(n), "n = {n}");
    }
}

/// `tr(m₀ m₁ ⋯)` for 2×2 integer matrices.
fn tr2(ms: &[[[i64; 2]; 2]]) -> i64 {
    let mut acc = [[1, 0], [0, 1]];
    for m in ms {
        let mut next = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                next[i][j] = (0..2).map(|k| acc[i][k] * m[k][j]).sum();
            }
        }
        acc = next;
    }
    acc[0][0] + acc[1][1]
}

const ID: [[i64; 2]; 2] = [[1, 0], [0, 1]];
const P: [[i64; 2]; 2] = [[0, 1], [1, 0]];

fn unit2(k: usize) -> [[i64; 2]; 2] {
    let mut m = [[0; 2]; 2];
    m[k / 2][k % 2] = 1;
    m
}

#[test]
fn psi_degree_zero_with_trivial_coaction() {
    let t = PsiTrace::new(&sign_line(), &regular_kc2()).unwrap();
    // Ψ⁰f(a⊗u)(h) = f(a)(h) tr(u h) for group-like h
    let op = t.op(0);
    for a in 0..2 {
        for k in 0..4 {
            for h in 0..2 {
                let row = op.row((a * 4 + k) * 2 + h);
                let tr = tr2(&[unit2(k), if h == 1 { P } else { ID }]);
                assert_eq!(*row, SVec::single(a * 2 + h, q(tr)));
            }
        }
    }
}

#[test]
fn psi_degree_one_by_hand_on_braided_sign_line() {
    // ρ(y) = y⊗g, S(g) = g, r(g) = P; Ψ¹f(a₀⊗u₀, a₁⊗u₁)(h) = f(a₀,a₁)(h) tr(P^{a₀}u₀P^{a₁}u₁ r(h))
    let t = PsiTrace::new(&sign_line_braided(), &regular_kc2()).unwrap();
    let op = t.op(1);
    let p = |a: usize| if a == 1 { P } else { ID };
    for idx in 0..op.dst() {
        let (xs, h) = (idx / 2, idx % 2);
        let (x0, x1) = (xs / 8, xs % 8);
        let (a0, k0, a1, k1) = (x0 / 4, x0 % 4, x1 / 4, x1 % 4);
        let tr = tr2(&[p(a0), unit2(k0), p(a1), unit2(k1), p(h)]);
        let expect = if tr == 0 { SVec::new() } else { SVec::single((a0 * 2 + a1) * 2 + h, q(tr)) };
        assert_eq!(*op.row(idx), expect, "idx {idx}");
    }
    // one value through the evaluation path
    let f = Cochain::new(1, SVec::unit(7));
    let x0 = Elem::unit(4);
    let x1 = Elem::unit(4 + 2);
    assert_eq!(t.psi_trace(&f, &[x0, x1]).unwrap(), SVec::single(1, q(1)));
}

#[test]
fn psi_shape_errors() {
    let t = PsiTrace::new(&sign_line(), &regular_kc2()).unwrap();
    let f = Cochain::new(1, SVec::unit(0));
    assert!(t.psi_trace(&f, &[Elem::unit(0)]).is_err());
    assert!(t.psi_trace(&f, &[Elem::unit(0), Elem::unit(8)]).is_err());
}

/// `Σ f(a₀,…,a_n)(h) tr(P^{c(a₀)}u₀⋯P^{c(a_n)}u_n P^h)` over the terms of `xs`,
/// where `c(y) = 1` exactly when the coaction is `y ↦ y⊗g`.
fn kc2_oracle(f: &Cochain, xs: &[Elem], braided: bool) -> Vec<Rational> {
    let n = xs.len() - 1;
    let mut out = vec![q(0), q(0)];
    let count: usize = xs.iter().map(|x| x.nnz()).product();
    for h in 0..2 {
        for m in 0..count {
            let mut rest = m;
            let mut mats = Vec::new();
            let mut at = 0;
            let mut c = q(1);
            let mut picks = vec![(0, q(0)); n + 1];
            for k in (0..=n).rev() {
                let e = xs[k].entries();
                picks[k] = e[rest % e.len()].clone();
                rest /= e.len();
            }
            for (x, ck) in &picks {
                let (a, u) = (x / 4, x % 4);
                if braided && a == 1 {
                    mats.push(P);
                }
                mats.push(unit2(u));
                at = at * 2 + a;
                c *= ck;
            }
            mats.push(if h == 1 { P } else { ID });
            out[h] += &(&c * &(&f.data.get(at * 2 + h) * &q(tr2(&mats))));
        }
    }
    out
}

fn as_vec(p: &Pairing) -> Vec<Rational> {
    vec![p.value.get(0), p.value.get(1)]
}

#[test]
fn even_pairing_degree_zero_matches_oracle() {
    for (e, braided) in [(sign_e(), false), (braided_e(), true)] {
        let t = PsiTrace::new(e.algebra().base(), e.algebra().rep()).unwrap();
        let cyc = t.source().cyclic_cocycles(0);
        assert!(cyc.dim() > 0);
        for v in cyc.basis() {
            let f = Cochain::new(0, v.clone());
            let p = t.pair_even(&e, &f).unwrap();
            assert!(p.in_r_h);
            assert_eq!(as_vec(&p), kc2_oracle(&f, &[e.elem().clone()], braided));
        }
    }
    let e = sign_e();
    let f = Cochain::new(0, SVec::unit(0));
    assert_eq!(pair_even(&e, &f).unwrap().value, SVec::single(0, q(1)));
    assert!(pair_even(&diag_alg().zero(), &f).unwrap().value.is_zero());
    assert!(pair_even(&e, &Cochain::zero(0)).unwrap().value.is_zero());
}

#[test]
fn even_pairing_refuses_bad_input() {
    let e = sign_e();
    // f(·)(g) = δ_1 is equivariant but b f ≠ 0
    let f = Cochain::new(0, SVec::unit(1));
    assert!(matches!(pair_even(&e, &f), Err(Error::Domain(m)) if m.contains("b f")));
    let bad = diag_alg().from_entries(&[(1, Mat::identity(2))]).unwrap();
    assert!(matches!(pair_even(&bad, &Cochain::new(0, SVec::unit(0))), Err(Error::Domain(m)) if m.contains("invariant")));
    assert!(pair_even(&e, &Cochain::zero(1)).is_err());
    // a Hochschild 2-cocycle that is not cyclic
    let t = PsiTrace::new(&sign_line(), &regular_kc2()).unwrap();
    let cx = t.source();
    let hoch = cx.cocycles(2, false);
    let lam = cx.cyclic_cocycles(2);
    let f = hoch.basis().iter().find(|v| !lam.contains(v)).expect("HH² is larger than the cyclic cocycles");
    assert!(matches!(t.pair_even(&e, &Cochain::new(2, f.clone())), Err(Error::Domain(m)) if m.contains("cyclic")));
}

#[test]
fn even_pairing_is_well_defined() {
    for e in [sign_e(), braided_e()] {
        let t = PsiTrace::new(e.algebra().base(), e.algebra().rep()).unwrap();
        let cx = t.source();
        let g = e.algebra().from_entries(&[(0, m2(2, 1, 1, 2))]).unwrap();
        let gi = g.inverse().unwrap();
        let e2 = g.mul(&e).unwrap().mul(&gi).unwrap();
        assert_pass(&e2.is_invariant());
        for n in [0, 2] {
            let cyc = cx.cyclic_cocycles(n);
            for v in cyc.basis() {
                let f = Cochain::new(n, v.clone());
                let p = t.pair_even(&e, &f).unwrap();
                assert!(p.in_r_h);
                assert_eq!(t.pair_even(&e2, &f).unwrap().value, p.value, "similarity, n = {n}");
                if n > 0 {
                    for w in cx.connes_cochains(n - 1).basis() {
                        let shifted = Cochain::new(n, f.data.add(&cx.hochschild_b(&Cochain::new(n - 1, w.clone())).data));
                        assert_eq!(t.pair_even(&e, &shifted).unwrap().value, p.value, "coboundary, n = {n}");
                    }
                }
                if n == 2 {
                    let args = vec![e.elem().clone(); 3];
                    let braided = e.algebra().base().name != sign_line().name;
                    assert_eq!(as_vec(&p), kc2_oracle(&f, &args, braided));
                }
            }
        }
    }
}

#[test]
fn even_pairing_is_additive() {
    for e in [sign_e(), braided_e()] {
        let one = e.algebra().one();
        let s = e.direct_sum(&one).unwrap();
        let t = PsiTrace::new(e.algebra().base(), e.algebra().rep()).unwrap();
        for n in [0, 2] {
            for v in t.source().cyclic_cocycles(n).basis() {
                let f = Cochain::new(n, v.clone());
                let l = pair_even(&s, &f).unwrap();
                let r = pair_even(&e, &f).unwrap().value.add(&pair_even(&one, &f).unwrap().value);
                assert_eq!(l.value, r);
                assert!(l.in_r_h);
            }
        }
    }
}

#[test]
fn beta_compatible_pairing() {
    let e = braided_e();
    let bar = braided_alg(Structure::NonDiagonal);
    let beta_inv = crate::actions::beta_iso(&sign_line_braided(), &regular_kc2(), -1).unwrap();
    let x = bar.element(crate::actions::lin(e.elem(), |i| beta_inv[i].clone())).unwrap();
    assert_pass(&x.is_invariant());
    assert_pass(&x.is_idempotent());
    let t = PsiTrace::new(&sign_line_braided(), &regular_kc2()).unwrap();
    for n in [0, 2] {
        for v in t.source().cyclic_cocycles(n).basis() {
            let f = Cochain::new(n, v.clone());
            assert_eq!(t.pair_even(&e, &f).unwrap(), t.pair_even(&x, &f).unwrap());
        }
    }
}

#[test]
fn periodic_pairing() {
    for e in [sign_e(), braided_e()] {
        let t = PsiTrace::new(e.algebra().base(), e.algebra().rep()).unwrap();
        let cx = t.source();
        for fs in cx.even_bb_cocycles(1) {
            let p = t.pair_periodic(&e, &fs).unwrap();
            assert!(p.in_r_h);
            // term by term
            let half = e.algebra().one().scale(&Rational::new(1, 2));
            let shifted = e.sub(&half).unwrap();
            let x = e.elem().clone();
            let first = t.psi_trace(&fs[0], &[x.clone()]).unwrap();
            let second = t.psi_trace(&fs[1], &[shifted.elem().clone(), x.clone(), x]).unwrap();
            assert_eq!(p.value, first.axpy(&q(-2), &second));
        }
        for w in cx.space(1, true).basis() {
            let phi = Cochain::new(1, w.clone());
            let fs = vec![cx.apply_connes_b(&phi).unwrap(), cx.hochschild_b(&phi)];
            let p = t.pair_periodic(&e, &fs).unwrap();
            assert!(p.value.is_zero(), "{:?}", p.value);
        }
        // f₀ alone reduces to the even pairing
        for v in cx.cyclic_cocycles(0).basis() {
            let f0 = Cochain::new(0, v.clone());
            assert_eq!(t.pair_periodic(&e, &[f0.clone()]).unwrap(), t.pair_even(&e, &f0).unwrap());
        }
        let not_cocycle = vec![Cochain::new(0, SVec::unit(1)), Cochain::zero(2)];
        assert!(t.pair_periodic(&e, &not_cocycle).is_err());
    }
}

#[test]
fn periodic_pairing_with_unit_idempotent() {
    let a = HAlgebra::trivial(kc2(), crate::catalog::sign_line_algebra()).unwrap();
    let m = MatrixAlgebra::new(&a, &Representation::trivial(&kc2(), 1), Structure::Diagonal).unwrap();
    // f₀(a)(h) = ε(a-coefficient of 1)·ε(h) style functional: f₀(1)(h) = 1
    let f0 = Cochain::new(0, SVec::from_dense(&[q(1), q(1), q(0), q(0)]));
    let p = pair_periodic(&m.one(), &[f0]).unwrap();
    assert_eq!(p.value, SVec::from_dense(&[q(1), q(1)]));
}

#[test]
fn inner_homotopies_on_matrix_algebra() {
    let a = diag_alg();
    let ops = InnerOps::new(a.halgebra(), invertible_u().elem().clone()).unwrap();
    assert_pass(&ops.verify(2).unwrap());
    let one = InnerOps::new(a.halgebra(), a.one().elem().clone()).unwrap();
    for n in 0..2 {
        assert_eq!(one.alpha(n).unwrap(), LinOp::identity(one.complex().dim(n)));
        assert!(one.delta(n).is_zero());
    }
    assert!(InnerOps::new(a.halgebra(), a.from_entries(&[(0, Mat::diag(vec![q(1), q(2)]))]).unwrap().elem().clone()).is_err());
}

#[test]
fn inner_derivation_in_degree_zero() {
    let a = diag_alg();
    let b = invertible_u();
    let ops = InnerOps::new(a.halgebra(), b.elem().clone()).unwrap();
    let d = ops.delta(0);
    let alg = &a.halgebra().algebra;
    for x in 0..8 {
        for h in 0..2 {
            let comm = alg.mul(b.elem(), &Elem::unit(x)).sub(&alg.mul(&Elem::unit(x), b.elem()));
            assert_eq!(*d.row(x * 2 + h), comm.map_indices(|k| k * 2 + h));
        }
    }
}

#[test]
fn pairing_report_passes_on_catalog_cases() {
    for e in [sign_e(), braided_e()] {
        let g = e.algebra().from_entries(&[(0, m2(2, 1, 1, 2))]).unwrap();
        let gi = g.inverse().unwrap();
        let r = verify_pairing(&e, &g, &gi, 1).unwrap();
        assert_pass(&r);
    }
}

use serde::Serialize;

use crate::ktheory::{ExpansionTerm, NonDiagonalAction, SymbolicMatrix, TensorSummand};
use crate::linalg::Mat;
use crate::report::{Check, Failure, Report};
use crate::rewrite::{
    podles_action, podles, podles_sphere, rep2_uq, uq, uq_su2, GeneratorAction, NCPoly, Presentation, PresentedRep,
    SymbolicHopf,
};
use crate::scalar::{LaurentFrac, Rational};

type L = LaurentFrac;

/// The quantum monopole projection over the Podleś sphere.
pub struct Monopole {
    pub hopf: SymbolicHopf,
    pub sphere: Presentation,
    pub action: GeneratorAction,
    pub rep: PresentedRep,
}

fn qh(half: i64) -> L {
    L::q_half_pow(half)
}

fn half() -> L {
    L::from_rational(Rational::new(1, 2))
}

fn gen(g: u8, c: L) -> NCPoly {
    NCPoly::monomial(vec![g], c)
}

impl Monopole {
    pub fn new() -> Self {
        Self { hopf: uq_su2(), sphere: podles_sphere(), action: podles_action(), rep: rep2_uq() }
    }

    /// `½[[1 + q⁻²b, qa], [q⁻¹a*, 1 − b]]`.
    pub fn matrix(&self) -> SymbolicMatrix {
        use podles::*;
        let h = half();
        let one = NCPoly::constant(h.clone());
        let entries = vec![
            one.add(&gen(B, qh(-4).mul(&h))),
            gen(A, qh(2).mul(&h)),
            gen(ASTAR, qh(-2).mul(&h)),
            one.sub(&gen(B, h.clone())),
        ];
        SymbolicMatrix::new(2, entries).expect("2×2")
    }

    /// `½(1⊗1 + q⁻²b⊗FE − b⊗EF + qa⊗F + q⁻¹a*⊗E)` with words evaluated in the representation.
    pub fn tensor_form(&self) -> Vec<TensorSummand> {
        use podles::*;
        use uq::{E, F};
        let h = half();
        let word = |w: &[u8]| self.rep.eval_word(w);
        let s = |coef: L, a: NCPoly, u: Mat<L>, label: &str| TensorSummand { coef: coef.mul(&h), a, u, label: label.into() };
        vec![
            s(L::one(), NCPoly::one(), Mat::identity(2), "1"),
            s(qh(-4), NCPoly::gen(B), word(&[F, E]), "FE"),
            s(L::one().neg(), NCPoly::gen(B), word(&[E, F]), "EF"),
            s(qh(2), NCPoly::gen(A), word(&[F]), "F"),
            s(qh(-2), NCPoly::gen(ASTAR), word(&[E]), "E"),
        ]
    }

    pub fn action(&self) -> NonDiagonalAction<'_> {
        NonDiagonalAction { hopf: &self.hopf, alg: &self.sphere, action: &self.action, rep: &self.rep }
    }

    /// The matrix and the tensor form agree.
    pub fn verify_decomposition(&self) -> Report {
        let mut rep = Report::new("e_q in tensor form");
        let m = self.matrix().normalize(&self.sphere);
        let t = SymbolicMatrix::from_tensor_form(2, &self.tensor_form(), &self.sphere);
        rep.record(
            "e_q = ½(1⊗1 + q⁻²b⊗FE − b⊗EF + qa⊗F + q⁻¹a*⊗E)",
            (m != t).then(|| Failure::new("e_q", m.fmt(&self.sphere), t.fmt(&self.sphere))),
        );
        rep
    }
}

impl Default for Monopole {
    fn default() -> Self {
        Self::new()
    }
}

/// The monopole checks with every intermediate normal form.
#[derive(Clone, Debug, Serialize)]
pub struct MonopoleAudit {
    pub report: Report,
    /// Entries of `e_q · e_q` in normal form.
    pub square: String,
    pub expansions: Vec<ExpansionTerm>,
}

impl MonopoleAudit {
    /// Expansion terms of `h·e_q` for the generator named `h`.
    pub fn terms_for<'a>(&'a self, h: &'a str) -> impl Iterator<Item = &'a ExpansionTerm> {
        self.expansions.iter().filter(move |t| t.generator == h)
    }
}

/// `e_q² = e_q`, `K·e_q = e_q`, `E·e_q = 0`, `F·e_q = 0` under the non-diagonal action.
pub fn monopole_suite() -> MonopoleAudit {
    let m = Monopole::new();
    let alg = &m.sphere;
    let e = m.matrix().normalize(alg);
    let mut report = Report::new("quantum monopole over the Podleś sphere");
    let sq = e.mul(&e, alg).expect("2×2");
    report.record("e_q² = e_q", (sq != e).then(|| Failure::new("e_q·e_q", sq.fmt(alg), e.fmt(alg))));
    let act = m.action();
    let summands = m.tensor_form();
    let mut expansions = Vec::new();
    for (g, name, want) in [(uq::K, "K", e.clone()), (uq::E, "E", SymbolicMatrix::zero(2)), (uq::F, "F", SymbolicMatrix::zero(2))] {
        let id = if want.is_zero() { format!("{name}·e_q = 0") } else { format!("{name}·e_q = e_q") };
        match act.act(&NCPoly::gen(g), &summands) {
            Ok((v, terms)) => {
                report.record(id, (v != want).then(|| Failure::new(name, v.fmt(alg), want.fmt(alg))));
                expansions.extend(terms);
            }
            Err(err) => report.push(Check::error(id, err.to_string())),
        }
    }
    MonopoleAudit { report, square: sq.fmt(alg), expansions }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let a = monopole_suite();
        assert!(a.report.all_pass(), "{}", a.report);
        assert_eq!(a.report.checks.len(), 4);
    }

    #[test]
    fn tensor_form_matches_matrix() {
        let r = Monopole::new().verify_decomposition();
        assert!(r.all_pass(), "{r}");
    }

    /// Summands as `(legs, summand label)`; which ones vanish.
    fn vanishing(a: &MonopoleAudit, h: &str) -> Vec<(String, String)> {
        a.terms_for(h)
            .filter(|t| t.vanishes)
            .map(|t| (t.legs.join(" ⊗ "), t.summand.rsplit(" ⊗ ").next().unwrap().to_string()))
            .collect()
    }

    #[test]
    fn annotated_summands_vanish() {
        let a = monopole_suite();
        let f = vanishing(&a, "F");
        let want_f = [
            ("F ⊗ K ⊗ K", "FE"),
            ("F ⊗ K ⊗ K", "F"),
            ("K^-1 ⊗ F ⊗ K", "1"),
            ("K^-1 ⊗ F ⊗ K", "E"),
            ("K^-1 ⊗ K^-1 ⊗ F", "EF"),
            ("K^-1 ⊗ K^-1 ⊗ F", "F"),
        ];
        assert_eq!(f.len(), 6, "{f:?}");
        for (l, s) in want_f {
            assert!(f.contains(&(l.to_string(), s.to_string())), "{l} / {s} in {f:?}");
        }
        let e = vanishing(&a, "E");
        let want_e = [
            ("E ⊗ K ⊗ K", "EF"),
            ("E ⊗ K ⊗ K", "E"),
            ("K^-1 ⊗ E ⊗ K", "1"),
            ("K^-1 ⊗ E ⊗ K", "F"),
            ("K^-1 ⊗ K^-1 ⊗ E", "FE"),
            ("K^-1 ⊗ K^-1 ⊗ E", "E"),
        ];
        assert_eq!(e.len(), 6, "{e:?}");
        for (l, s) in want_e {
            assert!(e.contains(&(l.to_string(), s.to_string())), "{l} / {s} in {e:?}");
        }
        assert_eq!(a.terms_for("E").count(), 15);
        assert!(a.terms_for("K").all(|t| !t.vanishes));
    }

    #[test]
    fn perturbed_idempotent_is_caught() {
        let m = Monopole::new();
        let mut entries: Vec<NCPoly> = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| m.matrix().entry(i, j).clone()).collect();
        // drop the q in the (0, 1) entry
        entries[1] = NCPoly::gen(podles::A).scale(&half());
        let x = SymbolicMatrix::new(2, entries).unwrap();
        assert!(!x.is_idempotent(&m.sphere).all_pass());
        let r = m.action().is_invariant(&x).unwrap();
        assert!(!r.all_pass());
        let ok = m.action().is_invariant(&m.matrix()).unwrap();
        assert!(ok.all_pass(), "{ok}");
    }
}

use std::sync::Arc;

use serde_json::{json, Value};

use super::finite::*;
use super::monopole::{monopole_suite, Monopole};
use crate::actions::{verify_module_algebra, verify_quasitriangular, verify_yd, HAlgebra, RMatrix, Representation};
use crate::hopf::FinHopf;
use crate::ktheory::{MatrixAlgElem, MatrixAlgebra, Structure};
use crate::linalg::Mat;
use crate::report::{Check, Failure, Report};
use crate::rewrite::{
    podles_action, podles_sphere, rep2_uq, uq, uq_su2, GeneratorAction, NCPoly, Presentation, PresentedRep, SymbolicHopf,
};
use crate::scalar::{wire_string, Field, LaurentFrac};
use crate::Error;

/// The structure carried by a catalog entry.
pub enum Payload {
    Hopf(Arc<FinHopf>),
    Algebra(HAlgebra),
    RMatrix { hopf: Arc<FinHopf>, r: RMatrix },
    Representation { hopf: Arc<FinHopf>, rep: Representation },
    SymbolicHopf(SymbolicHopf),
    Presentation(Presentation),
    Action(GeneratorAction),
    PresentedRep(PresentedRep),
    Idempotent(MatrixAlgElem),
    Monopole(Box<Monopole>),
}

pub struct CatalogEntry {
    pub name: String,
    pub payload: Payload,
    pub provenance: String,
}

/// Bound for confluence checks at catalog load.
const LOAD_DEGREE: usize = 4;

fn mat_json<F: Field>(m: &Mat<F>) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| Value::String(wire_string(&m[(i, j)]))).collect())).collect(),
    )
}

fn poly_json(p: &NCPoly) -> Value {
    Value::Array(p.terms().map(|(w, c)| json!([w, wire_string(c)])).collect())
}

fn algebra_json(a: &HAlgebra) -> Value {
    json!({
        "name": a.name,
        "hopf": a.hopf.name(),
        "algebra": a.algebra.to_json(),
        "action": a.action.to_json(),
        "coaction": a.coaction.as_ref().map(|c| c.to_json()),
    })
}

fn action_json(act: &GeneratorAction) -> Value {
    let hg = uq_su2().presentation().generators().to_vec();
    let ag = podles_sphere().generators().to_vec();
    let mut rows = Vec::new();
    for (h, hn) in hg.iter().enumerate() {
        for (x, xn) in ag.iter().enumerate() {
            if let Some(v) = act.get(h as u8, x as u8) {
                rows.push(json!({ "h": hn, "x": xn, "value": poly_json(v) }));
            }
        }
    }
    Value::Array(rows)
}

/// `[F, E]` read as `EF − FE`, against `(K² − K⁻²)/(q − q⁻¹)` in the representation and `diag(−1, 1)`.
fn rep2_fe_check(rep: &PresentedRep) -> Check {
    let comm = rep.eval_word(&[uq::E, uq::F]).sub(&rep.eval_word(&[uq::F, uq::E]));
    let q = LaurentFrac::q_pow(1);
    let denom = q.sub(&q.inv().expect("q ≠ 0")).inv().expect("q − q⁻¹ ≠ 0");
    let k2 = rep.eval_word(&[uq::K, uq::K]).sub(&rep.eval_word(&[uq::KINV, uq::KINV])).scale(&denom);
    let want = Mat::diag(vec![LaurentFrac::from_i64(-1), LaurentFrac::from_i64(1)]);
    let r = if comm != k2 {
        Some(Failure::new("EF − FE vs (K² − K⁻²)/(q − q⁻¹)", format!("{comm:?}"), format!("{k2:?}")))
    } else {
        (comm != want).then(|| Failure::new("EF − FE vs diag(−1, 1)", format!("{comm:?}"), format!("{want:?}")))
    };
    Check::from_result("EF − FE = (K² − K⁻²)/(q − q⁻¹) = diag(−1, 1)", r)
}

impl CatalogEntry {
    pub fn kind(&self) -> &'static str {
        match &self.payload {
            Payload::Hopf(_) => "hopf",
            Payload::Algebra(_) => "module-algebra",
            Payload::RMatrix { .. } => "r-matrix",
            Payload::Representation { .. } => "representation",
            Payload::SymbolicHopf(_) => "symbolic-hopf",
            Payload::Presentation(_) => "presentation",
            Payload::Action(_) => "generator-action",
            Payload::PresentedRep(_) => "presented-representation",
            Payload::Idempotent(_) | Payload::Monopole(_) => "idempotent",
        }
    }

    /// The verifier of the entry's structure.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new(format!("catalog entry {}", self.name));
        match &self.payload {
            Payload::Hopf(h) => rep.absorb("hopf", h.verify_hopf_axioms()),
            Payload::Algebra(a) => match verify_yd(a) {
                Ok(r) => rep.absorb("yd", r),
                Err(_) => rep.absorb("module-algebra", verify_module_algebra(&a.hopf, &a.algebra, &a.action)),
            },
            Payload::RMatrix { hopf, r } => rep.absorb("r-matrix", verify_quasitriangular(hopf, r)),
            Payload::Representation { hopf, rep: v } => rep.absorb("representation", v.verify(hopf)),
            Payload::SymbolicHopf(h) => {
                rep.absorb("hopf", h.verify_axioms());
                rep.absorb("confluence", h.presentation().check_confluence(LOAD_DEGREE));
            }
            Payload::Presentation(p) => rep.absorb("confluence", p.check_confluence(LOAD_DEGREE)),
            Payload::Action(a) => rep.absorb("action", a.verify_well_defined(&uq_su2(), &podles_sphere())),
            Payload::PresentedRep(r) => {
                rep.absorb("representation", r.verify(uq_su2().presentation()));
                rep.push(rep2_fe_check(r).prefixed("representation"));
            }
            Payload::Idempotent(e) => {
                rep.absorb("invariant", e.is_invariant());
                rep.absorb("idempotent", e.is_idempotent());
            }
            Payload::Monopole(m) => {
                rep.absorb("decomposition", m.verify_decomposition());
                rep.absorb("monopole", monopole_suite().report);
            }
        }
        rep
    }

    pub fn to_json(&self) -> Value {
        let body = match &self.payload {
            Payload::Hopf(h) => h.to_json(),
            Payload::Algebra(a) => algebra_json(a),
            Payload::RMatrix { hopf, r } => json!({
                "hopf": hopf.name(),
                "r": r.r().to_dense(hopf.dim() * hopf.dim()),
            }),
            Payload::Representation { hopf, rep } => json!({
                "hopf": hopf.name(),
                "name": rep.name(),
                "matrices": (0..hopf.dim()).map(|i| mat_json(rep.basis_mat(i))).collect::<Vec<_>>(),
            }),
            Payload::SymbolicHopf(h) => json!({ "presentation": h.presentation().to_json() }),
            Payload::Presentation(p) => p.to_json(),
            Payload::Action(a) => json!({ "hopf": "U_q(su_2)", "algebra": "S^2_q", "table": action_json(a) }),
            Payload::PresentedRep(r) => json!({
                "dim": r.dim(),
                "generators": uq_su2().presentation().generators(),
                "matrices": (0..4u8).map(|g| mat_json(r.gen(g))).collect::<Vec<_>>(),
            }),
            Payload::Idempotent(e) => e.to_json(),
            Payload::Monopole(m) => {
                let e = m.matrix();
                json!({
                    "algebra": m.sphere.name(),
                    "structure": "non-diagonal",
                    "size": e.size(),
                    "entries": (0..2).map(|i| (0..2).map(|j| poly_json(e.entry(i, j))).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            }
        };
        json!({ "name": self.name, "kind": self.kind(), "provenance": self.provenance, "payload": body })
    }
}

/// The sign line idempotent in the diagonal structure on `A ⊗ End(kC₂)`.
pub fn sign_line_idempotent() -> MatrixAlgElem {
    let m = MatrixAlgebra::new(&sign_line(), &regular_kc2(), Structure::Diagonal).expect("YD algebra");
    m.from_entries(&sign_line_idempotent_entries()).expect("2×2 entries")
}

pub fn sign_line_braided_idempotent() -> MatrixAlgElem {
    let m = MatrixAlgebra::new(&sign_line_braided(), &regular_kc2(), Structure::Diagonal).expect("YD algebra");
    m.from_entries(&sign_line_braided_idempotent_entries()).expect("2×2 entries")
}

/// `1 ⊗ [[2, 1], [1, 2]]` and its inverse, in the algebra of `e`.
pub fn kc2_invertible(e: &MatrixAlgElem) -> Result<(MatrixAlgElem, MatrixAlgElem), Error> {
    let g = e.algebra().from_entries(&kc2_invertible_entries())?;
    let gi = g.inverse().ok_or_else(|| Error::Domain("not invertible".into()))?;
    Ok((g, gi))
}

fn entry(name: &str, payload: Payload, provenance: &str) -> CatalogEntry {
    CatalogEntry { name: name.into(), payload, provenance: provenance.into() }
}

fn slug(h: &FinHopf) -> String {
    h.name().to_string()
}

/// Every built-in structure, unverified.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let mut out = vec![
        entry("kC2", Payload::Hopf(kc2()), "group algebra of the cyclic group of order 2"),
        entry("kC3", Payload::Hopf(kc3()), "group algebra of the cyclic group of order 3"),
        entry("kS3", Payload::Hopf(ks3()), "group algebra of the symmetric group on three letters"),
        entry("H4", Payload::Hopf(sweedler_h4()), "Sweedler's four-dimensional Hopf algebra"),
        entry("sign-line", Payload::Algebra(sign_line()), "k[y]/(y²−1) with g·y = −y and trivial coaction"),
        entry("sign-line-braided", Payload::Algebra(sign_line_braided()), "sign line with the coaction induced by the kC2 R-matrix"),
    ];
    for a in adjoint_algebras() {
        out.push(entry(&format!("adjoint-{}", slug(&a.hopf)), Payload::Algebra(a), "H acting on itself by g·h = g⁽⁰⁾hS(g⁽¹⁾)"));
    }
    for a in self_yd_algebras() {
        out.push(entry(&format!("self-yd-{}", slug(&a.hopf)), Payload::Algebra(a), "adjoint action with coaction h⁽¹⁾ ⊗ S⁻¹(h⁽⁰⁾)"));
    }
    out.extend([
        entry("r-matrix-kC2", Payload::RMatrix { hopf: kc2(), r: kc2_r_matrix() }, "R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)"),
        entry("regular-kC2", Payload::Representation { hopf: kc2(), rep: regular_kc2() }, "left regular representation"),
        entry("rep2-H4", Payload::Representation { hopf: sweedler_h4(), rep: h4_rep2() }, "g ↦ diag(1, −1), x ↦ E21"),
        entry("sign-line-e", Payload::Idempotent(sign_line_idempotent()), "½(1⊗1 + y⊗diag(1, −1)) over the regular representation"),
        entry(
            "sign-line-braided-e",
            Payload::Idempotent(sign_line_braided_idempotent()),
            "½(1⊗1 + y⊗[[0, 1], [−1, 0]]) over the regular representation",
        ),
        entry("uq-su2", Payload::SymbolicHopf(uq_su2()), "quantum enveloping algebra, PBW rewriting"),
        entry("podles", Payload::Presentation(podles_sphere()), "equator Podleś sphere"),
        entry("podles-action", Payload::Action(podles_action()), "U_q(su_2)-module algebra structure on the Podleś sphere"),
        entry("rep2-uq", Payload::PresentedRep(rep2_uq()), "E = E21, F = E12, K = diag(q^-1/2, q^1/2)"),
        entry("monopole", Payload::Monopole(Box::new(Monopole::new())), "quantum Dirac monopole projection e_q"),
    ]);
    out
}

/// Every built-in structure; fails with the first report that does not pass.
pub fn catalog() -> Result<Vec<CatalogEntry>, Error> {
    let entries = catalog_entries();
    for e in &entries {
        let r = e.verify();
        if !r.all_pass() {
            return Err(Error::Axioms(Box::new(r)));
        }
    }
    Ok(entries)
}

/// Looks an entry up by name, case-insensitively.
pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog_entries().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_loads_and_every_entry_verifies() {
        let all = catalog().unwrap_or_else(|e| panic!("{e}"));
        let names: Vec<&str> = all.iter().map(|e| e.name.as_str()).collect();
        for want in ["kC2", "kC3", "kS3", "H4", "sign-line", "adjoint-kS3", "self-yd-H4", "r-matrix-kC2", "uq-su2", "podles", "podles-action", "rep2-uq", "monopole"] {
            assert!(names.contains(&want), "{want} missing from {names:?}");
        }
    }

    #[test]
    fn load_is_deterministic() {
        let a: Vec<String> = catalog_entries().iter().map(|e| serde_json::to_string(&e.verify()).unwrap()).collect();
        let b: Vec<String> = catalog_entries().iter().map(|e| serde_json::to_string(&e.verify()).unwrap()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn hopf_export_round_trips() {
        for name in ["kC2", "kS3", "H4"] {
            let e = lookup(name).unwrap();
            let v = e.to_json();
            let back = FinHopf::from_json(&v["payload"]).unwrap();
            let Payload::Hopf(h) = &e.payload else { panic!() };
            assert_eq!(back.to_json(), h.to_json());
        }
        let p = lookup("podles").unwrap().to_json();
        let back = Presentation::<LaurentFrac>::from_json(&p["payload"]).unwrap();
        assert_eq!(back.rules(), podles_sphere().rules());
    }

    #[test]
    fn ks3_is_noncommutative_and_cocommutative() {
        let h = ks3();
        assert_eq!(h.dim(), 6);
        let e = lookup("KS3").unwrap();
        assert!(e.verify().all_pass());
        let (a, b) = (crate::hopf::Elem::unit(1), crate::hopf::Elem::unit(2));
        assert_ne!(h.mul(&a, &b), h.mul(&b, &a));
    }

    #[test]
    fn fe_commutator_is_pinned() {
        assert!(rep2_fe_check(&rep2_uq()).passed());
    }
}

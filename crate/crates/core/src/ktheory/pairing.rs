use super::{invariant_idempotent, verify_similarity, MatrixAlgElem, PsiTrace, Structure};
use crate::cyclic::Cochain;
use crate::hopf::Elem;
use crate::linalg::SVec;
use crate::report::{Check, Failure, Report};
use crate::scalar::Rational;
use crate::Error;

/// A pairing value: a functional on `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub labels: Vec<String>,
    pub value: SVec,
    pub in_r_h: bool,
}

impl Pairing {
    pub fn to_json(&self) -> serde_json::Value {
        let values: serde_json::Map<String, serde_json::Value> =
            self.labels.iter().enumerate().map(|(i, l)| (l.clone(), self.value.get(i).to_wire().into())).collect();
        serde_json::json!({ "values": values, "in_R_H": self.in_r_h })
    }
}

impl PsiTrace {
    fn check_idempotent(&self, e: &MatrixAlgElem) -> Result<(), Error> {
        let m = e.algebra();
        if m.base().algebra != self.base().algebra || m.base().action != self.base().action || m.rep() != self.rep() {
            return Err(Error::Shape("the idempotent lives over a different algebra or representation".into()));
        }
        invariant_idempotent(e)
    }

    fn psi(&self, tag: Structure, f: &Cochain, elems: &[Elem]) -> Result<SVec, Error> {
        match tag {
            Structure::Diagonal => self.psi_trace(f, elems),
            Structure::NonDiagonal => self.psi_trace_simplified(f, elems),
        }
    }

    fn finish(&self, value: SVec) -> Pairing {
        let in_r_h = self.invariant_functionals().contains(&value);
        Pairing { labels: self.base().hopf.labels().to_vec(), value, in_r_h }
    }

    fn admissible(&self, f: &Cochain, normalized: bool) -> Result<(), Error> {
        let n = f.degree;
        let d = self.source().dim(n);
        if f.data.max_index().is_some_and(|i| i >= d) {
            return Err(Error::Shape(format!("cochain outside C^{n} of dimension {d}")));
        }
        if !self.source().space(n, normalized).contains(&f.data) {
            let what = if normalized { "a normalized equivariant" } else { "an equivariant" };
            return Err(Error::Domain(format!("degree {n} component is not {what} cochain")));
        }
        Ok(())
    }

    /// `⟨[e], f⟩(g) = Ψ^{2n} f(e,…,e)(g)` for an equivariant cyclic cocycle `f`.
    pub fn pair_even(&self, e: &MatrixAlgElem, f: &Cochain) -> Result<Pairing, Error> {
        if f.degree % 2 == 1 {
            return Err(Error::Domain(format!("odd degree {}", f.degree)));
        }
        self.check_idempotent(e)?;
        self.admissible(f, false)?;
        if !self.source().hochschild_b(f).is_zero() {
            return Err(Error::Domain(format!("b f ≠ 0 in degree {}", f.degree + 1)));
        }
        if self.source().apply_tau(f) != *f {
            return Err(Error::Domain(format!("f is not cyclic: τf ≠ f in degree {}", f.degree)));
        }
        let args = vec![e.elem().clone(); f.degree + 1];
        Ok(self.finish(self.psi(e.tag(), f, &args)?))
    }

    /// `Ψf₀(e) + Σ_{n=1}^{m} (−1)ⁿ (2n)!/n! Ψf_{2n}(e − ½, e,…,e)` for a
    /// cocycle `(f₀, f₂,…, f_{2m})` of the normalized `(b, B)` bicomplex.
    pub fn pair_periodic(&self, e: &MatrixAlgElem, fs: &[Cochain]) -> Result<Pairing, Error> {
        if fs.is_empty() {
            return Err(Error::Shape("no components".into()));
        }
        for (k, f) in fs.iter().enumerate() {
            if f.degree != 2 * k {
                return Err(Error::Shape(format!("component {k} has degree {}, expected {}", f.degree, 2 * k)));
            }
            self.admissible(f, true)?;
        }
        self.check_idempotent(e)?;
        let cx = self.source();
        for k in 0..fs.len() {
            let mut lhs = cx.hochschild_b(&fs[k]).data;
            if let Some(next) = fs.get(k + 1) {
                lhs = lhs.add(&cx.apply_connes_b(next)?.data);
            }
            if !lhs.is_zero() {
                let which = if k + 1 < fs.len() { format!("b f_{} + B f_{}", 2 * k, 2 * k + 2) } else { format!("b f_{}", 2 * k) };
                return Err(Error::Domain(format!("not a (b, B) cocycle: {which} ≠ 0")));
            }
        }
        let tag = e.tag();
        let x = e.elem().clone();
        let mut value = self.psi(tag, &fs[0], &[x.clone()])?;
        let half = Rational::new(1, 2);
        let shifted = x.sub(&e.algebra().one().elem().scale(&half));
        for (n, f) in fs.iter().enumerate().skip(1) {
            let mut args = vec![x.clone(); 2 * n + 1];
            args[0] = shifted.clone();
            let c = &Rational::factorial(2 * n as u32) / &Rational::factorial(n as u32);
            let c = if n % 2 == 1 { -c } else { c };
            value = value.axpy(&c, &self.psi(tag, f, &args)?);
        }
        Ok(self.finish(value))
    }
}

fn trace_for(e: &MatrixAlgElem) -> Result<PsiTrace, Error> {
    PsiTrace::new(e.algebra().base(), e.algebra().rep())
}

/// See [`PsiTrace::pair_even`].
pub fn pair_even(e: &MatrixAlgElem, f: &Cochain) -> Result<Pairing, Error> {
    trace_for(e)?.pair_even(e, f)
}

/// See [`PsiTrace::pair_periodic`].
pub fn pair_periodic(e: &MatrixAlgElem, fs: &[Cochain]) -> Result<Pairing, Error> {
    trace_for(e)?.pair_periodic(e, fs)
}

/// Well-definedness of the even pairing in degrees `2k`, `k ≤ k_max`, over every
/// basis cyclic cocycle `f` and every basis cochain `f′` of Connes' complex:
/// `⟨e, f + bf′⟩ = ⟨e, f⟩`, `⟨γeγ⁻¹, f⟩ = ⟨e, f⟩`, additivity under `⊕`,
/// and `R(H)`-membership.
pub fn verify_pairing(e: &MatrixAlgElem, g: &MatrixAlgElem, g_inv: &MatrixAlgElem, k_max: usize) -> Result<Report, Error> {
    let t = trace_for(e)?;
    let cx = t.source();
    let mut rep = Report::new(format!("pairing of K₀ with cyclic cohomology over {} ⊗ End({})", t.base().name, t.rep().name()));
    let sim = verify_similarity(e, &g.mul(e)?.mul(g_inv)?, g, g_inv)?;
    rep.absorb("γ", sim);
    let e2 = g.mul(e)?.mul(g_inv)?;
    let one = e.algebra().one();
    let sum = e.direct_sum(&one)?;
    for k in 0..=k_max {
        let n = 2 * k;
        let basis = cx.cyclic_cocycles(n).basis().to_vec();
        let lower = if n > 0 { cx.connes_cochains(n - 1).basis().to_vec() } else { Vec::new() };
        let (mut r_h, mut cob, mut conj, mut add) = (None, None, None, None);
        for (i, v) in basis.iter().enumerate() {
            let f = Cochain::new(n, v.clone());
            let p = t.pair_even(e, &f)?;
            if r_h.is_none() && !p.in_r_h {
                r_h = Some(Failure::new(format!("f #{i}"), format!("{:?}", p.value), "an element of R(H)"));
            }
            if conj.is_none() {
                let q = t.pair_even(&e2, &f)?;
                conj = (q.value != p.value).then(|| Failure::new(format!("f #{i}"), format!("{:?}", q.value), format!("{:?}", p.value)));
            }
            if add.is_none() {
                let l = pair_even(&sum, &f)?.value;
                let r = p.value.add(&t.pair_even(&one, &f)?.value);
                add = (l != r).then(|| Failure::new(format!("f #{i}"), format!("{l:?}"), format!("{r:?}")));
            }
            for (j, w) in lower.iter().enumerate() {
                if cob.is_some() {
                    break;
                }
                let shifted = Cochain::new(n, f.data.add(&cx.hochschild_b(&Cochain::new(n - 1, w.clone())).data));
                let q = t.pair_even(e, &shifted)?;
                cob = (q.value != p.value)
                    .then(|| Failure::new(format!("f #{i}, f′ #{j}"), format!("{:?}", q.value), format!("{:?}", p.value)));
            }
        }
        let note = format!("{} cyclic cocycles, {} cochains f′", basis.len(), lower.len());
        rep.push(Check::from_result("⟨e, f⟩ ∈ R(H)", r_h).at_degree(n).with_note(note.clone()));
        if n > 0 {
            rep.push(Check::from_result("⟨e, f + bf′⟩ = ⟨e, f⟩", cob).at_degree(n).with_note(note));
        }
        rep.record_at("⟨γeγ⁻¹, f⟩ = ⟨e, f⟩", n, conj);
        rep.record_at("⟨e ⊕ 1, f⟩ = ⟨e, f⟩ + ⟨1, f⟩", n, add);
    }
    Ok(rep)
}

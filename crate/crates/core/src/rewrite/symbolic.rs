//! Hopf structure on a presented algebra and actions defined on generators.

use std::collections::{BTreeMap, HashMap};

use super::{fmt_word, NCPoly, Presentation, Word};
use crate::linalg::Mat;
use crate::report::{Check, Failure, Report};
use crate::scalar::{Field, LaurentFrac};
use crate::Error;

/// Sum of pure tensors of words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPoly<F: Field = LaurentFrac> {
    arity: usize,
    terms: BTreeMap<Vec<Word>, F>,
}

impl<F: Field> TensorPoly<F> {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(vec![Vec::new(); arity], &F::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: &F) {
        debug_assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(legs) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut t = self.clone();
        let m = F::one().negate();
        for (k, c) in &o.terms {
            t.add_term(k.clone(), &c.times(&m));
        }
        t
    }

    /// Leg-wise product, each leg reduced in `p`.
    pub fn mul(&self, o: &Self, p: &Presentation<F>) -> Self {
        let mut raw = Self::zero(self.arity);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let legs = a
                    .iter()
                    .zip(b)
                    .map(|(u, v)| {
                        let mut w = u.clone();
                        w.extend_from_slice(v);
                        w
                    })
                    .collect();
                raw.add_term(legs, &x.times(y));
            }
        }
        raw.normalize(p)
    }

    pub fn normalize(&self, p: &Presentation<F>) -> Self {
        let mut out = Self::zero(self.arity);
        for (legs, c) in &self.terms {
            let mut acc: Vec<(Vec<Word>, F)> = vec![(Vec::new(), c.clone())];
            for leg in legs {
                let nf = p.nf(&NCPoly::monomial(leg.clone(), F::one()));
                let mut next = Vec::new();
                for (prefix, d) in &acc {
                    for (w, e) in nf.terms() {
                        let mut k = prefix.clone();
                        k.push(w.clone());
                        next.push((k, d.times(e)));
                    }
                }
                acc = next;
            }
            for (k, d) in acc {
                out.add_term(k, &d);
            }
        }
        out
    }

    /// Multiplies legs `leg` and `leg + 1` together.
    pub fn multiply_adjacent(&self, leg: usize, p: &Presentation<F>) -> Self {
        let mut t = Self::zero(self.arity - 1);
        for (legs, c) in &self.terms {
            let mut k = legs.clone();
            let right = k.remove(leg + 1);
            k[leg].extend(right);
            t.add_term(k, c);
        }
        t.normalize(p)
    }

    /// Replaces leg `leg` by the tensor factors of `f(word)`.
    pub fn expand_leg(&self, leg: usize, f: impl Fn(&Word) -> TensorPoly<F>) -> Self {
        let mut arity = None;
        let mut t = Self::zero(0);
        for (legs, c) in &self.terms {
            let img = f(&legs[leg]);
            let a = *arity.get_or_insert(self.arity - 1 + img.arity);
            if t.arity != a {
                t = Self::zero(a);
            }
            for (k, d) in &img.terms {
                let mut nk = legs[..leg].to_vec();
                nk.extend(k.iter().cloned());
                nk.extend(legs[leg + 1..].iter().cloned());
                t.add_term(nk, &c.times(d));
            }
        }
        if arity.is_none() {
            t = Self::zero(self.arity);
        }
        t
    }

    pub fn fmt_with(&self, gens: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(legs, c)| {
                let body = legs.iter().map(|w| fmt_word(gens, w)).collect::<Vec<_>>().join("⊗");
                if c.is_one() {
                    body
                } else {
                    format!("({c})*{body}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Δ, ε, S and S⁻¹ prescribed on generators of a presentation.
#[derive(Clone, Debug)]
pub struct SymbolicHopf<F: Field = LaurentFrac> {
    pub pres: Presentation<F>,
    delta: Vec<TensorPoly<F>>,
    counit: Vec<F>,
    antipode: Vec<NCPoly<F>>,
    antipode_inv: Vec<NCPoly<F>>,
}

impl<F: Field> SymbolicHopf<F> {
    pub fn new(
        pres: Presentation<F>,
        delta: Vec<TensorPoly<F>>,
        counit: Vec<F>,
        antipode: Vec<NCPoly<F>>,
        antipode_inv: Vec<NCPoly<F>>,
    ) -> Result<Self, Error> {
        let n = pres.generators().len();
        if delta.len() != n || counit.len() != n || antipode.len() != n || antipode_inv.len() != n {
            return Err(Error::Shape("Hopf data must be given on every generator".into()));
        }
        if delta.iter().any(|d| d.arity() != 2) {
            return Err(Error::Shape("coproduct images must have two legs".into()));
        }
        Ok(Self { pres, delta, counit, antipode, antipode_inv })
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.pres
    }

    pub fn fmt(&self, x: &NCPoly<F>) -> String {
        self.pres.fmt(x)
    }

    pub fn fmt_tensor(&self, t: &TensorPoly<F>) -> String {
        t.fmt_with(self.pres.generators())
    }

    /// `Δ^{(n)}` of a single word, as the leg-wise product of the generators' images.
    pub fn coproduct_word(&self, w: &[u8], n: usize) -> TensorPoly<F> {
        let mut acc = TensorPoly::one(n + 1);
        for &g in w {
            acc = acc.mul(&self.coproduct_gen(g, n), &self.pres);
        }
        acc
    }

    fn coproduct_gen(&self, g: u8, n: usize) -> TensorPoly<F> {
        if n == 0 {
            let mut t = TensorPoly::zero(1);
            t.add_term(vec![vec![g]], &F::one());
            return t;
        }
        let mut t = self.delta[g as usize].clone();
        for _ in 1..n {
            t = t.expand_leg(0, |w| self.coproduct_word(w, 1)).normalize(&self.pres);
        }
        t
    }

    /// `Δ^{(n)}(x)`, arity `n + 1`; `n = 0` returns `x` itself as a one-leg tensor.
    pub fn coproduct(&self, x: &NCPoly<F>, n: usize) -> TensorPoly<F> {
        let mut out = TensorPoly::zero(n + 1);
        for (w, c) in x.terms() {
            for (k, d) in self.coproduct_word(w, n).terms() {
                out.add_term(k.clone(), &c.times(d));
            }
        }
        out
    }

    pub fn counit_word(&self, w: &[u8]) -> F {
        w.iter().fold(F::one(), |acc, &g| acc.times(&self.counit[g as usize]))
    }

    pub fn counit(&self, x: &NCPoly<F>) -> F {
        let mut s = F::zero();
        for (w, c) in x.terms() {
            s.add_assign_ref(&c.times(&self.counit_word(w)));
        }
        s
    }

    /// `S^{power}` for `power = ±1`, anti-multiplicative.
    pub fn antipode(&self, x: &NCPoly<F>, power: i32) -> Result<NCPoly<F>, Error> {
        let table = match power {
            1 => &self.antipode,
            -1 => &self.antipode_inv,
            _ => return Err(Error::Domain(format!("antipode power {power} not in ±1"))),
        };
        let mut out = NCPoly::zero();
        for (w, c) in x.terms() {
            let mut acc = NCPoly::constant(c.clone());
            for &g in w.iter().rev() {
                acc = acc.concat(&table[g as usize]);
            }
            out = out.add(&acc);
        }
        Ok(self.pres.nf(&out))
    }

    pub fn s(&self, x: &NCPoly<F>) -> NCPoly<F> {
        self.antipode(x, 1).expect("power 1")
    }

    pub fn s_inv(&self, x: &NCPoly<F>) -> NCPoly<F> {
        self.antipode(x, -1).expect("power -1")
    }

    fn apply_leg(&self, t: &TensorPoly<F>, leg: usize, f: impl Fn(&NCPoly<F>) -> NCPoly<F>) -> TensorPoly<F> {
        t.expand_leg(leg, |w| {
            let img = f(&NCPoly::monomial(w.clone(), F::one()));
            let mut r = TensorPoly::zero(1);
            for (v, c) in img.terms() {
                r.add_term(vec![v.clone()], c);
            }
            r
        })
    }

    fn collapse(&self, t: &TensorPoly<F>) -> NCPoly<F> {
        let mut out = NCPoly::zero();
        for (legs, c) in t.terms() {
            let w: Word = legs.concat();
            out = out.add(&NCPoly::monomial(w, c.clone()));
        }
        self.pres.nf(&out)
    }

    /// Hopf axioms on generators, and compatibility of Δ, ε, S, S⁻¹ with every rule.
    pub fn verify_axioms(&self) -> Report {
        let p = &self.pres;
        let gens = p.generators();
        let mut rep = Report::new(format!("Hopf axioms of {} on generators", p.name()));
        for g in 0..gens.len() as u8 {
            let name = &gens[g as usize];
            let x = NCPoly::gen(g);
            let d = self.coproduct(&x, 1);
            let eps_one = NCPoly::constant(self.counit[g as usize].clone());
            let left = self.collapse(&self.apply_leg(&d, 0, |y| self.s(y)));
            rep.record(format!("m(S⊗id)Δ = ε·1 on {name}"), diff(name, &left, &eps_one, p));
            let right = self.collapse(&self.apply_leg(&d, 1, |y| self.s(y)));
            rep.record(format!("m(id⊗S)Δ = ε·1 on {name}"), diff(name, &right, &eps_one, p));
            let l = d.expand_leg(0, |w| self.coproduct_word(w, 1));
            let r = d.expand_leg(1, |w| self.coproduct_word(w, 1));
            rep.record(format!("coassociativity on {name}"), tdiff(name, &l, &r, p));
            let eps = |t: &TensorPoly<F>, leg: usize| {
                let mut out = NCPoly::zero();
                for (legs, c) in t.terms() {
                    let e = self.counit_word(&legs[leg]);
                    out.add_term(legs[1 - leg].clone(), &c.times(&e));
                }
                p.nf(&out)
            };
            rep.record(format!("(ε⊗id)Δ = id on {name}"), diff(name, &eps(&d, 0), &x, p));
            rep.record(format!("(id⊗ε)Δ = id on {name}"), diff(name, &eps(&d, 1), &x, p));
            rep.record(format!("S∘S⁻¹ = id on {name}"), diff(name, &self.s(&self.s_inv(&x)), &x, p));
            rep.record(format!("S⁻¹∘S = id on {name}"), diff(name, &self.s_inv(&self.s(&x)), &x, p));
        }
        for r in p.rules() {
            let w = fmt_word(gens, &r.lhs);
            let lhs = NCPoly::monomial(r.lhs.clone(), F::one());
            let dl = self.coproduct(&lhs, 1);
            let dr = self.coproduct(&r.rhs, 1);
            rep.record(format!("Δ respects {w}"), tdiff(&w, &dl, &dr, p));
            let (el, er) = (self.counit(&lhs), self.counit(&r.rhs));
            rep.record(format!("ε respects {w}"), (el != er).then(|| Failure::new(w.clone(), &el, &er)));
            rep.record(format!("S respects {w}"), diff(&w, &self.s(&lhs), &self.s(&r.rhs), p));
            rep.record(format!("S⁻¹ respects {w}"), diff(&w, &self.s_inv(&lhs), &self.s_inv(&r.rhs), p));
        }
        rep
    }
}

fn diff<F: Field>(witness: &str, a: &NCPoly<F>, b: &NCPoly<F>, p: &Presentation<F>) -> Option<Failure> {
    let (a, b) = (p.nf(a), p.nf(b));
    (a != b).then(|| Failure::new(witness, p.fmt(&a), p.fmt(&b)))
}

fn tdiff<F: Field>(witness: &str, a: &TensorPoly<F>, b: &TensorPoly<F>, p: &Presentation<F>) -> Option<Failure> {
    let (a, b) = (a.normalize(p), b.normalize(p));
    (a != b).then(|| Failure::new(witness, a.fmt_with(p.generators()), b.fmt_with(p.generators())))
}

/// Action of Hopf generators on algebra generators, extended by the
/// module-algebra law.
#[derive(Clone, Debug)]
pub struct GeneratorAction<F: Field = LaurentFrac> {
    table: HashMap<(u8, u8), NCPoly<F>>,
}

impl<F: Field> GeneratorAction<F> {
    pub fn new(table: HashMap<(u8, u8), NCPoly<F>>) -> Self {
        Self { table }
    }

    pub fn get(&self, h: u8, x: u8) -> Option<&NCPoly<F>> {
        self.table.get(&(h, x))
    }

    /// `h · x` for arbitrary `h` in the Hopf algebra and `x` in the module algebra.
    pub fn apply(
        &self,
        hopf: &SymbolicHopf<F>,
        alg: &Presentation<F>,
        h: &NCPoly<F>,
        x: &NCPoly<F>,
    ) -> Result<NCPoly<F>, Error> {
        let mut cx = Ctx { act: self, hopf, alg, memo: HashMap::new() };
        let mut out = NCPoly::zero();
        for (hw, c) in h.terms() {
            out = out.add(&cx.word_on_poly(hw, x)?.scale(c));
        }
        Ok(alg.nf(&out))
    }

    /// `h · r ≡ 0` for each algebra rule and Hopf generator, and each Hopf
    /// rule acting as zero on each algebra generator.
    pub fn verify_well_defined(&self, hopf: &SymbolicHopf<F>, alg: &Presentation<F>) -> Report {
        let hg = hopf.pres.generators();
        let ag = alg.generators();
        let mut rep = Report::new(format!("{}-action on {} is well defined", hopf.pres.name(), alg.name()));
        for r in alg.rules() {
            let rel = NCPoly::monomial(r.lhs.clone(), F::one()).sub(&r.rhs);
            for h in 0..hg.len() as u8 {
                let id = format!("{} · ({} - rhs) = 0", hg[h as usize], fmt_word(ag, &r.lhs));
                rep.push(match self.apply(hopf, alg, &NCPoly::gen(h), &rel) {
                    Ok(v) if v.is_zero() => Check::pass(id),
                    Ok(v) => Check::fail(id, Failure::new(fmt_word(ag, &r.lhs), alg.fmt(&v), "0")),
                    Err(e) => Check::error(id, e.to_string()),
                });
            }
        }
        for r in hopf.pres.rules() {
            let rel = NCPoly::monomial(r.lhs.clone(), F::one()).sub(&r.rhs);
            for x in 0..ag.len() as u8 {
                let id = format!("({} - rhs) · {} = 0", fmt_word(hg, &r.lhs), ag[x as usize]);
                rep.push(match self.apply(hopf, alg, &rel, &NCPoly::gen(x)) {
                    Ok(v) if v.is_zero() => Check::pass(id),
                    Ok(v) => Check::fail(id, Failure::new(fmt_word(hg, &r.lhs), alg.fmt(&v), "0")),
                    Err(e) => Check::error(id, e.to_string()),
                });
            }
        }
        rep
    }
}

struct Ctx<'a, F: Field> {
    act: &'a GeneratorAction<F>,
    hopf: &'a SymbolicHopf<F>,
    alg: &'a Presentation<F>,
    memo: HashMap<(u8, Word), NCPoly<F>>,
}

impl<F: Field> Ctx<'_, F> {
    fn word_on_poly(&mut self, hw: &[u8], x: &NCPoly<F>) -> Result<NCPoly<F>, Error> {
        let mut cur = x.clone();
        for &g in hw.iter().rev() {
            let mut next = NCPoly::zero();
            for (w, c) in cur.terms() {
                next = next.add(&self.gen_on_word(g, w)?.scale(c));
            }
            cur = next;
        }
        Ok(cur)
    }

    fn gen_on_word(&mut self, g: u8, w: &[u8]) -> Result<NCPoly<F>, Error> {
        if let Some(v) = self.memo.get(&(g, w.to_vec())) {
            return Ok(v.clone());
        }
        let v = match w {
            [] => NCPoly::constant(self.hopf.counit_word(&[g])),
            [x] => self.act.get(g, *x).cloned().ok_or_else(|| {
                Error::Domain(format!(
                    "no action of {} on {}",
                    self.hopf.pres.generators()[g as usize],
                    self.alg.generators()[*x as usize]
                ))
            })?,
            [x, rest @ ..] => {
                let d = self.hopf.coproduct_word(&[g], 1);
                let mut acc = NCPoly::zero();
                let first = NCPoly::gen(*x);
                let tail = NCPoly::monomial(rest.to_vec(), F::one());
                for (legs, c) in d.terms() {
                    let l = self.word_on_poly(&legs[0], &first)?;
                    if l.is_zero() {
                        continue;
                    }
                    let r = self.word_on_poly(&legs[1], &tail)?;
                    acc = acc.add(&l.concat(&r).scale(c));
                }
                acc
            }
        };
        let v = self.alg.nf(&v);
        self.memo.insert((g, w.to_vec()), v.clone());
        Ok(v)
    }
}

/// Matrices for each generator of a presented algebra.
#[derive(Clone, Debug)]
pub struct PresentedRep<F: Field = LaurentFrac> {
    dim: usize,
    mats: Vec<Mat<F>>,
}

impl<F: Field> PresentedRep<F> {
    pub fn new(dim: usize, mats: Vec<Mat<F>>) -> Result<Self, Error> {
        if mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape(format!("representation matrices must be {dim}×{dim}")));
        }
        Ok(Self { dim, mats })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen(&self, g: u8) -> &Mat<F> {
        &self.mats[g as usize]
    }

    pub fn eval_word(&self, w: &[u8]) -> Mat<F> {
        w.iter().fold(Mat::identity(self.dim), |acc, &g| acc.mul(&self.mats[g as usize]))
    }

    pub fn eval(&self, x: &NCPoly<F>) -> Mat<F> {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (w, c) in x.terms() {
            m = m.add(&self.eval_word(w).scale(c));
        }
        m
    }

    /// Every rule maps to an equality of matrices.
    pub fn verify(&self, p: &Presentation<F>) -> Report {
        let mut rep = Report::new(format!("{}-dimensional representation of {}", self.dim, p.name()));
        if self.mats.len() != p.generators().len() {
            rep.push(Check::error("generator count", "one matrix per generator required"));
            return rep;
        }
        for r in p.rules() {
            let w = fmt_word(p.generators(), &r.lhs);
            let l = self.eval_word(&r.lhs);
            let rr = self.eval(&r.rhs);
            rep.record(
                format!("relation {w} -> {}", p.fmt(&r.rhs)),
                (l != rr).then(|| Failure::new(w.clone(), format!("{l:?}"), format!("{rr:?}"))),
            );
        }
        rep
    }
}

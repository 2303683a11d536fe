//! Module algebras, comodule algebras and the Yetter-Drinfeld condition.

mod braided;
mod matrix;

pub use braided::{
    action_from_form, coaction_from_r, t_iso, verify_coquasitriangular, verify_quasitriangular, verify_t, RMatrix,
    UniversalRForm,
};
pub use matrix::{
    beta_iso, elem_to_mat, endo_algebra, endo_conj_algebra, mat_to_elem, matrix_algebra_diagonal,
    matrix_algebra_nondiagonal, verify_beta, verify_iso, Representation,
};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::hopf::{fmt_elem, Elem, FinHopf, MultTable};
use crate::linalg::{Accum, SVec};
use crate::report::{Check, Failure, Report};
use crate::scalar::Rational;
use crate::Error;

/// Linear extension of a map on basis vectors.
pub fn lin(x: &Elem, f: impl Fn(usize) -> Elem) -> Elem {
    let mut acc = Accum::new();
    for (i, c) in x.iter() {
        acc.add_scaled(c, &f(i));
    }
    acc.finish()
}

/// Bilinear extension of a map on pairs of basis vectors.
pub fn bilin(x: &Elem, y: &Elem, f: impl Fn(usize, usize) -> Elem) -> Elem {
    let mut acc = Accum::new();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            acc.add_scaled(&(a * b), &f(i, j));
        }
    }
    acc.finish()
}

/// `x ⊗ y` with index `i * dy + j`.
pub fn tensor_elem(x: &Elem, y: &Elem, dy: usize) -> Elem {
    let mut raw = Vec::with_capacity(x.nnz() * y.nnz());
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            raw.push((i * dy + j, a * b));
        }
    }
    SVec::from_unsorted(raw)
}

pub fn tensor_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect()
}

/// A finite-dimensional unital associative algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    name: String,
    labels: Vec<String>,
    mult: MultTable,
}

impl FinAlgebra {
    pub fn new(name: &str, labels: Vec<String>, mult: MultTable) -> Result<Self, Error> {
        let a = Self::new_unchecked(name, labels, mult)?;
        let rep = a.verify();
        if rep.all_pass() {
            Ok(a)
        } else {
            Err(Error::Axioms(Box::new(rep)))
        }
    }

    pub fn new_unchecked(name: &str, labels: Vec<String>, mult: MultTable) -> Result<Self, Error> {
        if labels.len() != mult.dim() {
            return Err(Error::Shape("label count differs from dimension".into()));
        }
        Ok(Self { name: name.into(), labels, mult })
    }

    /// Builds the table from a product on basis pairs.
    pub fn from_fn(name: &str, labels: Vec<String>, unit: Elem, f: impl Fn(usize, usize) -> Elem) -> Result<Self, Error> {
        let d = labels.len();
        let table = (0..d * d).map(|k| f(k / d, k % d)).collect();
        Self::new(name, labels, MultTable::new(d, table, unit)?)
    }

    pub fn from_hopf(h: &FinHopf) -> Self {
        Self { name: h.name().into(), labels: h.labels().to_vec(), mult: h.algebra().clone() }
    }

    /// The ground field.
    pub fn ground() -> Self {
        let m = MultTable::new(1, vec![Elem::unit(0)], Elem::unit(0)).expect("1-dim");
        Self { name: "k".into(), labels: vec!["1".into()], mult: m }
    }

    /// Tensor product with componentwise multiplication.
    pub fn tensor(a: &FinAlgebra, b: &FinAlgebra) -> Self {
        let db = b.dim();
        Self::from_fn(
            &format!("{}⊗{}", a.name, b.name),
            tensor_labels(&a.labels, &b.labels),
            tensor_elem(a.unit(), b.unit(), db),
            |i, j| tensor_elem(a.mul_basis(i / db, j / db), b.mul_basis(i % db, j % db), db),
        )
        .expect("tensor of algebras is an algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.mult.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &MultTable {
        &self.mult
    }

    pub fn unit(&self) -> &Elem {
        self.mult.unit()
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        self.mult.mul(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        self.mult.mul_basis(i, j)
    }

    pub fn fmt(&self, x: &Elem) -> String {
        fmt_elem(&self.labels, x)
    }

    pub fn verify(&self) -> Report {
        let mut rep = Report::new(format!("algebra axioms for {}", self.name));
        for c in self.mult.verify(&self.labels) {
            rep.push(c);
        }
        rep
    }

    /// The inverse of `x`, if it exists, by solving `x·y = 1`.
    pub fn inverse(&self, x: &Elem) -> Option<Elem> {
        let d = self.dim();
        let left = crate::linalg::Mat::from_rows(
            (0..d).map(|r| (0..d).map(|c| self.mul(x, &Elem::unit(c)).get(r)).collect()).collect(),
        );
        let inv = left.inverse()?;
        let y = SVec::from_dense(&inv.apply(&self.unit().to_dense(d)));
        (self.mul(&y, x) == *self.unit()).then_some(y)
    }
}

/// Constants of `H ⊗ A → A`: `table[h * adim + a] = h_h · a_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMap {
    hdim: usize,
    adim: usize,
    table: Vec<Elem>,
}

impl ActionMap {
    pub fn new(hdim: usize, adim: usize, table: Vec<Elem>) -> Result<Self, Error> {
        if table.len() != hdim * adim || table.iter().any(|e| e.max_index().is_some_and(|m| m >= adim)) {
            return Err(Error::Shape("action table shape".into()));
        }
        Ok(Self { hdim, adim, table })
    }

    pub fn from_fn(hdim: usize, adim: usize, f: impl Fn(usize, usize) -> Elem) -> Self {
        Self { hdim, adim, table: (0..hdim * adim).map(|k| f(k / adim, k % adim)).collect() }
    }

    /// `h · a = ε(h) a`.
    pub fn trivial(h: &FinHopf, adim: usize) -> Self {
        Self::from_fn(h.dim(), adim, |i, j| Elem::single(j, h.counit_basis(i).clone()))
    }

    /// `g · x = g⁽⁰⁾ x S(g⁽¹⁾)`.
    pub fn adjoint(h: &FinHopf) -> Self {
        Self::from_fn(h.dim(), h.dim(), |g, x| {
            let mut acc = Accum::new();
            for (p, q, c) in h.coprod_basis(g) {
                acc.add_scaled(c, &h.mul(h.mul_basis(*p, x), h.s_basis(*q)));
            }
            acc.finish()
        })
    }

    pub fn hdim(&self) -> usize {
        self.hdim
    }

    pub fn adim(&self) -> usize {
        self.adim
    }

    pub fn act_basis(&self, h: usize, a: usize) -> &Elem {
        &self.table[h * self.adim + a]
    }

    pub fn act(&self, h: &Elem, a: &Elem) -> Elem {
        bilin(h, a, |i, j| self.act_basis(i, j).clone())
    }

    pub fn act_on(&self, h: usize, a: &Elem) -> Elem {
        lin(a, |j| self.act_basis(h, j).clone())
    }
}

/// Constants of `ρ: A → A ⊗ H`; `table[a]` has index `j * hdim + k` for `a_j ⊗ h_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionMap {
    adim: usize,
    hdim: usize,
    table: Vec<Elem>,
}

impl CoactionMap {
    pub fn new(adim: usize, hdim: usize, table: Vec<Elem>) -> Result<Self, Error> {
        if table.len() != adim || table.iter().any(|e| e.max_index().is_some_and(|m| m >= adim * hdim)) {
            return Err(Error::Shape("coaction table shape".into()));
        }
        Ok(Self { adim, hdim, table })
    }

    pub fn from_fn(adim: usize, hdim: usize, f: impl Fn(usize) -> Elem) -> Self {
        Self { adim, hdim, table: (0..adim).map(f).collect() }
    }

    /// `a ↦ a ⊗ 1`.
    pub fn trivial(h: &FinHopf, adim: usize) -> Self {
        Self::from_fn(adim, h.dim(), |a| tensor_elem(&Elem::unit(a), h.unit(), h.dim()))
    }

    pub fn adim(&self) -> usize {
        self.adim
    }

    pub fn hdim(&self) -> usize {
        self.hdim
    }

    pub fn coact_basis(&self, a: usize) -> &Elem {
        &self.table[a]
    }

    pub fn coact(&self, a: &Elem) -> Elem {
        lin(a, |j| self.table[j].clone())
    }

    /// Pairs `(a_j, h_k, c)` of `ρ(a_a)`.
    pub fn legs(&self, a: usize) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.table[a].iter().map(move |(idx, c)| (idx / self.hdim, idx % self.hdim, c))
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// Shifts every coefficient by the matching entry of `delta`.
    pub fn perturbed(&self, delta: &[Elem]) -> Self {
        Self {
            adim: self.adim,
            hdim: self.hdim,
            table: self.table.iter().zip(delta).map(|(a, d)| a.add(d)).collect(),
        }
    }
}

/// An algebra with an action of `H` and optionally a coaction.
#[derive(Clone, Debug)]
pub struct HAlgebra {
    pub name: String,
    pub algebra: FinAlgebra,
    pub hopf: Arc<FinHopf>,
    pub action: ActionMap,
    pub coaction: Option<CoactionMap>,
}

impl HAlgebra {
    /// Validates the module-algebra laws, and the Yetter-Drinfeld laws when a coaction is given.
    pub fn new(
        name: &str,
        algebra: FinAlgebra,
        hopf: Arc<FinHopf>,
        action: ActionMap,
        coaction: Option<CoactionMap>,
    ) -> Result<Self, Error> {
        let a = Self::new_unchecked(name, algebra, hopf, action, coaction)?;
        let mut rep = verify_module_algebra(&a.hopf, &a.algebra, &a.action);
        if a.coaction.is_some() {
            rep.absorb("yd", verify_yd(&a)?);
        }
        if rep.all_pass() {
            Ok(a)
        } else {
            Err(Error::Axioms(Box::new(rep)))
        }
    }

    pub fn new_unchecked(
        name: &str,
        algebra: FinAlgebra,
        hopf: Arc<FinHopf>,
        action: ActionMap,
        coaction: Option<CoactionMap>,
    ) -> Result<Self, Error> {
        if action.hdim != hopf.dim() || action.adim != algebra.dim() {
            return Err(Error::Shape("action dimensions".into()));
        }
        if let Some(c) = &coaction {
            if c.hdim != hopf.dim() || c.adim != algebra.dim() {
                return Err(Error::Shape("coaction dimensions".into()));
            }
        }
        Ok(Self { name: name.into(), algebra, hopf, action, coaction })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn act(&self, h: &Elem, a: &Elem) -> Elem {
        self.action.act(h, a)
    }

    pub fn act_basis(&self, h: usize, a: usize) -> &Elem {
        self.action.act_basis(h, a)
    }

    pub fn coaction(&self) -> Result<&CoactionMap, Error> {
        self.coaction.as_ref().ok_or_else(|| Error::Domain(format!("{} has no coaction", self.name)))
    }

    pub fn with_coaction(&self, name: &str, c: CoactionMap) -> Result<Self, Error> {
        Self::new(name, self.algebra.clone(), self.hopf.clone(), self.action.clone(), Some(c))
    }

    /// Passes [`verify_yd`].
    pub fn is_yd(&self) -> bool {
        verify_yd(self).map(|r| r.all_pass()).unwrap_or(false)
    }

    /// `A` with the trivial action and coaction.
    pub fn trivial(hopf: Arc<FinHopf>, algebra: FinAlgebra) -> Result<Self, Error> {
        let act = ActionMap::trivial(&hopf, algebra.dim());
        let co = Some(CoactionMap::trivial(&hopf, algebra.dim()));
        let name = format!("{} (trivial)", algebra.name());
        Self::new(&name, algebra, hopf, act, co)
    }

    /// `H` acting on itself by `g·h = g⁽⁰⁾hS(g⁽¹⁾)` without coaction.
    pub fn adjoint(hopf: Arc<FinHopf>) -> Result<Self, Error> {
        let act = ActionMap::adjoint(&hopf);
        let name = format!("{} (adjoint)", hopf.name());
        Self::new(&name, FinAlgebra::from_hopf(&hopf), hopf, act, None)
    }

    /// `H` with the adjoint action and `ρ(h) = h⁽¹⁾ ⊗ S⁻¹(h⁽⁰⁾)`.
    pub fn self_yd(hopf: Arc<FinHopf>) -> Result<Self, Error> {
        let h = &hopf;
        let d = h.dim();
        let co = CoactionMap::from_fn(d, d, |i| {
            let mut acc = Accum::new();
            for (p, q, c) in h.coprod_basis(i) {
                acc.add_scaled(c, &tensor_elem(&Elem::unit(*q), h.s_inv_basis(*p), d));
            }
            acc.finish()
        });
        let act = ActionMap::adjoint(h);
        let name = format!("{} (self Yetter-Drinfeld)", h.name());
        Self::new(&name, FinAlgebra::from_hopf(h), hopf.clone(), act, Some(co))
    }
}

/// Module and module-algebra laws on all basis tuples.
pub fn verify_module_algebra(h: &FinHopf, a: &FinAlgebra, act: &ActionMap) -> Report {
    let mut rep = Report::new(format!("{} is a {}-module algebra", a.name(), h.name()));
    if act.hdim != h.dim() || act.adim != a.dim() {
        rep.push(Check::error("shape", "action dimensions do not match"));
        return rep;
    }
    let (dh, da) = (h.dim(), a.dim());
    let hl = h.labels();
    let al = a.labels();
    let e = |i: usize| Elem::unit(i);

    let unit_acts = (0..da).find_map(|j| {
        let v = act.act(h.unit(), &e(j));
        (v != e(j)).then(|| Failure::new(format!("(1, {})", al[j]), a.fmt(&v), &al[j]))
    });
    rep.record("1·a = a", unit_acts);

    let assoc = (0..dh).find_map(|g| {
        (0..dh).find_map(|k| {
            (0..da).find_map(|j| {
                let l = act.act(h.mul_basis(g, k), &e(j));
                let r = act.act_on(g, act.act_basis(k, j));
                (l != r).then(|| Failure::new(format!("({}, {}, {})", hl[g], hl[k], al[j]), a.fmt(&l), a.fmt(&r)))
            })
        })
    });
    rep.record("(gh)·a = g·(h·a)", assoc);

    let leibniz = (0..dh).find_map(|g| {
        (0..da).find_map(|i| {
            (0..da).find_map(|j| {
                let l = act.act_on(g, a.mul_basis(i, j));
                let mut acc = Accum::new();
                for (p, q, c) in h.coprod_basis(g) {
                    acc.add_scaled(c, &a.mul(act.act_basis(*p, i), act.act_basis(*q, j)));
                }
                let r = acc.finish();
                (l != r).then(|| Failure::new(format!("({}, {}, {})", hl[g], al[i], al[j]), a.fmt(&l), a.fmt(&r)))
            })
        })
    });
    rep.record("h·(ab) = (h⁽⁰⁾·a)(h⁽¹⁾·b)", leibniz);

    let unit_law = (0..dh).find_map(|g| {
        let l = act.act_on(g, a.unit());
        let r = a.unit().scale(h.counit_basis(g));
        (l != r).then(|| Failure::new(hl[g].clone(), a.fmt(&l), a.fmt(&r)))
    });
    rep.record("h·1 = ε(h)1", unit_law);
    rep
}

fn fmt_pair(a: &FinAlgebra, h: &FinHopf, x: &Elem) -> String {
    fmt_elem(&tensor_labels(a.labels(), h.labels()), x)
}

/// Comodule-algebra laws for `ρ: A → A ⊗ H^op`.
pub fn verify_comodule_algebra(h: &FinHopf, a: &FinAlgebra, co: &CoactionMap) -> Vec<Check> {
    let (dh, da) = (h.dim(), a.dim());
    let al = a.labels();
    let e = |i: usize| Elem::unit(i);

    let counit = (0..da).find_map(|j| {
        let mut acc = Accum::new();
        for (x, y, c) in co.legs(j) {
            acc.add(x, &(c * h.counit_basis(y)));
        }
        let l = acc.finish();
        (l != e(j)).then(|| Failure::new(al[j].clone(), a.fmt(&l), &al[j]))
    });

    let coassoc = (0..da).find_map(|j| {
        let mut l = Accum::new();
        let mut r = Accum::new();
        for (x, y, c) in co.legs(j) {
            for (x2, y2, c2) in co.legs(x) {
                l.add((x2 * dh + y2) * dh + y, &(c * c2));
            }
            for (p, q, d) in h.coprod_basis(y) {
                r.add((x * dh + p) * dh + q, &(c * d));
            }
        }
        let (l, r) = (l.finish(), r.finish());
        (l != r).then(|| Failure::new(al[j].clone(), format!("{l:?}"), format!("{r:?}")))
    });

    let mult = (0..da).find_map(|i| {
        (0..da).find_map(|j| {
            let l = co.coact(a.mul_basis(i, j));
            let mut acc = Accum::new();
            for (x, y, c) in co.legs(i) {
                for (u, v, d) in co.legs(j) {
                    acc.add_scaled(&(c * d), &tensor_elem(a.mul_basis(x, u), h.mul_basis(v, y), dh));
                }
            }
            let r = acc.finish();
            (l != r).then(|| Failure::new(format!("({}, {})", al[i], al[j]), fmt_pair(a, h, &l), fmt_pair(a, h, &r)))
        })
    });

    let unit = {
        let l = co.coact(a.unit());
        let r = tensor_elem(a.unit(), h.unit(), dh);
        (l != r).then(|| Failure::new("1", fmt_pair(a, h, &l), fmt_pair(a, h, &r)))
    };

    vec![
        Check::from_result("(id⊗ε)ρ = id", counit),
        Check::from_result("(ρ⊗id)ρ = (id⊗Δ)ρ", coassoc),
        Check::from_result("ρ(ab) = a₍₀₎b₍₀₎ ⊗ b₍₁₎a₍₁₎", mult),
        Check::from_result("ρ(1) = 1⊗1", unit),
    ]
}

/// `(h⁽¹⁾·a)₍₀₎ ⊗ (h⁽¹⁾·a)₍₁₎h⁽⁰⁾ = h⁽⁰⁾·a₍₀₎ ⊗ h⁽¹⁾a₍₁₎` on all basis pairs.
pub fn yd_condition(h: &FinHopf, a: &FinAlgebra, act: &ActionMap, co: &CoactionMap) -> Option<Failure> {
    let (dh, da) = (h.dim(), a.dim());
    (0..dh).find_map(|i| {
        (0..da).find_map(|j| {
            let mut l = Accum::new();
            let mut r = Accum::new();
            for (p, q, c) in h.coprod_basis(i) {
                let rho = co.coact(act.act_basis(*q, j));
                for (idx, v) in rho.iter() {
                    let (x, y) = (idx / dh, idx % dh);
                    for (z, w) in h.mul_basis(y, *p).iter() {
                        l.add(x * dh + z, &(&(c * v) * w));
                    }
                }
                for (x, y, v) in co.legs(j) {
                    r.add_scaled(&(c * v), &tensor_elem(act.act_basis(*p, x), h.mul_basis(*q, y), dh));
                }
            }
            let (l, r) = (l.finish(), r.finish());
            (l != r).then(|| {
                Failure::new(format!("({}, {})", h.labels()[i], a.labels()[j]), fmt_pair(a, h, &l), fmt_pair(a, h, &r))
            })
        })
    })
}

/// `ρ(h·a) = h⁽¹⁾·a₍₀₎ ⊗ h⁽²⁾a₍₁₎S⁻¹(h⁽⁰⁾)` on all basis pairs.
pub fn yd_condition_alt(h: &FinHopf, a: &FinAlgebra, act: &ActionMap, co: &CoactionMap) -> Option<Failure> {
    let (dh, da) = (h.dim(), a.dim());
    (0..dh).find_map(|i| {
        let legs = h.delta_basis(i, 2);
        (0..da).find_map(|j| {
            let l = co.coact(act.act_basis(i, j));
            let mut r = Accum::new();
            for (k, c) in legs.iter() {
                for (x, y, v) in co.legs(j) {
                    let hy = h.mul(h.mul_basis(k[2], y), h.s_inv_basis(k[0]));
                    r.add_scaled(&(c * v), &tensor_elem(act.act_basis(k[1], x), &hy, dh));
                }
            }
            let r = r.finish();
            (l != r).then(|| {
                Failure::new(format!("({}, {})", h.labels()[i], a.labels()[j]), fmt_pair(a, h, &l), fmt_pair(a, h, &r))
            })
        })
    })
}

/// Perturbs the coactions of `structures` at random and checks that both
/// forms of the Yetter-Drinfeld condition give the same verdict each time.
pub fn yd_perturbation_suite(structures: &[HAlgebra], count: usize, seed: u64) -> Report {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new(format!("YD condition forms agree under {count} perturbations (seed {seed})"));
    let pool: Vec<(&HAlgebra, &CoactionMap)> =
        structures.iter().filter_map(|a| a.coaction.as_ref().map(|c| (a, c))).collect();
    if pool.is_empty() {
        rep.push(Check::error("perturbations", "no structure with a coaction"));
        return rep;
    }
    let coefs = [Rational::from(1), Rational::from(-1), Rational::new(1, 2), Rational::from(2)];
    for k in 0..count {
        let (a, co) = pool[rng.gen_range(0..pool.len())];
        let (da, dh) = (a.dim(), a.hopf.dim());
        let mut delta = vec![Elem::new(); da];
        let j = rng.gen_range(0..da);
        let idx = rng.gen_range(0..da * dh);
        delta[j] = Elem::single(idx, coefs[rng.gen_range(0..coefs.len())].clone());
        let p = co.perturbed(&delta);
        let v9 = yd_condition(&a.hopf, &a.algebra, &a.action, &p);
        let v11 = yd_condition_alt(&a.hopf, &a.algebra, &a.action, &p);
        let id = format!("perturbation {k:02}");
        let note = format!("{}; ρ({}) += {}", a.name, a.algebra.labels()[j], idx);
        let r = (v9.is_some() != v11.is_some()).then(|| {
            let verdict = |f: &Option<Failure>| if f.is_some() { "fails" } else { "holds" };
            Failure::new(note.clone(), format!("first form {}", verdict(&v9)), format!("second form {}", verdict(&v11)))
        });
        let tag = if v9.is_some() { "both fail" } else { "both hold" };
        let c = Check::from_result(id, r);
        rep.push(if c.passed() { c.with_note(format!("{note}: {tag}")) } else { c });
    }
    rep
}

/// Comodule-algebra axioms, both forms of the Yetter-Drinfeld condition and
/// agreement of their verdicts.
pub fn verify_yd(ha: &HAlgebra) -> Result<Report, Error> {
    let co = ha.coaction()?;
    let h = &ha.hopf;
    let a = &ha.algebra;
    let mut rep = Report::new(format!("{} is a Yetter-Drinfeld {}-algebra", ha.name, h.name()));
    for c in verify_comodule_algebra(h, a, co) {
        rep.push(c);
    }
    let f9 = yd_condition(h, a, &ha.action, co);
    let f11 = yd_condition_alt(h, a, &ha.action, co);
    let agree = f9.is_some() == f11.is_some();
    rep.record("Yetter-Drinfeld condition", f9);
    rep.record("ρ(h·a) = h⁽¹⁾·a₍₀₎ ⊗ h⁽²⁾a₍₁₎S⁻¹(h⁽⁰⁾)", f11);
    rep.push(if agree {
        Check::pass("both forms agree")
    } else {
        Check::fail("both forms agree", Failure::new("verdicts", "differ", "agree"))
    });
    Ok(rep)
}

/// `A ⊗ H` with `g·(a⊗h) = g⁽¹⁾·a ⊗ g⁽⁰⁾hS(g⁽²⁾)` and `ρ(a⊗h) = a⊗h⁽¹⁾ ⊗ S⁻¹(h⁽⁰⁾)`.
pub fn yd_tensor_h(a: &HAlgebra) -> Result<HAlgebra, Error> {
    let h = &a.hopf;
    let (dh, da) = (h.dim(), a.dim());
    let alg = FinAlgebra::tensor(&a.algebra, &FinAlgebra::from_hopf(h));
    let act = ActionMap::from_fn(dh, da * dh, |g, idx| {
        let (x, y) = (idx / dh, idx % dh);
        let mut acc = Accum::new();
        for (k, c) in h.delta_basis(g, 2).iter() {
            let hy = h.mul(h.mul_basis(k[0], y), h.s_basis(k[2]));
            acc.add_scaled(c, &tensor_elem(a.act_basis(k[1], x), &hy, dh));
        }
        acc.finish()
    });
    let co = CoactionMap::from_fn(da * dh, dh, |idx| {
        let (x, y) = (idx / dh, idx % dh);
        let mut acc = Accum::new();
        for (p, q, c) in h.coprod_basis(y) {
            acc.add_scaled(c, &tensor_elem(&Elem::unit(x * dh + q), h.s_inv_basis(*p), dh));
        }
        acc.finish()
    });
    HAlgebra::new(&format!("{}⊗{}", a.algebra.name(), h.name()), alg, h.clone(), act, Some(co))
}

/// `A ⋊ H` with `(a⊗g)(b⊗h) = a(g⁽⁰⁾·b) ⊗ g⁽¹⁾h`, basis index `a * dim H + g`.
pub fn crossed_product(h: &FinHopf, a: &FinAlgebra, act: &ActionMap) -> Result<FinAlgebra, Error> {
    let dh = h.dim();
    FinAlgebra::from_fn(
        &format!("{}⋊{}", a.name(), h.name()),
        tensor_labels(a.labels(), h.labels()),
        tensor_elem(a.unit(), h.unit(), dh),
        |i, j| {
            let (x, g) = (i / dh, i % dh);
            let (y, k) = (j / dh, j % dh);
            let mut acc = Accum::new();
            for (p, q, c) in h.coprod_basis(g) {
                let ab = a.mul(&Elem::unit(x), act.act_basis(*p, y));
                acc.add_scaled(c, &tensor_elem(&ab, h.mul_basis(*q, k), dh));
            }
            acc.finish()
        },
    )
}

/// `A ⊗ B` with `(a⊗b)(c⊗d) = ac₍₀₎ ⊗ (c₍₁₎·b)d` and the diagonal action.
pub fn twisted_product(a: &HAlgebra, b: &HAlgebra) -> Result<HAlgebra, Error> {
    if !Arc::ptr_eq(&a.hopf, &b.hopf) && a.hopf.data() != b.hopf.data() {
        return Err(Error::Domain("algebras over different Hopf algebras".into()));
    }
    if !a.is_yd() {
        return Err(Error::Domain(format!("{} is not a Yetter-Drinfeld algebra", a.name)));
    }
    let co = a.coaction()?;
    let h = &a.hopf;
    let db = b.dim();
    let alg = FinAlgebra::from_fn(
        &format!("{}⊗{}", a.algebra.name(), b.algebra.name()),
        tensor_labels(a.algebra.labels(), b.algebra.labels()),
        tensor_elem(a.algebra.unit(), b.algebra.unit(), db),
        |i, j| {
            let (x, u) = (i / db, i % db);
            let (y, v) = (j / db, j % db);
            let mut acc = Accum::new();
            for (y0, y1, c) in co.legs(y) {
                let left = a.algebra.mul_basis(x, y0);
                let right = b.algebra.mul(b.act_basis(y1, u), &Elem::unit(v));
                acc.add_scaled(c, &tensor_elem(left, &right, db));
            }
            acc.finish()
        },
    )?;
    let act = diagonal_action(h, a, b);
    HAlgebra::new(&alg.name().to_string(), alg, h.clone(), act, None)
}

/// `h·(a⊗b) = h⁽⁰⁾·a ⊗ h⁽¹⁾·b`.
pub fn diagonal_action(h: &FinHopf, a: &HAlgebra, b: &HAlgebra) -> ActionMap {
    let db = b.dim();
    ActionMap::from_fn(h.dim(), a.dim() * db, |g, idx| {
        let (x, u) = (idx / db, idx % db);
        let mut acc = Accum::new();
        for (p, q, c) in h.coprod_basis(g) {
            acc.add_scaled(c, &tensor_elem(a.act_basis(*p, x), b.act_basis(*q, u), db));
        }
        acc.finish()
    })
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    #[serde(default)]
    name: Option<String>,
    dim: usize,
    basis: Vec<String>,
    mult: Vec<(usize, usize, usize, Rational)>,
    unit: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct ActionJson {
    hopf_dim: usize,
    algebra_dim: usize,
    act: Vec<(usize, usize, usize, Rational)>,
}

#[derive(Serialize, Deserialize)]
struct CoactionJson {
    algebra_dim: usize,
    hopf_dim: usize,
    coact: Vec<(usize, usize, usize, Rational)>,
}

impl FinAlgebra {
    pub fn to_json(&self) -> serde_json::Value {
        let j = AlgebraJson {
            name: Some(self.name.clone()),
            dim: self.dim(),
            basis: self.labels.clone(),
            mult: self.mult.triples(),
            unit: self.unit().to_dense(self.dim()),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let j: AlgebraJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.unit.len() != j.dim {
            return Err(Error::Shape("unit length differs from dim".into()));
        }
        let m = MultTable::from_triples(j.dim, &j.mult, SVec::from_dense(&j.unit))?;
        Self::new(j.name.as_deref().unwrap_or("user"), j.basis, m)
    }
}

impl ActionMap {
    pub fn to_json(&self) -> serde_json::Value {
        let mut act = Vec::new();
        for h in 0..self.hdim {
            for a in 0..self.adim {
                for (k, c) in self.act_basis(h, a).iter() {
                    act.push((h, a, k, c.clone()));
                }
            }
        }
        serde_json::to_value(ActionJson { hopf_dim: self.hdim, algebra_dim: self.adim, act }).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let j: ActionJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut raw = vec![Vec::new(); j.hopf_dim * j.algebra_dim];
        for (h, a, k, c) in j.act {
            if h >= j.hopf_dim || a >= j.algebra_dim || k >= j.algebra_dim {
                return Err(Error::Index(format!("action entry ({h},{a},{k})")));
            }
            raw[h * j.algebra_dim + a].push((k, c));
        }
        Self::new(j.hopf_dim, j.algebra_dim, raw.into_iter().map(SVec::from_unsorted).collect())
    }
}

impl CoactionMap {
    pub fn to_json(&self) -> serde_json::Value {
        let mut coact = Vec::new();
        for a in 0..self.adim {
            for (x, y, c) in self.legs(a) {
                coact.push((a, x, y, c.clone()));
            }
        }
        serde_json::to_value(CoactionJson { algebra_dim: self.adim, hopf_dim: self.hdim, coact }).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let j: CoactionJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut raw = vec![Vec::new(); j.algebra_dim];
        for (a, x, y, c) in j.coact {
            if a >= j.algebra_dim || x >= j.algebra_dim || y >= j.hopf_dim {
                return Err(Error::Index(format!("coaction entry ({a},{x},{y})")));
            }
            raw[a].push((x * j.hopf_dim + y, c));
        }
        Self::new(j.algebra_dim, j.hopf_dim, raw.into_iter().map(SVec::from_unsorted).collect())
    }
}

/// `x` is invariant when `h·x = ε(h)x` for every basis `h`.
pub fn invariance_failure(h: &FinHopf, act: &ActionMap, fmt: impl Fn(&Elem) -> String, x: &Elem) -> Option<Failure> {
    (0..h.dim()).find_map(|g| {
        let l = act.act_on(g, x);
        let r = x.scale(h.counit_basis(g));
        (l != r).then(|| Failure::new(h.labels()[g].clone(), fmt(&l), fmt(&r)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::linalg::Mat;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn sign_action_is_a_module_algebra() {
        let h = kc2();
        assert!(verify_module_algebra(&h, &sign_line_algebra(), &sign_action()).all_pass());
        let bad = ActionMap::from_fn(2, 2, |g, a| Elem::single(a, q(if g == 1 && a == 0 { -1 } else { 1 })));
        let rep = verify_module_algebra(&h, &sign_line_algebra(), &bad);
        assert!(!rep.find("h·1 = ε(h)1").unwrap().passed());
        let triv = ActionMap::trivial(&h, 2);
        assert!(verify_module_algebra(&h, &sign_line_algebra(), &triv).all_pass());
    }

    #[test]
    fn crossed_product_sign_rule() {
        let h = kc2();
        let cp = crossed_product(&h, &sign_line_algebra(), &sign_action()).unwrap();
        // y⊗g · y⊗1 = −1⊗g
        assert_eq!(cp.mul_basis(3, 2), &Elem::single(1, q(-1)));
        let triv = crossed_product(&h, &sign_line_algebra(), &ActionMap::trivial(&h, 2)).unwrap();
        assert_eq!(triv, FinAlgebra::tensor(&sign_line_algebra(), &FinAlgebra::from_hopf(&h)).renamed(triv.name()));
    }

    #[test]
    fn h4_self_yd_and_its_negative_control() {
        let h = sweedler_h4();
        let a = HAlgebra::self_yd(h.clone()).unwrap();
        let rep = verify_yd(&a).unwrap();
        assert!(rep.all_pass(), "{rep}");
        let bad = CoactionMap::trivial(&h, 4);
        let f = yd_condition(&h, &a.algebra, &a.action, &bad).expect("fails");
        assert_eq!(f.witness, "(x, g)");
        assert!(yd_condition_alt(&h, &a.algebra, &a.action, &bad).is_some());
        let adj = HAlgebra::adjoint(h).unwrap();
        assert!(matches!(verify_yd(&adj), Err(Error::Domain(_))));
    }

    #[test]
    fn cocommutative_trivial_coaction_is_yd() {
        for a in [sign_line(), HAlgebra::adjoint(ks3()).unwrap().with_coaction("adj", CoactionMap::trivial(&ks3(), 6)).unwrap()] {
            assert!(verify_yd(&a).unwrap().all_pass());
        }
    }

    #[test]
    fn yd_tensor_h_examples() {
        let k = HAlgebra::trivial(sweedler_h4(), FinAlgebra::ground()).unwrap();
        let t = yd_tensor_h(&k).unwrap();
        assert!(verify_yd(&t).unwrap().all_pass());
        let self_yd = HAlgebra::self_yd(sweedler_h4()).unwrap();
        assert_eq!(t.action, self_yd.action);
        assert_eq!(t.coaction, self_yd.coaction);
        let s = yd_tensor_h(&sign_line()).unwrap();
        assert!(verify_yd(&s).unwrap().all_pass());
        assert_eq!(s.action.act_on(1, s.algebra.unit()), *s.algebra.unit());
    }

    #[test]
    fn twisted_products() {
        let h = sweedler_h4();
        let a = HAlgebra::self_yd(h.clone()).unwrap();
        let b = HAlgebra::adjoint(h).unwrap();
        let t = twisted_product(&a, &b).unwrap();
        assert!(verify_module_algebra(&t.hopf, &t.algebra, &t.action).all_pass());
        let plain = twisted_product(&sign_line(), &sign_line()).unwrap();
        assert_eq!(plain.algebra.table(), FinAlgebra::tensor(&sign_line_algebra(), &sign_line_algebra()).table());
        assert!(twisted_product(&b, &a).is_err());
    }

    #[test]
    fn conjugation_on_regular_kc2() {
        let e = endo_conj_algebra(kc2(), &regular_kc2()).unwrap();
        assert_eq!(e.act_basis(1, 0), &Elem::unit(3));
        let id = mat_to_elem(&Mat::identity(2));
        assert_eq!(e.action.act_on(1, &id), id);
        let t = endo_conj_algebra(kc2(), &trivial_rep(&kc2())).unwrap();
        assert_eq!(t.action, ActionMap::trivial(&kc2(), 1));
    }

    #[test]
    fn matrix_structures_and_beta() {
        let v = regular_kc2();
        let nd = matrix_algebra_nondiagonal(&sign_line(), &v).unwrap();
        assert_eq!(nd.dim(), 8);
        let d = matrix_algebra_diagonal(&sign_line(), &v).unwrap();
        assert!(verify_module_algebra(&d.hopf, &d.algebra, &d.action).all_pass());
        let b = beta_iso(&sign_line(), &v, 1).unwrap();
        assert!(b.iter().enumerate().all(|(i, x)| *x == Elem::unit(i)));
        let h4 = HAlgebra::self_yd(sweedler_h4()).unwrap();
        let rep = verify_beta(&h4, &trivial_rep(&sweedler_h4())).unwrap();
        assert!(rep.all_pass(), "{rep}");
        let rep = verify_beta(&sign_line_braided(), &v).unwrap();
        assert!(rep.all_pass(), "{rep}");
        assert!(beta_iso(&HAlgebra::adjoint(sweedler_h4()).unwrap(), &trivial_rep(&sweedler_h4()), 1).is_err());
    }

    #[test]
    fn kc2_r_matrix_and_t() {
        let h = kc2();
        let rm = kc2_r_matrix();
        assert!(verify_quasitriangular(&h, &rm).all_pass());
        assert_eq!(rm.r_inv(), rm.r());
        let co = coaction_from_r(&h, 2, &sign_action(), &rm);
        assert_eq!(co.coact_basis(1), &Elem::unit(3));
        let rep = verify_t(&sign_line(), &regular_kc2(), &rm).unwrap();
        assert!(rep.all_pass(), "{rep}");
        let one = RMatrix::from_terms(&h, &[(0, 0, q(1))]).unwrap();
        assert!(verify_quasitriangular(&h, &one).all_pass());
        assert_eq!(coaction_from_r(&h, 2, &sign_action(), &one), CoactionMap::trivial(&h, 2));
        let bad = RMatrix::from_terms(&h, &[(1, 0, q(1))]).unwrap();
        assert!(!verify_quasitriangular(&h, &bad).all_pass());
        assert!(t_iso(&sign_line(), &regular_kc2(), &bad, 1).is_err());
    }

    #[test]
    fn coquasitriangular_forms() {
        let h = kc2();
        assert!(verify_coquasitriangular(&h, &kc2_form()).all_pass());
        let co = sign_line_braided().coaction.unwrap();
        let act = action_from_form(&h, &co, &kc2_form());
        assert_eq!(act, sign_action());
        let bad = verify_coquasitriangular(&h, &kc2_bad_form());
        assert!(!bad.checks[0].passed());
        let eps = UniversalRForm::with_inverse(&h, Mat::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(1)]])).unwrap();
        assert!(verify_coquasitriangular(&h, &eps).all_pass());
        let computed = UniversalRForm::with_inverse(&h, kc2_form().form().clone()).unwrap();
        assert_eq!(computed.inv(), kc2_form().inv());
    }

    #[test]
    fn json_round_trips() {
        let a = sign_line();
        assert_eq!(FinAlgebra::from_json(&a.algebra.to_json()).unwrap(), a.algebra);
        assert_eq!(ActionMap::from_json(&a.action.to_json()).unwrap(), a.action);
        let c = sign_line_braided().coaction.unwrap();
        assert_eq!(CoactionMap::from_json(&c.to_json()).unwrap(), c);
    }
}

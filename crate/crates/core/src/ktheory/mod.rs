//! Equivariant K-theory of Yetter-Drinfeld algebras and its pairing with
//! equivariant cyclic cohomology.

mod homotopy;
mod pairing;
mod symbolic;
mod trace;
#[cfg(test)]
mod tests;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use homotopy::*;
pub use pairing::*;
pub use symbolic::*;
pub use trace::*;

use crate::actions::{
    invariance_failure, matrix_algebra_diagonal, matrix_algebra_nondiagonal, mat_to_elem, tensor_elem, HAlgebra,
    Representation,
};
use crate::cyclic::r_of_h;
use crate::hopf::{Elem, FinHopf};
use crate::linalg::{Echelon, Mat, SVec};
use crate::report::{Failure, Report};
use crate::scalar::Rational;
use crate::Error;

/// Which `H`-algebra structure `A ⊗ End(V)` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Structure {
    /// Twisted product, diagonal action.
    Diagonal,
    /// Componentwise product, `h·(a⊗u) = h⁽¹⁾·a ⊗ h⁽⁰⁾uS(h⁽²⁾)`.
    NonDiagonal,
}

/// `A ⊗ End(V)` for a Yetter-Drinfeld algebra `A` and a representation `V`.
/// Basis index `a * d² + i * d + j` stands for `a ⊗ E_ij`.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    base: HAlgebra,
    rep: Representation,
    tag: Structure,
    alg: HAlgebra,
}

fn block_diag(x: &Mat, y: &Mat) -> Mat {
    let (p, q) = (x.rows(), y.rows());
    let mut m = Mat::zeros(p + q, p + q);
    for ((i, j), c) in x.entries() {
        m[(i, j)] = c.clone();
    }
    for ((i, j), c) in y.entries() {
        m[(p + i, p + j)] = c.clone();
    }
    m
}

impl MatrixAlgebra {
    pub fn new(base: &HAlgebra, rep: &Representation, tag: Structure) -> Result<Arc<Self>, Error> {
        if rep.verify(&base.hopf).failures().next().is_some() {
            return Err(Error::Domain(format!("{} is not a representation of {}", rep.name(), base.hopf.name())));
        }
        let alg = match tag {
            Structure::Diagonal => matrix_algebra_diagonal(base, rep)?,
            Structure::NonDiagonal => matrix_algebra_nondiagonal(base, rep)?,
        };
        Ok(Arc::new(Self { base: base.clone(), rep: rep.clone(), tag, alg }))
    }

    pub fn base(&self) -> &HAlgebra {
        &self.base
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn tag(&self) -> Structure {
        self.tag
    }

    pub fn halgebra(&self) -> &HAlgebra {
        &self.alg
    }

    pub fn hopf(&self) -> &Arc<FinHopf> {
        &self.base.hopf
    }

    /// Matrix size `dim V`.
    pub fn size(&self) -> usize {
        self.rep.dim()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `A ⊗ End(V ⊕ W)` with the same structure.
    pub fn sum(&self, other: &MatrixAlgebra) -> Result<Arc<Self>, Error> {
        self.compatible(other)?;
        let h = self.hopf();
        let mats = (0..h.dim()).map(|i| block_diag(self.rep.basis_mat(i), other.rep.basis_mat(i))).collect();
        let rep = Representation::new(h, &format!("{}⊕{}", self.rep.name(), other.rep.name()), mats)?;
        Self::new(&self.base, &rep, self.tag)
    }

    fn compatible(&self, other: &MatrixAlgebra) -> Result<(), Error> {
        if self.tag != other.tag {
            return Err(Error::Domain(format!("structure mismatch: {:?} vs {:?}", self.tag, other.tag)));
        }
        if self.base.algebra != other.base.algebra
            || self.base.action != other.base.action
            || self.base.hopf.data() != other.base.hopf.data()
        {
            return Err(Error::Domain(format!("different base algebras {} and {}", self.base.name, other.base.name)));
        }
        Ok(())
    }

    fn same(&self, other: &MatrixAlgebra) -> bool {
        self.compatible(other).is_ok() && self.rep == other.rep
    }

    pub fn zero(self: &Arc<Self>) -> MatrixAlgElem {
        MatrixAlgElem { alg: self.clone(), elem: Elem::new() }
    }

    pub fn one(self: &Arc<Self>) -> MatrixAlgElem {
        MatrixAlgElem { alg: self.clone(), elem: self.alg.algebra.unit().clone() }
    }

    pub fn element(self: &Arc<Self>, elem: Elem) -> Result<MatrixAlgElem, Error> {
        if elem.max_index().is_some_and(|i| i >= self.dim()) {
            return Err(Error::Shape(format!("element outside A ⊗ End(V) of dimension {}", self.dim())));
        }
        Ok(MatrixAlgElem { alg: self.clone(), elem })
    }

    /// `Σ a_k ⊗ m_k` from pairs (basis index of `A`, matrix).
    pub fn from_entries(self: &Arc<Self>, entries: &[(usize, Mat)]) -> Result<MatrixAlgElem, Error> {
        let d = self.size();
        let mut acc = Elem::new();
        for (a, m) in entries {
            if *a >= self.base.dim() || m.rows() != d || m.cols() != d {
                return Err(Error::Shape(format!("entry ({a}, {}×{}) does not fit A ⊗ M_{d}", m.rows(), m.cols())));
            }
            acc = acc.add(&tensor_elem(&Elem::unit(*a), &mat_to_elem(m), d * d));
        }
        Ok(MatrixAlgElem { alg: self.clone(), elem: acc })
    }
}

/// An element of some `A ⊗ End(V)`.
#[derive(Clone, Debug)]
pub struct MatrixAlgElem {
    alg: Arc<MatrixAlgebra>,
    elem: Elem,
}

impl PartialEq for MatrixAlgElem {
    fn eq(&self, o: &Self) -> bool {
        self.alg.same(&o.alg) && self.elem == o.elem
    }
}

impl MatrixAlgElem {
    pub fn algebra(&self) -> &Arc<MatrixAlgebra> {
        &self.alg
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn size(&self) -> usize {
        self.alg.size()
    }

    pub fn tag(&self) -> Structure {
        self.alg.tag
    }

    /// The `(i, j)` entry as an element of `A`.
    pub fn entry(&self, i: usize, j: usize) -> Elem {
        let d = self.size();
        let dd = d * d;
        SVec::from_unsorted(self.elem.iter().filter(|(k, _)| k % dd == i * d + j).map(|(k, c)| (k / dd, c.clone())).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let d = self.size();
        let labels = self.alg.base.algebra.labels();
        let entries: Vec<Vec<Vec<(String, String)>>> = (0..d)
            .map(|i| {
                (0..d).map(|j| self.entry(i, j).iter().map(|(a, c)| (labels[a].clone(), c.to_wire())).collect()).collect()
            })
            .collect();
        serde_json::json!({
            "size": d,
            "structure": self.tag(),
            "algebra": self.alg.base.name,
            "representation": self.alg.rep.name(),
            "entries": entries,
        })
    }

    fn check_same(&self, o: &Self) -> Result<(), Error> {
        if !self.alg.same(&o.alg) {
            return Err(Error::Shape("elements of different matrix algebras".into()));
        }
        Ok(())
    }

    fn with(&self, elem: Elem) -> Self {
        Self { alg: self.alg.clone(), elem }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, Error> {
        self.check_same(o)?;
        Ok(self.with(self.alg.alg.algebra.mul(&self.elem, &o.elem)))
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        self.check_same(o)?;
        Ok(self.with(self.elem.add(&o.elem)))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, Error> {
        self.check_same(o)?;
        Ok(self.with(self.elem.sub(&o.elem)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with(self.elem.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn fmt(&self) -> String {
        self.alg.alg.algebra.fmt(&self.elem)
    }

    pub fn inverse(&self) -> Option<Self> {
        self.alg.alg.algebra.inverse(&self.elem).map(|e| self.with(e))
    }

    fn invariance(&self) -> Option<Failure> {
        let a = &self.alg.alg;
        invariance_failure(&a.hopf, &a.action, |x| a.algebra.fmt(x), &self.elem)
    }

    /// `h·x = ε(h)x` for every basis `h`.
    pub fn is_invariant(&self) -> Report {
        let mut rep = Report::new(format!("invariance in {}", self.alg.alg.name));
        rep.record("h·x = ε(h)x", self.invariance());
        rep
    }

    pub fn is_idempotent(&self) -> Report {
        let mut rep = Report::new(format!("idempotence in {}", self.alg.alg.name));
        let sq = self.alg.alg.algebra.mul(&self.elem, &self.elem);
        let f = (sq != self.elem).then(|| {
            let k = sq.sub(&self.elem).leading().map(|(k, _)| k).expect("nonzero");
            Failure::new(self.alg.alg.algebra.labels()[k].clone(), self.alg.alg.algebra.fmt(&sq), self.fmt())
        });
        rep.record("x² = x", f);
        rep
    }

    /// `x` placed as the block at `(row, col)` of an element of `target`.
    pub fn embed(&self, target: &Arc<MatrixAlgebra>, row: usize, col: usize) -> Result<Self, Error> {
        self.alg.compatible(target)?;
        let (d, t) = (self.size(), target.size());
        if row + d > t || col + d > t {
            return Err(Error::Shape(format!("a {d}×{d} block does not fit at ({row}, {col}) in size {t}")));
        }
        let (dd, tt) = (d * d, t * t);
        let elem = self.elem.map_indices(|k| {
            let (a, i, j) = (k / dd, (k % dd) / d, k % d);
            a * tt + (row + i) * t + col + j
        });
        Ok(Self { alg: target.clone(), elem })
    }

    /// The block-diagonal sum in `A ⊗ End(V ⊕ W)`.
    pub fn direct_sum(&self, o: &Self) -> Result<Self, Error> {
        let big = self.alg.sum(&o.alg)?;
        let d = self.size();
        self.embed(&big, 0, 0)?.add(&o.embed(&big, d, d)?)
    }

    /// `e ⊕ 0` with a zero block of representation `w`.
    pub fn pad(&self, w: &Representation) -> Result<Self, Error> {
        let other = MatrixAlgebra::new(&self.alg.base, w, self.tag())?;
        self.direct_sum(&other.zero())
    }
}

fn invariant_idempotent(e: &MatrixAlgElem) -> Result<(), Error> {
    if let Some(f) = e.invariance() {
        return Err(Error::Domain(format!("not invariant: h = {}, h·e = {}", f.witness, f.lhs)));
    }
    if !e.is_idempotent().all_pass() {
        return Err(Error::Domain("not an idempotent".into()));
    }
    Ok(())
}

fn record_eq(rep: &mut Report, identity: &str, l: &MatrixAlgElem, r: &MatrixAlgElem) {
    let f = (l.elem != r.elem).then(|| {
        let k = l.elem.sub(&r.elem).leading().map(|(k, _)| k).expect("nonzero");
        Failure::new(l.alg.alg.algebra.labels()[k].clone(), l.fmt(), r.fmt())
    });
    rep.record(identity, f);
}

fn record_invariant(rep: &mut Report, identity: &str, x: &MatrixAlgElem) {
    rep.record(identity, x.invariance());
}

/// Murray-von Neumann equivalence of `e ∈ A⊗End(V)` and `e′ ∈ A⊗End(W)`,
/// with `γ₁ ∈ A⊗Hom(V, W)` and `γ₂ ∈ A⊗Hom(W, V)` given as elements of
/// `A⊗End(V ⊕ W)` supported in the off-diagonal blocks.
pub fn verify_mvn(e: &MatrixAlgElem, e2: &MatrixAlgElem, g1: &MatrixAlgElem, g2: &MatrixAlgElem) -> Result<Report, Error> {
    let big = e.alg.sum(&e2.alg)?;
    if !g1.alg.same(&big) || !g2.alg.same(&big) {
        return Err(Error::Shape(format!("certificates must live in A ⊗ End of size {}", big.size())));
    }
    let (d, t) = (e.size(), big.size());
    let mut rep = Report::new("Murray-von Neumann equivalence");
    let outside = |x: &MatrixAlgElem, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| {
        x.elem.iter().find_map(|(k, _)| {
            let (i, j) = ((k % (t * t)) / t, k % t);
            (!rows.contains(&i) || !cols.contains(&j)).then(|| Failure::new(big.alg.algebra.labels()[k].clone(), x.fmt(), "0"))
        })
    };
    rep.record("γ₁ ∈ A ⊗ Hom(V, W)", outside(g1, d..t, 0..d));
    rep.record("γ₂ ∈ A ⊗ Hom(W, V)", outside(g2, 0..d, d..t));
    record_invariant(&mut rep, "γ₁ is invariant", g1);
    record_invariant(&mut rep, "γ₂ is invariant", g2);
    record_eq(&mut rep, "γ₂γ₁ = e", &g2.mul(g1)?, &e.embed(&big, 0, 0)?);
    record_eq(&mut rep, "γ₁γ₂ = e′", &g1.mul(g2)?, &e2.embed(&big, d, d)?);
    Ok(rep)
}

/// `γ e γ⁻¹ = e′` with `γ`, `γ⁻¹` invariant and mutually inverse.
pub fn verify_similarity(e: &MatrixAlgElem, e2: &MatrixAlgElem, g: &MatrixAlgElem, g_inv: &MatrixAlgElem) -> Result<Report, Error> {
    for x in [e2, g, g_inv] {
        e.check_same(x)?;
    }
    let mut rep = Report::new("similarity");
    record_invariant(&mut rep, "γ is invariant", g);
    record_invariant(&mut rep, "γ⁻¹ is invariant", g_inv);
    let one = e.alg.one();
    record_eq(&mut rep, "γγ⁻¹ = 1", &g.mul(g_inv)?, &one);
    record_eq(&mut rep, "γ⁻¹γ = 1", &g_inv.mul(g)?, &one);
    record_eq(&mut rep, "γeγ⁻¹ = e′", &g.mul(e)?.mul(g_inv)?, e2);
    Ok(rep)
}

/// A relation between two registered idempotents.
#[derive(Clone, Debug)]
pub enum Certificate {
    Mvn { g1: MatrixAlgElem, g2: MatrixAlgElem },
    Similar { g: MatrixAlgElem, g_inv: MatrixAlgElem },
    /// The second class is the first padded by a zero block of `w`.
    ZeroPadding { w: Representation },
}

/// Registered invariant idempotents and certified relations between them.
#[derive(Clone, Debug, Default)]
pub struct K0Registry {
    names: Vec<String>,
    elems: Vec<MatrixAlgElem>,
    parent: Vec<usize>,
    log: Vec<(usize, usize, Report)>,
}

impl K0Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, name: &str, e: MatrixAlgElem) -> Result<usize, Error> {
        invariant_idempotent(&e)?;
        if self.names.iter().any(|n| n == name) {
            return Err(Error::Domain(format!("{name} is already registered")));
        }
        self.names.push(name.into());
        self.elems.push(e);
        self.parent.push(self.parent.len());
        Ok(self.parent.len() - 1)
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn get(&self, i: usize) -> &MatrixAlgElem {
        &self.elems[i]
    }

    fn root(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    /// Checks the certificate; on success the two classes are merged.
    pub fn relate(&mut self, i: usize, j: usize, cert: Certificate) -> Result<Report, Error> {
        let n = self.elems.len();
        if i >= n || j >= n {
            return Err(Error::Index(format!("class {} of {n}", i.max(j))));
        }
        let (e, e2) = (&self.elems[i], &self.elems[j]);
        let rep = match &cert {
            Certificate::Mvn { g1, g2 } => verify_mvn(e, e2, g1, g2)?,
            Certificate::Similar { g, g_inv } => verify_similarity(e, e2, g, g_inv)?,
            Certificate::ZeroPadding { w } => {
                let mut rep = Report::new("zero padding");
                record_eq(&mut rep, "e′ = e ⊕ 0", e2, &e.pad(w)?);
                rep
            }
        };
        if rep.all_pass() {
            let (a, b) = (self.root(i), self.root(j));
            self.parent[a.max(b)] = a.min(b);
        }
        self.log.push((i, j, rep.clone()));
        Ok(rep)
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.root(i) == self.root(j)
    }

    /// Names grouped by class, in registration order.
    pub fn classes(&self) -> Vec<Vec<String>> {
        let mut out: Vec<(usize, Vec<String>)> = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            let r = self.root(i);
            match out.iter_mut().find(|(k, _)| *k == r) {
                Some((_, v)) => v.push(name.clone()),
                None => out.push((r, vec![name.clone()])),
            }
        }
        out.into_iter().map(|(_, v)| v).collect()
    }

    pub fn log(&self) -> &[(usize, usize, Report)] {
        &self.log
    }
}

/// `R(H)`: functionals with `f(S²(h⁽⁰⁾)gS(h⁽¹⁾)) = ε(h)f(g)`.
#[derive(Clone, Debug)]
pub struct InvariantFunctionalSpace {
    hopf: Arc<FinHopf>,
    basis: Vec<SVec>,
    ech: Echelon,
}

pub fn invariant_functionals(h: &Arc<FinHopf>) -> Result<InvariantFunctionalSpace, Error> {
    let basis = r_of_h(h)?;
    let mut ech = Echelon::new(h.dim());
    for v in &basis {
        ech.insert(v.clone());
    }
    Ok(InvariantFunctionalSpace { hopf: h.clone(), basis, ech })
}

impl InvariantFunctionalSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    pub fn hopf(&self) -> &Arc<FinHopf> {
        &self.hopf
    }

    pub fn contains(&self, f: &SVec) -> bool {
        self.ech.contains(f)
    }
}

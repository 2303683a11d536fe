//! Finite-dimensional Hopf algebras given by structure constants.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{Accum, SVec};
use crate::report::{Check, Failure, Report};
use crate::scalar::Rational;
use crate::Error;

/// An element of a finite-dimensional space, as coordinates in its basis.
pub type Elem = SVec<Rational>;

/// Multiplication constants of a unital algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    dim: usize,
    table: Vec<Elem>,
    unit: Elem,
}

impl MultTable {
    /// `table[i*dim + j] = e_i e_j`.
    pub fn new(dim: usize, table: Vec<Elem>, unit: Elem) -> Result<Self, Error> {
        if table.len() != dim * dim {
            return Err(Error::Shape(format!("expected {} products, got {}", dim * dim, table.len())));
        }
        if table.iter().chain(std::iter::once(&unit)).any(|e| e.max_index().is_some_and(|m| m >= dim)) {
            return Err(Error::Shape("basis index out of range".into()));
        }
        Ok(Self { dim, table, unit })
    }

    pub fn from_triples(dim: usize, triples: &[(usize, usize, usize, Rational)], unit: Elem) -> Result<Self, Error> {
        let mut raw: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Shape(format!("product index ({i},{j},{k}) out of range")));
            }
            raw[i * dim + j].push((*k, c.clone()));
        }
        Self::new(dim, raw.into_iter().map(SVec::from_unsorted).collect(), unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Elem {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut acc = Accum::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), self.mul_basis(i, j));
            }
        }
        acc.finish()
    }

    pub fn triples(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.mul_basis(i, j).iter() {
                    out.push((i, j, k, c.clone()));
                }
            }
        }
        out
    }

    /// Unit and associativity checks on all basis pairs and triples.
    pub fn verify(&self, labels: &[String]) -> Vec<Check> {
        let fmt = |x: &Elem| fmt_elem(labels, x);
        let mut unit_fail = None;
        for i in 0..self.dim {
            let e = Elem::unit(i);
            let l = self.mul(&self.unit, &e);
            let r = self.mul(&e, &self.unit);
            if l != e || r != e {
                unit_fail = Some(Failure::new(labels[i].clone(), fmt(&l), fmt(&r)));
                break;
            }
        }
        let mut assoc_fail = None;
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul_basis(i, j);
                for k in 0..self.dim {
                    let l = self.mul(ij, &Elem::unit(k));
                    let r = self.mul(&Elem::unit(i), self.mul_basis(j, k));
                    if l != r {
                        assoc_fail = Some(Failure::new(
                            format!("({},{},{})", labels[i], labels[j], labels[k]),
                            fmt(&l),
                            fmt(&r),
                        ));
                        break 'outer;
                    }
                }
            }
        }
        vec![Check::from_result("unit", unit_fail), Check::from_result("associativity", assoc_fail)]
    }
}

pub fn fmt_elem(labels: &[String], x: &Elem) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (i, c)) in x.iter().enumerate() {
        let neg = c.signum() < 0;
        let a = c.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            s.push_str(&format!("{a}*"));
        }
        s.push_str(labels.get(i).map(String::as_str).unwrap_or("?"));
    }
    s
}

/// An element of `V_0 ⊗ … ⊗ V_{n}` stored sparsely by multi-index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl TensorElem {
    pub fn zero(dims: Vec<usize>) -> Self {
        Self { dims, terms: BTreeMap::new() }
    }

    pub fn from_terms(dims: Vec<usize>, terms: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> Result<Self, Error> {
        let mut t = Self::zero(dims);
        for (k, c) in terms {
            t.add_term(k, &c)?;
        }
        Ok(t)
    }

    pub fn add_term(&mut self, key: Vec<usize>, c: &Rational) -> Result<(), Error> {
        if key.len() != self.dims.len() || key.iter().zip(&self.dims).any(|(i, d)| i >= d) {
            return Err(Error::Shape(format!("multi-index {key:?} outside {:?}", self.dims)));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies a linear map to one leg; `f(i)` is the image of basis vector `i`.
    pub fn contract(&self, leg: usize, new_dim: usize, f: impl Fn(usize) -> Elem) -> Result<Self, Error> {
        if leg >= self.arity() {
            return Err(Error::Index(format!("leg {leg} of a {}-fold tensor", self.arity())));
        }
        let mut dims = self.dims.clone();
        dims[leg] = new_dim;
        let mut out = Self::zero(dims);
        for (k, c) in &self.terms {
            for (j, v) in f(k[leg]).iter() {
                let mut nk = k.clone();
                nk[leg] = j;
                out.add_term(nk, &(c * v))?;
            }
        }
        Ok(out)
    }

    /// Multiplies legs `leg` and `leg+1` together.
    pub fn multiply_adjacent(&self, leg: usize, m: &MultTable) -> Result<Self, Error> {
        if leg + 1 >= self.arity() {
            return Err(Error::Index(format!("legs {leg},{} of a {}-fold tensor", leg + 1, self.arity())));
        }
        let mut dims = self.dims.clone();
        dims.remove(leg + 1);
        dims[leg] = m.dim();
        let mut out = Self::zero(dims);
        for (k, c) in &self.terms {
            for (j, v) in m.mul_basis(k[leg], k[leg + 1]).iter() {
                let mut nk = k.clone();
                nk.remove(leg + 1);
                nk[leg] = j;
                out.add_term(nk, &(c * v))?;
            }
        }
        Ok(out)
    }

    /// Removes a leg by applying a functional to it.
    pub fn evaluate_leg(&self, leg: usize, f: impl Fn(usize) -> Rational) -> Result<Self, Error> {
        if leg >= self.arity() {
            return Err(Error::Index(format!("leg {leg} of a {}-fold tensor", self.arity())));
        }
        let mut dims = self.dims.clone();
        dims.remove(leg);
        let mut out = Self::zero(dims);
        for (k, c) in &self.terms {
            let v = f(k[leg]);
            let mut nk = k.clone();
            nk.remove(leg);
            out.add_term(nk, &(c * &v))?;
        }
        Ok(out)
    }

    /// For an arity-one tensor, the underlying vector.
    pub fn to_elem(&self) -> Option<Elem> {
        (self.arity() == 1).then(|| SVec::from_unsorted(self.terms.iter().map(|(k, c)| (k[0], c.clone())).collect()))
    }

    pub fn fmt_with(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let legs: Vec<&str> = k.iter().map(|&i| labels.get(i).map(String::as_str).unwrap_or("?")).collect();
                format!("{c}*{}", legs.join("⊗"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

type Legs = Vec<(Vec<usize>, Rational)>;

/// A finite-dimensional Hopf algebra with bijective antipode.
pub struct FinHopf {
    name: String,
    labels: Vec<String>,
    alg: MultTable,
    coprod: Vec<Vec<(usize, usize, Rational)>>,
    counit: Vec<Rational>,
    s: Vec<Elem>,
    s_inv: Vec<Elem>,
    iter_cache: RwLock<HashMap<(usize, usize), Arc<Legs>>>,
}

impl Clone for FinHopf {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            labels: self.labels.clone(),
            alg: self.alg.clone(),
            coprod: self.coprod.clone(),
            counit: self.counit.clone(),
            s: self.s.clone(),
            s_inv: self.s_inv.clone(),
            iter_cache: RwLock::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for FinHopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinHopf({}, dim {})", self.name, self.dim())
    }
}

/// Raw data for [`FinHopf`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, Rational)>,
    pub unit: Elem,
    pub coprod: Vec<(usize, usize, usize, Rational)>,
    pub counit: Vec<Rational>,
    pub antipode: Vec<Elem>,
    pub antipode_inv: Vec<Elem>,
}

impl FinHopf {
    /// Builds and validates; axiom failures are returned as the report.
    pub fn new(data: HopfData) -> Result<Self, Error> {
        let h = Self::new_unchecked(data)?;
        let rep = h.verify_hopf_axioms();
        if !rep.all_pass() {
            return Err(Error::Axioms(Box::new(rep)));
        }
        Ok(h)
    }

    /// Builds without running the axiom checks. Shapes are still validated.
    pub fn new_unchecked(data: HopfData) -> Result<Self, Error> {
        let dim = data.labels.len();
        if dim == 0 {
            return Err(Error::Shape("empty basis".into()));
        }
        let alg = MultTable::from_triples(dim, &data.mult, data.unit)?;
        let mut coprod = vec![Vec::new(); dim];
        for (i, j, k, c) in data.coprod {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Shape(format!("coproduct index ({i},{j},{k}) out of range")));
            }
            if !c.is_zero() {
                coprod[i].push((j, k, c));
            }
        }
        for terms in coprod.iter_mut() {
            terms.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        }
        if data.counit.len() != dim || data.antipode.len() != dim || data.antipode_inv.len() != dim {
            return Err(Error::Shape("counit/antipode length differs from dim".into()));
        }
        Ok(Self {
            name: data.name,
            labels: data.labels,
            alg,
            coprod,
            counit: data.counit,
            s: data.antipode,
            s_inv: data.antipode_inv,
            iter_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn data(&self) -> HopfData {
        let mut coprod = Vec::new();
        for (i, t) in self.coprod.iter().enumerate() {
            for (j, k, c) in t {
                coprod.push((i, *j, *k, c.clone()));
            }
        }
        HopfData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            mult: self.alg.triples(),
            unit: self.alg.unit().clone(),
            coprod,
            counit: self.counit.clone(),
            antipode: self.s.clone(),
            antipode_inv: self.s_inv.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn algebra(&self) -> &MultTable {
        &self.alg
    }

    pub fn unit(&self) -> &Elem {
        self.alg.unit()
    }

    pub fn fmt(&self, x: &Elem) -> String {
        fmt_elem(&self.labels, x)
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn check_dim(&self, x: &Elem) -> Result<(), Error> {
        match x.max_index() {
            Some(m) if m >= self.dim() => Err(Error::Shape(format!("element index {m} outside dim {}", self.dim()))),
            _ => Ok(()),
        }
    }

    pub fn product(&self, x: &Elem, y: &Elem) -> Result<Elem, Error> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.alg.mul(x, y))
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        self.alg.mul(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        self.alg.mul_basis(i, j)
    }

    pub fn counit_basis(&self, i: usize) -> &Rational {
        &self.counit[i]
    }

    pub fn counit(&self, x: &Elem) -> Rational {
        x.iter().map(|(i, c)| c * &self.counit[i]).sum()
    }

    /// `Δ(h_i) = Σ c h_j ⊗ h_k` as `(j, k, c)`.
    pub fn coprod_basis(&self, i: usize) -> &[(usize, usize, Rational)] {
        &self.coprod[i]
    }

    pub fn s_basis(&self, i: usize) -> &Elem {
        &self.s[i]
    }

    pub fn s_inv_basis(&self, i: usize) -> &Elem {
        &self.s_inv[i]
    }

    pub fn antipode(&self, x: &Elem, power: i32) -> Result<Elem, Error> {
        self.check_dim(x)?;
        let table = match power {
            1 => &self.s,
            -1 => &self.s_inv,
            _ => return Err(Error::Domain(format!("antipode power must be ±1, got {power}"))),
        };
        let mut acc = Accum::new();
        for (i, c) in x.iter() {
            acc.add_scaled(c, &table[i]);
        }
        Ok(acc.finish())
    }

    pub fn s(&self, x: &Elem) -> Elem {
        self.antipode(x, 1).expect("in range")
    }

    pub fn s_inv(&self, x: &Elem) -> Elem {
        self.antipode(x, -1).expect("in range")
    }

    /// Sweedler legs of `Δ^{(n)}(h_i)`, `n+1` legs; `n = 0` is `h_i` itself.
    pub fn delta_basis(&self, i: usize, n: usize) -> Arc<Legs> {
        if let Some(v) = self.iter_cache.read().unwrap().get(&(i, n)) {
            return v.clone();
        }
        let legs: Legs = if n == 0 {
            vec![(vec![i], Rational::one())]
        } else {
            // Δ^{(n)} = (Δ ⊗ 1^{⊗(n-1)}) ∘ Δ^{(n-1)}
            let prev = self.delta_basis(i, n - 1);
            let mut acc: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
            for (k, c) in prev.iter() {
                for (a, b, d) in &self.coprod[k[0]] {
                    let mut nk = Vec::with_capacity(n + 1);
                    nk.push(*a);
                    nk.push(*b);
                    nk.extend_from_slice(&k[1..]);
                    *acc.entry(nk).or_insert_with(Rational::zero) += c * d;
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        let legs = Arc::new(legs);
        self.iter_cache.write().unwrap().insert((i, n), legs.clone());
        legs
    }

    pub fn coproduct_iter(&self, h: &Elem, n: usize) -> Result<TensorElem, Error> {
        if n < 1 {
            return Err(Error::Domain("iterated coproduct needs n >= 1".into()));
        }
        self.check_dim(h)?;
        let mut t = TensorElem::zero(vec![self.dim(); n + 1]);
        for (i, c) in h.iter() {
            for (k, d) in self.delta_basis(i, n).iter() {
                t.add_term(k.clone(), &(c * d))?;
            }
        }
        Ok(t)
    }

    /// Every bracketing of `n` applications of Δ, as a list of results.
    pub fn coproduct_all_bracketings(&self, i: usize, n: usize) -> Vec<TensorElem> {
        fn go(h: &FinHopf, t: TensorElem, remaining: usize, out: &mut Vec<TensorElem>) {
            if remaining == 0 {
                out.push(t);
                return;
            }
            for leg in 0..t.arity() {
                let mut dims = t.dims().to_vec();
                dims.insert(leg + 1, h.dim());
                let mut nt = TensorElem::zero(dims);
                for (k, c) in t.terms() {
                    for (a, b, d) in h.coprod_basis(k[leg]) {
                        let mut nk = k.clone();
                        nk[leg] = *a;
                        nk.insert(leg + 1, *b);
                        nt.add_term(nk, &(c * d)).unwrap();
                    }
                }
                go(h, nt, remaining - 1, out);
            }
        }
        let mut out = Vec::new();
        let start = TensorElem::from_terms(vec![self.dim()], [(vec![i], Rational::one())]).unwrap();
        go(self, start, n, &mut out);
        out
    }

    pub fn is_cocommutative(&self) -> Option<Failure> {
        for i in 0..self.dim() {
            let d = self.coproduct_iter(&Elem::unit(i), 1).unwrap();
            let flipped = TensorElem::from_terms(
                d.dims().to_vec(),
                d.terms().map(|(k, c)| (vec![k[1], k[0]], c.clone())),
            )
            .unwrap();
            if d != flipped {
                return Some(Failure::new(
                    self.labels[i].clone(),
                    flipped.fmt_with(&self.labels),
                    d.fmt_with(&self.labels),
                ));
            }
        }
        None
    }

    pub fn verify_hopf_axioms(&self) -> Report {
        let mut rep = Report::new(format!("Hopf axioms for {}", self.name));
        let l = &self.labels;
        let dim = self.dim();
        for c in self.alg.verify(l) {
            rep.push(c);
        }
        let units = |i: usize| Elem::unit(i);

        let mut coassoc = None;
        for i in 0..dim {
            let d = self.coproduct_iter(&units(i), 1).unwrap();
            let mut left = TensorElem::zero(vec![dim; 3]);
            let mut right = TensorElem::zero(vec![dim; 3]);
            for (k, c) in d.terms() {
                for (a, b, e) in &self.coprod[k[0]] {
                    left.add_term(vec![*a, *b, k[1]], &(c * e)).unwrap();
                }
                for (a, b, e) in &self.coprod[k[1]] {
                    right.add_term(vec![k[0], *a, *b], &(c * e)).unwrap();
                }
            }
            if left != right {
                coassoc = Some(Failure::new(l[i].clone(), left.fmt_with(l), right.fmt_with(l)));
                break;
            }
        }
        rep.record("coassociativity", coassoc);

        let mut counit = None;
        for i in 0..dim {
            let mut left = Accum::new();
            let mut right = Accum::new();
            for (a, b, c) in &self.coprod[i] {
                left.add(*b, &(c * &self.counit[*a]));
                right.add(*a, &(c * &self.counit[*b]));
            }
            let (left, right) = (left.finish(), right.finish());
            if left != units(i) || right != units(i) {
                counit = Some(Failure::new(l[i].clone(), self.fmt(&left), self.fmt(&right)));
                break;
            }
        }
        rep.record("counit", counit);

        let tensor_of = |x: &Elem| -> TensorElem {
            let mut t = TensorElem::zero(vec![dim; 2]);
            for (i, c) in x.iter() {
                for (a, b, d) in &self.coprod[i] {
                    t.add_term(vec![*a, *b], &(c * d)).unwrap();
                }
            }
            t
        };
        let mut delta_mult = None;
        let one_one = {
            let mut t = TensorElem::zero(vec![dim; 2]);
            for (i, c) in self.unit().iter() {
                for (j, d) in self.unit().iter() {
                    t.add_term(vec![i, j], &(c * d)).unwrap();
                }
            }
            t
        };
        let du = tensor_of(self.unit());
        if du != one_one {
            delta_mult = Some(Failure::new("1", du.fmt_with(l), one_one.fmt_with(l)));
        }
        'dm: for i in 0..dim {
            for j in 0..dim {
                if delta_mult.is_some() {
                    break 'dm;
                }
                let left = tensor_of(self.mul_basis(i, j));
                let mut right = TensorElem::zero(vec![dim; 2]);
                for (a, b, c) in &self.coprod[i] {
                    for (x, y, d) in &self.coprod[j] {
                        let cd = c * d;
                        for (p, u) in self.mul_basis(*a, *x).iter() {
                            for (r, v) in self.mul_basis(*b, *y).iter() {
                                right.add_term(vec![p, r], &(&cd * &(u * v))).unwrap();
                            }
                        }
                    }
                }
                if left != right {
                    delta_mult = Some(Failure::new(format!("({},{})", l[i], l[j]), left.fmt_with(l), right.fmt_with(l)));
                }
            }
        }
        rep.record("coproduct multiplicative", delta_mult);

        let mut eps_mult = None;
        let eu = self.counit(self.unit());
        if !eu.is_one() {
            eps_mult = Some(Failure::new("1", eu, 1));
        }
        'em: for i in 0..dim {
            for j in 0..dim {
                if eps_mult.is_some() {
                    break 'em;
                }
                let left = self.counit(self.mul_basis(i, j));
                let right = &self.counit[i] * &self.counit[j];
                if left != right {
                    eps_mult = Some(Failure::new(format!("({},{})", l[i], l[j]), left, right));
                }
            }
        }
        rep.record("counit multiplicative", eps_mult);

        let mut anti = None;
        for i in 0..dim {
            let mut left = Accum::new();
            let mut right = Accum::new();
            for (a, b, c) in &self.coprod[i] {
                left.add_scaled(c, &self.mul(&self.s[*a], &units(*b)));
                right.add_scaled(c, &self.mul(&units(*a), &self.s[*b]));
            }
            let (left, right) = (left.finish(), right.finish());
            let target = self.unit().scale(&self.counit[i]);
            if left != target {
                anti = Some(Failure::new(l[i].clone(), self.fmt(&left), self.fmt(&target)));
                break;
            }
            if right != target {
                anti = Some(Failure::new(l[i].clone(), self.fmt(&right), self.fmt(&target)));
                break;
            }
        }
        rep.record("antipode", anti);

        let mut inv = None;
        for i in 0..dim {
            let a = self.s(&self.s_inv[i]);
            let b = self.s_inv(&self.s[i]);
            if a != units(i) || b != units(i) {
                inv = Some(Failure::new(l[i].clone(), self.fmt(&a), self.fmt(&b)));
                break;
            }
        }
        rep.record("antipode inverse", inv);
        rep
    }

    /// Group algebra of a finite group from its multiplication table on indices; index 0 is the identity.
    pub fn group_algebra(name: &str, labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self, Error> {
        let n = labels.len();
        let inv: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| mul(g, h) == 0).ok_or_else(|| Error::Shape("not a group".into())))
            .collect::<Result<_, _>>()?;
        let one = Rational::one();
        let data = HopfData {
            name: name.into(),
            labels,
            mult: (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i, j, mul(i, j), one.clone())).collect(),
            unit: Elem::unit(0),
            coprod: (0..n).map(|i| (i, i, i, one.clone())).collect(),
            counit: vec![one.clone(); n],
            antipode: inv.iter().map(|&g| Elem::unit(g)).collect(),
            antipode_inv: inv.iter().map(|&g| Elem::unit(g)).collect(),
        };
        Self::new(data)
    }
}

#[derive(Serialize, Deserialize)]
struct HopfJson {
    #[serde(default)]
    name: Option<String>,
    dim: usize,
    basis: Vec<String>,
    mult: Vec<(usize, usize, usize, Rational)>,
    unit: Vec<Rational>,
    coprod: Vec<(usize, usize, usize, Rational)>,
    counit: Vec<Rational>,
    /// `antipode[i]` lists the coordinates of `S(h_i)`.
    antipode: Vec<Vec<Rational>>,
    antipode_inv: Vec<Vec<Rational>>,
}

impl FinHopf {
    pub fn to_json(&self) -> serde_json::Value {
        let d = self.data();
        let dim = self.dim();
        let j = HopfJson {
            name: Some(d.name),
            dim,
            basis: d.labels,
            mult: d.mult,
            unit: d.unit.to_dense(dim),
            coprod: d.coprod,
            counit: d.counit,
            antipode: d.antipode.iter().map(|e| e.to_dense(dim)).collect(),
            antipode_inv: d.antipode_inv.iter().map(|e| e.to_dense(dim)).collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    /// Parses the JSON exchange format and validates the axioms.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        Self::from_json_unchecked(v).and_then(|h| {
            let rep = h.verify_hopf_axioms();
            if rep.all_pass() {
                Ok(h)
            } else {
                Err(Error::Axioms(Box::new(rep)))
            }
        })
    }

    pub fn from_json_unchecked(v: &serde_json::Value) -> Result<Self, Error> {
        let j: HopfJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.basis.len() != j.dim {
            return Err(Error::Shape("basis length differs from dim".into()));
        }
        let rows = |m: Vec<Vec<Rational>>| -> Result<Vec<Elem>, Error> {
            m.into_iter()
                .map(|r| {
                    if r.len() != j.dim {
                        Err(Error::Shape("antipode row length".into()))
                    } else {
                        Ok(SVec::from_dense(&r))
                    }
                })
                .collect()
        };
        if j.unit.len() != j.dim {
            return Err(Error::Shape("unit length differs from dim".into()));
        }
        Self::new_unchecked(HopfData {
            name: j.name.unwrap_or_else(|| "user".into()),
            labels: j.basis,
            mult: j.mult,
            unit: SVec::from_dense(&j.unit),
            coprod: j.coprod,
            counit: j.counit,
            antipode: rows(j.antipode)?,
            antipode_inv: rows(j.antipode_inv)?,
        })
    }
}

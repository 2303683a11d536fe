//! Cocyclic modules as families of sparse linear operators.
//!
//! A cochain space in degree `n` is `k^{dim(n)}`; every structure operator is
//! stored by rows, row `i` being the functional that produces output
//! coordinate `i`. Admissible cochains (equivariant, θ-invariant, …) form the
//! kernel of a set of constraint rows, so an operator identity holds on them
//! exactly when each row of the difference lies in the constraint row space.

mod crossed;
mod equivariant;
mod twisted;

#[cfg(test)]
mod tests;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{Accum, Echelon, SVec};
use crate::report::{Failure, Report};
use crate::scalar::Rational;
use crate::Error;

pub use crossed::*;
pub use equivariant::*;
pub use twisted::*;

/// A linear map `k^src → k^dst` stored by rows.
#[derive(Clone)]
pub struct LinOp {
    src: usize,
    dst: usize,
    rows: Vec<SVec>,
    cols: OnceLock<Vec<SVec>>,
}

impl fmt::Debug for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinOp({} → {}, nnz {})", self.src, self.dst, self.rows.iter().map(SVec::nnz).sum::<usize>())
    }
}

impl PartialEq for LinOp {
    fn eq(&self, o: &Self) -> bool {
        self.src == o.src && self.dst == o.dst && self.rows == o.rows
    }
}

impl LinOp {
    pub fn from_rows(src: usize, dst: usize, rows: Vec<SVec>) -> Self {
        debug_assert_eq!(rows.len(), dst);
        debug_assert!(rows.iter().all(|r| r.max_index().map_or(true, |m| m < src)));
        Self { src, dst, rows, cols: OnceLock::new() }
    }

    pub fn from_fn(src: usize, dst: usize, f: impl Fn(usize) -> SVec) -> Self {
        Self::from_rows(src, dst, (0..dst).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, SVec::unit)
    }

    pub fn zero(src: usize, dst: usize) -> Self {
        Self::from_fn(src, dst, |_| SVec::new())
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn row(&self, i: usize) -> &SVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SVec::is_zero)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinOp) -> LinOp {
        assert_eq!(self.src, inner.dst, "composition shape");
        Self::from_fn(inner.src, self.dst, |i| {
            let mut acc = Accum::new();
            for (k, c) in self.rows[i].iter() {
                acc.add_scaled(c, &inner.rows[k]);
            }
            acc.finish()
        })
    }

    pub fn add(&self, o: &LinOp) -> LinOp {
        assert!(self.src == o.src && self.dst == o.dst, "sum shape");
        Self::from_rows(self.src, self.dst, self.rows.iter().zip(&o.rows).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, o: &LinOp) -> LinOp {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> LinOp {
        Self::from_rows(self.src, self.dst, self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn pow(&self, k: usize) -> LinOp {
        assert_eq!(self.src, self.dst, "power of a non-square operator");
        (0..k).fold(Self::identity(self.src), |acc, _| self.compose(&acc))
    }

    fn cols(&self) -> &[SVec] {
        self.cols.get_or_init(|| {
            let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.src];
            for (i, r) in self.rows.iter().enumerate() {
                for (j, c) in r.iter() {
                    cols[j].push((i, c.clone()));
                }
            }
            cols.into_iter().map(SVec::from_unsorted).collect()
        })
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let cols = self.cols();
        let mut acc = Accum::new();
        for (j, c) in v.iter() {
            acc.add_scaled(c, &cols[j]);
        }
        acc.finish()
    }

    /// The functional `e ∘ self` on the source.
    pub fn pullback(&self, e: &SVec) -> SVec {
        let mut acc = Accum::new();
        for (k, c) in e.iter() {
            acc.add_scaled(c, &self.rows[k]);
        }
        acc.finish()
    }
}

/// The common kernel of a set of constraint rows.
#[derive(Debug)]
pub struct Subspace {
    ech: Echelon,
    basis: OnceLock<Vec<SVec>>,
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        Self { ech: Echelon::new(n), basis: OnceLock::new() }
    }

    pub fn cut_out(n: usize, rows: impl IntoIterator<Item = SVec>) -> Self {
        let mut ech = Echelon::new(n);
        for r in rows {
            ech.insert(r);
        }
        Self { ech, basis: OnceLock::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ech.ncols()
    }

    pub fn dim(&self) -> usize {
        self.ambient() - self.ech.rank()
    }

    pub fn basis(&self) -> &[SVec] {
        self.basis.get_or_init(|| self.ech.nullspace())
    }

    pub fn constraints(&self) -> impl Iterator<Item = &SVec> {
        self.ech.rows()
    }

    /// Whether the functional `r` vanishes on the subspace.
    pub fn annihilated_by(&self, r: &SVec) -> bool {
        r.is_zero() || self.ech.contains(r)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.constraints().all(|e| e.dot(v).is_zero())
    }

    /// A basis vector on which `r` does not vanish.
    fn detect(&self, r: &SVec) -> Option<(usize, &SVec)> {
        self.basis().iter().enumerate().find(|(_, v)| !r.dot(v).is_zero())
    }
}

/// A cochain of degree `n` as a sparse coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain {
    pub degree: usize,
    pub data: SVec,
}

/// Cochain with values in `F(H)`, coordinates `(a₀,…,a_n; g)`.
pub type EqCochain = Cochain;
/// Cochain on a plain algebra, coordinates `(b₀,…,b_n)`.
pub type PlainCochain = Cochain;

impl Cochain {
    pub fn new(degree: usize, data: SVec) -> Self {
        Self { degree, data }
    }

    pub fn zero(degree: usize) -> Self {
        Self { degree, data: SVec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_zero()
    }
}

/// The structure maps of a (para)cocyclic module in finite dimensions.
///
/// `face(n, i)` maps degree `n-1` to `n` for `0 ≤ i ≤ n`, `degen(n, i)` maps
/// degree `n+1` to `n` for `0 ≤ i ≤ n`.
pub trait Cocyclic {
    fn name(&self) -> String;
    fn dim(&self, n: usize) -> usize;
    fn tau(&self, n: usize) -> LinOp;
    fn face(&self, n: usize, i: usize) -> LinOp;
    fn degen(&self, n: usize, i: usize) -> LinOp;
    /// Rows cutting out the admissible cochains in degree `n`.
    fn constraints(&self, _n: usize) -> Vec<SVec> {
        Vec::new()
    }
    /// Human-readable name of coordinate `idx` in degree `n`.
    fn coord(&self, n: usize, idx: usize) -> String;
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Tau(usize),
    Face(usize, usize),
    Degen(usize, usize),
    Hoch(usize),
    Norm(usize),
    Extra(usize),
    Connes(usize),
}

/// A cocyclic module with cached operators and subspaces.
pub struct Complex<M> {
    module: M,
    ops: Mutex<HashMap<Key, Arc<LinOp>>>,
    spaces: Mutex<HashMap<(usize, bool), Arc<Subspace>>>,
}

/// Hochschild and cyclic cohomology dimensions by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub hh: Vec<usize>,
    pub hc: Vec<usize>,
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl<M: Cocyclic> Complex<M> {
    pub fn new(module: M) -> Self {
        Self { module, ops: Mutex::new(HashMap::new()), spaces: Mutex::new(HashMap::new()) }
    }

    pub fn module(&self) -> &M {
        &self.module
    }

    pub fn name(&self) -> String {
        self.module.name()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.module.dim(n)
    }

    fn cached(&self, k: Key, f: impl FnOnce() -> LinOp) -> Arc<LinOp> {
        if let Some(op) = self.ops.lock().unwrap().get(&k) {
            return op.clone();
        }
        let op = Arc::new(f());
        self.ops.lock().unwrap().insert(k, op.clone());
        op
    }

    pub fn tau(&self, n: usize) -> Arc<LinOp> {
        self.cached(Key::Tau(n), || self.module.tau(n))
    }

    /// `∂^i: C^{n-1} → C^n`.
    pub fn face(&self, n: usize, i: usize) -> Result<Arc<LinOp>, Error> {
        if n == 0 || i > n {
            return Err(Error::Index(format!("face ∂^{i} into degree {n}")));
        }
        Ok(self.face_(n, i))
    }

    /// `σ^i: C^{n+1} → C^n`.
    pub fn degen(&self, n: usize, i: usize) -> Result<Arc<LinOp>, Error> {
        if i > n {
            return Err(Error::Index(format!("degeneracy σ^{i} into degree {n}")));
        }
        Ok(self.degen_(n, i))
    }

    fn face_(&self, n: usize, i: usize) -> Arc<LinOp> {
        self.cached(Key::Face(n, i), || self.module.face(n, i))
    }

    fn degen_(&self, n: usize, i: usize) -> Arc<LinOp> {
        self.cached(Key::Degen(n, i), || self.module.degen(n, i))
    }

    /// Admissible cochains in degree `n`, optionally also normalized.
    pub fn space(&self, n: usize, normalized: bool) -> Arc<Subspace> {
        if let Some(s) = self.spaces.lock().unwrap().get(&(n, normalized)) {
            return s.clone();
        }
        let mut rows = self.module.constraints(n);
        if normalized && n > 0 {
            for i in 0..n {
                rows.extend(self.degen_(n - 1, i).rows().iter().cloned());
            }
        }
        let s = Arc::new(Subspace::cut_out(self.dim(n), rows));
        self.spaces.lock().unwrap().insert((n, normalized), s.clone());
        s
    }

    pub fn basis(&self, n: usize) -> Vec<Cochain> {
        self.space(n, false).basis().iter().map(|v| Cochain::new(n, v.clone())).collect()
    }

    /// `b = Σ (−1)^i ∂^i: C^{n-1} → C^n`.
    pub fn b(&self, n: usize) -> Arc<LinOp> {
        assert!(n > 0, "b lands in positive degree");
        self.cached(Key::Hoch(n), || {
            (0..=n).fold(LinOp::zero(self.dim(n - 1), self.dim(n)), |acc, i| acc.add(&self.face_(n, i).scale(&sign(i))))
        })
    }

    /// `N = Σ_{i=0}^{n} (−1)^{in} τ^i` on `C^n`.
    pub fn norm(&self, n: usize) -> Arc<LinOp> {
        self.cached(Key::Norm(n), || {
            let t = self.tau(n);
            let mut acc = LinOp::zero(self.dim(n), self.dim(n));
            let mut p = LinOp::identity(self.dim(n));
            for i in 0..=n {
                acc = acc.add(&p.scale(&sign(i * n)));
                p = t.compose(&p);
            }
            acc
        })
    }

    /// Extra degeneracy `σ = σ^n ∘ τ_{n+1}: C^{n+1} → C^n`.
    pub fn extra_degen(&self, n: usize) -> Arc<LinOp> {
        self.cached(Key::Extra(n), || self.degen_(n, n).compose(&self.tau(n + 1)))
    }

    /// `B = N σ (1 − (−1)^{n+1} τ): C^{n+1} → C^n`.
    pub fn connes_b(&self, n: usize) -> Arc<LinOp> {
        self.cached(Key::Connes(n), || {
            let d = self.dim(n + 1);
            let one_minus = LinOp::identity(d).sub(&self.tau(n + 1).scale(&sign(n + 1)));
            self.norm(n).compose(&self.extra_degen(n)).compose(&one_minus)
        })
    }

    pub fn apply_tau(&self, f: &Cochain) -> Cochain {
        Cochain::new(f.degree, self.tau(f.degree).apply(&f.data))
    }

    pub fn apply_face(&self, i: usize, f: &Cochain) -> Result<Cochain, Error> {
        Ok(Cochain::new(f.degree + 1, self.face(f.degree + 1, i)?.apply(&f.data)))
    }

    pub fn apply_degen(&self, i: usize, f: &Cochain) -> Result<Cochain, Error> {
        if f.degree == 0 {
            return Err(Error::Index("degeneracy out of degree 0".into()));
        }
        Ok(Cochain::new(f.degree - 1, self.degen(f.degree - 1, i)?.apply(&f.data)))
    }

    pub fn hochschild_b(&self, f: &Cochain) -> Cochain {
        Cochain::new(f.degree + 1, self.b(f.degree + 1).apply(&f.data))
    }

    pub fn apply_connes_b(&self, f: &Cochain) -> Result<Cochain, Error> {
        if f.degree == 0 {
            return Err(Error::Index("B out of degree 0".into()));
        }
        Ok(Cochain::new(f.degree - 1, self.connes_b(f.degree - 1).apply(&f.data)))
    }

    pub fn apply_norm(&self, f: &Cochain) -> Cochain {
        Cochain::new(f.degree, self.norm(f.degree).apply(&f.data))
    }

    /// `None` when `l = r` on admissible cochains of degree `n_src`.
    pub fn compare(&self, n_src: usize, n_dst: usize, l: &LinOp, r: &LinOp, normalized: bool) -> Option<Failure> {
        let sub = self.space(n_src, normalized);
        compare_on(&sub, l, r, |i| format!("degree {n_src} → {n_dst}, at {}", self.module.coord(n_dst, i)))
    }

    /// `None` when `op` maps admissible cochains of degree `n_src` into those of `n_dst`.
    pub fn preserves(&self, n_src: usize, n_dst: usize, op: &LinOp, normalized: bool) -> Option<Failure> {
        preserves_on(&self.space(n_src, normalized), &self.space(n_dst, normalized), op)
    }

    /// Every cosimplicial identity, every relation of a paracocyclic module
    /// and, when `cyclic`, `τ_n^{n+1} = id`, for degrees `n ≤ n_max`; also
    /// that each structure map preserves the admissible subspace.
    pub fn verify(&self, n_max: usize, cyclic: bool) -> Report {
        let mut rep = Report::new(format!("{} is {}cocyclic", self.name(), if cyclic { "" } else { "para" }));
        for n in 0..=n_max {
            self.verify_degree(&mut rep, n, cyclic);
        }
        rep
    }

    fn first<I: IntoIterator<Item = (String, Option<Failure>)>>(it: I) -> Option<Failure> {
        it.into_iter().find_map(|(ctx, f)| {
            f.map(|mut f| {
                if !ctx.is_empty() {
                    f.witness = format!("{ctx}; {}", f.witness);
                }
                f
            })
        })
    }

    fn verify_degree(&self, rep: &mut Report, n: usize, cyclic: bool) {
        let t = self.tau(n);
        rep.record_at("τ preserves admissible cochains", n, self.preserves(n, n, &t, false));
        if cyclic {
            let id = LinOp::identity(self.dim(n));
            rep.record_at("τ^{n+1} = id", n, self.compare(n, n, &t.pow(n + 1), &id, false));
        }
        if n == 0 {
            return;
        }
        let faces = Self::first((0..=n).map(|i| (format!("i={i}"), self.preserves(n - 1, n, &self.face_(n, i), false))));
        rep.record_at("∂^i preserves admissible cochains", n, faces);
        let degens =
            Self::first((0..n).map(|i| (format!("i={i}"), self.preserves(n, n - 1, &self.degen_(n - 1, i), false))));
        rep.record_at("σ^i preserves admissible cochains", n, degens);

        // C^{n-1} → C^n
        let r = self.compare(n - 1, n, &t.compose(&self.face_(n, 0)), &self.face_(n, n), false);
        rep.record_at("τ∂^0 = ∂^n", n, r);
        let r = Self::first((1..=n).map(|i| {
            let l = t.compose(&self.face_(n, i));
            let r = self.face_(n, i - 1).compose(&self.tau(n - 1));
            (format!("i={i}"), self.compare(n - 1, n, &l, &r, false))
        }));
        rep.record_at("τ∂^i = ∂^{i-1}τ", n, r);

        // C^n → C^{n-1}
        let tm = self.tau(n - 1);
        let l = tm.compose(&self.degen_(n - 1, 0));
        let r = self.degen_(n - 1, n - 1).compose(&t.pow(2));
        rep.record_at("τσ^0 = σ^{n}τ²", n, self.compare(n, n - 1, &l, &r, false));
        let r = Self::first((1..n).map(|i| {
            let l = tm.compose(&self.degen_(n - 1, i));
            let r = self.degen_(n - 1, i - 1).compose(&t);
            (format!("i={i}"), self.compare(n, n - 1, &l, &r, false))
        }));
        rep.record_at("τσ^i = σ^{i-1}τ", n, r);

        // σ^j ∂^i on C^{n-1}
        let id = LinOp::identity(self.dim(n - 1));
        let r = Self::first((0..n).flat_map(|j| (0..=n).map(move |i| (i, j))).map(|(i, j)| {
            let l = self.degen_(n - 1, j).compose(&self.face_(n, i));
            let r = if i < j {
                self.face_(n - 1, i).compose(&self.degen_(n - 2, j - 1))
            } else if i == j || i == j + 1 {
                id.clone()
            } else {
                self.face_(n - 1, i - 1).compose(&self.degen_(n - 2, j))
            };
            (format!("i={i}, j={j}"), self.compare(n - 1, n - 1, &l, &r, false))
        }));
        rep.record_at("σ^j∂^i", n, r);

        if n < 2 {
            return;
        }
        let r = Self::first((0..=n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| {
            let l = self.face_(n, j).compose(&self.face_(n - 1, i));
            let r = self.face_(n, i).compose(&self.face_(n - 1, j - 1));
            (format!("i={i}, j={j}"), self.compare(n - 2, n, &l, &r, false))
        }));
        rep.record_at("∂^j∂^i = ∂^i∂^{j-1}", n, r);
        let r = Self::first((0..=n - 2).flat_map(|j| (0..=j).map(move |i| (i, j))).map(|(i, j)| {
            let l = self.degen_(n - 2, j).compose(&self.degen_(n - 1, i));
            let r = self.degen_(n - 2, i).compose(&self.degen_(n - 1, j + 1));
            (format!("i={i}, j={j}"), self.compare(n, n - 2, &l, &r, false))
        }));
        rep.record_at("σ^jσ^i = σ^iσ^{j+1}", n, r);
    }

    /// `τσ^0 = στ`, `b² = 0`, `B² = 0` and `bB + Bb = 0` (normalized), and
    /// that `b` and `B` preserve normalized cochains, for degrees `n ≤ n_max`.
    pub fn verify_mixed(&self, n_max: usize) -> Report {
        let mut rep = Report::new(format!("mixed complex of {}", self.name()));
        for n in 0..=n_max {
            if n + 1 <= n_max {
                let l = self.tau(n).compose(&self.degen_(n, 0));
                let r = self.extra_degen(n).compose(&self.tau(n + 1));
                rep.record_at("τσ^0 = στ", n + 1, self.compare(n + 1, n, &l, &r, false));
                if n >= 1 {
                    let bb = self.b(n + 1).compose(&self.b(n));
                    rep.record_at("b² = 0", n + 1, self.compare(n - 1, n + 1, &bb, &LinOp::zero(bb.src(), bb.dst()), false));
                }
                let r = self.preserves(n, n + 1, &self.b(n + 1), true);
                rep.record_at("b preserves normalized cochains", n + 1, r);
                let r = self.preserves(n + 1, n, &self.connes_b(n), true);
                rep.record_at("B preserves normalized cochains", n + 1, r);
            }
            if n + 2 <= n_max {
                let bb = self.connes_b(n).compose(&self.connes_b(n + 1));
                let z = LinOp::zero(bb.src(), bb.dst());
                rep.record_at("B² = 0 (normalized)", n + 2, self.compare(n + 2, n, &bb, &z, true));
            }
            if n + 1 <= n_max {
                let mut s = self.connes_b(n).compose(&self.b(n + 1));
                if n >= 1 {
                    s = s.add(&self.b(n).compose(&self.connes_b(n - 1)));
                }
                let z = LinOp::zero(s.src(), s.dst());
                rep.record_at("bB + Bb = 0 (normalized)", n + 1, self.compare(n, n, &s, &z, true));
            }
        }
        rep
    }

    fn image_rank(&self, op: &LinOp, vs: &[SVec]) -> usize {
        let mut e = Echelon::new(op.dst());
        for v in vs {
            e.insert(op.apply(v));
        }
        e.rank()
    }

    /// `dim HH^n` of admissible cochains under `b`, `n ≤ n_max`.
    pub fn hochschild_dims(&self, n_max: usize) -> Vec<usize> {
        let ranks: Vec<usize> =
            (1..=n_max + 1).map(|n| self.image_rank(&self.b(n), self.space(n - 1, false).basis())).collect();
        (0..=n_max)
            .map(|n| {
                let into = if n == 0 { 0 } else { ranks[n - 1] };
                self.space(n, false).dim() - ranks[n] - into
            })
            .collect()
    }

    /// Ambient offsets and total size of `⊕_{p ≤ cols} C^{n-2p}`.
    fn tot_layout(&self, n: usize, cols: usize) -> (Vec<(usize, usize)>, usize) {
        let mut blocks = Vec::new();
        let mut off = 0;
        for p in 0..=cols.min(n / 2) {
            blocks.push((n - 2 * p, off));
            off += self.dim(n - 2 * p);
        }
        (blocks, off)
    }

    /// Rank of `D = b + B: Tot^n → Tot^{n+1}` and `dim Tot^n`.
    fn total_rank(&self, n: usize, cols: usize) -> (usize, usize) {
        let (src, _) = self.tot_layout(n, cols);
        let (dst, width) = self.tot_layout(n + 1, cols);
        let offset = |deg: usize| dst.iter().find(|(d, _)| *d == deg).map(|(_, o)| *o);
        let mut e = Echelon::new(width);
        let mut dim = 0;
        for &(m, _) in &src {
            let sp = self.space(m, true);
            dim += sp.dim();
            for v in sp.basis() {
                let mut img = SVec::new();
                if let Some(o) = offset(m + 1) {
                    img = img.add(&self.b(m + 1).apply(v).map_indices(|i| i + o));
                }
                if m > 0 {
                    if let Some(o) = offset(m - 1) {
                        img = img.add(&self.connes_b(m - 1).apply(v).map_indices(|i| i + o));
                    }
                }
                e.insert(img);
            }
        }
        (e.rank(), dim)
    }

    /// `dim HC^n` from the normalized `(b, B)` bicomplex with columns `0..=cols`.
    pub fn cyclic_dims_with(&self, n_max: usize, cols: usize) -> Vec<usize> {
        let data: Vec<(usize, usize)> = (0..=n_max).map(|n| self.total_rank(n, cols)).collect();
        (0..=n_max)
            .map(|n| {
                let into = if n == 0 { 0 } else { data[n - 1].0 };
                data[n].1 - data[n].0 - into
            })
            .collect()
    }

    /// `dim HC^n`, checked stable under one more bicomplex column.
    pub fn cyclic_dims(&self, n_max: usize) -> Result<Vec<usize>, Error> {
        let a = self.cyclic_dims_with(n_max, n_max + 1);
        let b = self.cyclic_dims_with(n_max, n_max + 2);
        if a != b {
            return Err(Error::Domain(format!("HC dimensions not stable in the column bound: {a:?} vs {b:?}")));
        }
        Ok(a)
    }

    pub fn cohomology_dims(&self, n_max: usize) -> Result<CohomologyDims, Error> {
        Ok(CohomologyDims { hh: self.hochschild_dims(n_max), hc: self.cyclic_dims(n_max)? })
    }

    /// `dim HC^n` from Connes' complex of cochains with `τf = (−1)^n f`.
    pub fn connes_dims(&self, n_max: usize) -> Vec<usize> {
        let lam: Vec<Subspace> = (0..=n_max + 1).map(|n| self.connes_cochains(n)).collect();
        let ranks: Vec<usize> = (1..=n_max + 1).map(|n| self.image_rank(&self.b(n), lam[n - 1].basis())).collect();
        (0..=n_max)
            .map(|n| {
                let into = if n == 0 { 0 } else { ranks[n - 1] };
                lam[n].dim() - ranks[n] - into
            })
            .collect()
    }
}

impl<M: Cocyclic> Complex<M> {
    /// Admissible Hochschild cocycles of degree `n`.
    pub fn cocycles(&self, n: usize, normalized: bool) -> Subspace {
        let mut rows: Vec<SVec> = self.space(n, normalized).constraints().cloned().collect();
        rows.extend(self.b(n + 1).rows().iter().cloned());
        Subspace::cut_out(self.dim(n), rows)
    }

    /// Admissible cochains with `τf = (−1)^n f`.
    pub fn connes_cochains(&self, n: usize) -> Subspace {
        let mut rows = self.module.constraints(n);
        let fix = self.tau(n).scale(&sign(n)).sub(&LinOp::identity(self.dim(n)));
        rows.extend(fix.rows().iter().cloned());
        Subspace::cut_out(self.dim(n), rows)
    }

    /// Cocycles of Connes' complex in degree `n`.
    pub fn cyclic_cocycles(&self, n: usize) -> Subspace {
        let mut rows: Vec<SVec> = self.connes_cochains(n).constraints().cloned().collect();
        rows.extend(self.b(n + 1).rows().iter().cloned());
        Subspace::cut_out(self.dim(n), rows)
    }

    /// A basis of normalized admissible `(f₀, f₂,…, f_{2m})` with
    /// `b f_{2k} + B f_{2k+2} = 0` and `b f_{2m} = 0`.
    pub fn even_bb_cocycles(&self, m: usize) -> Vec<Vec<Cochain>> {
        let dims: Vec<usize> = (0..=m).map(|k| self.dim(2 * k)).collect();
        let offs: Vec<usize> = dims.iter().scan(0, |acc, d| Some(std::mem::replace(acc, *acc + d))).collect();
        let total: usize = dims.iter().sum();
        let mut rows = Vec::new();
        for k in 0..=m {
            let o = offs[k];
            rows.extend(self.space(2 * k, true).constraints().map(|r| r.map_indices(|j| j + o)));
            let b = self.b(2 * k + 1);
            let up = (k < m).then(|| self.connes_b(2 * k + 1));
            for i in 0..b.dst() {
                let mut r = b.row(i).map_indices(|j| j + o);
                if let Some(up) = &up {
                    r = r.add(&up.row(i).map_indices(|j| j + offs[k + 1]));
                }
                rows.push(r);
            }
        }
        Subspace::cut_out(total, rows)
            .basis()
            .iter()
            .map(|v| {
                (0..=m)
                    .map(|k| {
                        let part = v.iter().filter(|(j, _)| (offs[k]..offs[k] + dims[k]).contains(j));
                        Cochain::new(2 * k, SVec::from_unsorted(part.map(|(j, c)| (j - offs[k], c.clone())).collect()))
                    })
                    .collect()
            })
            .collect()
    }
}

/// `None` when `l = r` on `sub`; otherwise a basis vector of `sub` and an
/// output coordinate where they differ, described by `coord`.
pub fn compare_on(sub: &Subspace, l: &LinOp, r: &LinOp, coord: impl Fn(usize) -> String) -> Option<Failure> {
    (0..l.dst()).find_map(|i| {
        let d = l.row(i).sub(r.row(i));
        if sub.annihilated_by(&d) {
            return None;
        }
        let (k, v) = sub.detect(&d).expect("a functional outside the row space detects a vector");
        Some(Failure::new(format!("basis cochain #{k}; {}", coord(i)), l.row(i).dot(v), r.row(i).dot(v)))
    })
}

/// `None` when `op` maps `src` into `dst`.
pub fn preserves_on(src: &Subspace, dst: &Subspace, op: &LinOp) -> Option<Failure> {
    dst.constraints().find_map(|e| {
        let pulled = op.pullback(e);
        if src.annihilated_by(&pulled) {
            return None;
        }
        let (k, v) = src.detect(&pulled).expect("detects");
        Some(Failure::new(format!("basis cochain #{k} is mapped outside the target subspace"), pulled.dot(v), Rational::zero()))
    })
}

/// Records that `op(n)` maps admissible cochains of `src` into those of `dst`
/// and commutes with `T`, `∂^i` and `σ^i`, for `n ≤ n_max`.
pub fn verify_cocyclic_map<M: Cocyclic, N: Cocyclic>(
    rep: &mut Report,
    label: &str,
    src: &Complex<M>,
    dst: &Complex<N>,
    op: impl Fn(usize) -> LinOp,
    n_max: usize,
) {
    let ops: Vec<LinOp> = (0..=n_max).map(op).collect();
    for n in 0..=n_max {
        let m = &ops[n];
        let sub = src.space(n, false);
        let coord = |i: usize| dst.module().coord(n, i);
        rep.record_at(format!("{label} maps into admissible cochains"), n, preserves_on(&sub, &dst.space(n, false), m));
        let r = compare_on(&sub, &m.compose(&src.tau(n)), &dst.tau(n).compose(m), coord);
        rep.record_at(format!("{label} T = T {label}"), n, r);
        if n >= 1 {
            let sub = src.space(n - 1, false);
            let r = (0..=n).find_map(|i| {
                let l = m.compose(&src.face_(n, i));
                let r = dst.face_(n, i).compose(&ops[n - 1]);
                compare_on(&sub, &l, &r, |k| format!("i={i}; {}", coord(k)))
            });
            rep.record_at(format!("{label} ∂^i = ∂^i {label}"), n, r);
        }
        if n < n_max {
            let sub = src.space(n + 1, false);
            let r = (0..=n).find_map(|i| {
                let l = m.compose(&src.degen_(n, i));
                let r = dst.degen_(n, i).compose(&ops[n + 1]);
                compare_on(&sub, &l, &r, |k| format!("i={i}; {}", coord(k)))
            });
            rep.record_at(format!("{label} σ^i = σ^i {label}"), n, r);
        }
    }
}

/// Mixed-radix index of a tuple of basis indices, most significant first.
pub(crate) fn encode(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, d| acc * base + d)
}

pub(crate) fn decode(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = idx % base;
        idx /= base;
    }
    out
}

/// The tensor product of basis-coordinate vectors, flattened in order.
pub(crate) fn kron(parts: &[&SVec], base: usize) -> SVec {
    let mut acc: Vec<(usize, Rational)> = vec![(0, Rational::one())];
    for p in parts {
        let mut next = Vec::with_capacity(acc.len() * p.nnz());
        for (i, c) in &acc {
            for (j, d) in p.iter() {
                next.push((i * base + j, c * d));
            }
        }
        acc = next;
    }
    SVec::from_unsorted(acc)
}

use std::sync::Arc;

use num_traits::Zero;

use super::{decode, kron, Cochain, Cocyclic, Complex, LinOp, Subspace};
use crate::actions::{ActionMap, FinAlgebra, HAlgebra};
use crate::hopf::{Elem, FinHopf};
use crate::linalg::{Accum, SVec};
use crate::report::{Failure, Report};
use crate::Error;

/// Deliberately wrong variants of the cyclic operator, for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// `S⁻¹(g⁽⁰⁾)` replaced by `g⁽⁰⁾` in `T` and the top face.
    NoAntipode,
}

/// The cochains `C^n(A, F(H)) = Hom(A^{⊗(n+1)}, F(H))` with the operators
/// `T`, `∂^i`, `σ^i`, restricted to equivariant cochains.
///
/// Coordinate `(a₀,…,a_n; g)` holds `f(a₀,…,a_n)(g)`.
#[derive(Clone, Debug)]
pub struct EquivariantModule {
    name: String,
    hopf: Arc<FinHopf>,
    alg: FinAlgebra,
    act: ActionMap,
    mutation: Option<Mutation>,
}

/// The one-dimensional Hopf algebra `k`.
pub fn ground_hopf() -> Arc<FinHopf> {
    use std::sync::OnceLock;
    static K: OnceLock<Arc<FinHopf>> = OnceLock::new();
    K.get_or_init(|| Arc::new(FinHopf::group_algebra("k", vec!["1".into()], |_, _| 0).expect("k"))).clone()
}

pub(crate) fn tensor2(x: &SVec, y: &SVec, dy: usize) -> SVec {
    let mut out = Vec::with_capacity(x.nnz() * y.nnz());
    for (i, c) in x.iter() {
        for (j, d) in y.iter() {
            out.push((i * dy + j, c * d));
        }
    }
    SVec::from_unsorted(out)
}

impl EquivariantModule {
    pub fn new(hopf: Arc<FinHopf>, alg: FinAlgebra, act: ActionMap) -> Result<Self, Error> {
        if act.hdim() != hopf.dim() || act.adim() != alg.dim() {
            return Err(Error::Shape(format!(
                "action of a {}-dim Hopf algebra on a {}-dim algebra, given {}×{}",
                hopf.dim(),
                alg.dim(),
                act.hdim(),
                act.adim()
            )));
        }
        let name = format!("C_{}({})", hopf.name(), alg.name());
        Ok(Self { name, hopf, alg, act, mutation: None })
    }

    pub fn from_halgebra(a: &HAlgebra) -> Self {
        Self::new(a.hopf.clone(), a.algebra.clone(), a.action.clone()).expect("validated H-algebra")
    }

    /// The standard cocyclic module of an algebra, as equivariant cochains over `k`.
    pub fn plain(alg: &FinAlgebra) -> Self {
        let k = ground_hopf();
        let act = ActionMap::trivial(&k, alg.dim());
        let mut m = Self::new(k, alg.clone(), act).expect("shapes");
        m.name = format!("C({})", alg.name());
        m
    }

    pub fn mutated(mut self, m: Mutation) -> Self {
        self.name = format!("{} [{m:?}]", self.name);
        self.mutation = Some(m);
        self
    }

    pub fn hopf(&self) -> &Arc<FinHopf> {
        &self.hopf
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.alg
    }

    pub fn action(&self) -> &ActionMap {
        &self.act
    }

    fn da(&self) -> usize {
        self.alg.dim()
    }

    fn dh(&self) -> usize {
        self.hopf.dim()
    }

    fn split(&self, n: usize, idx: usize) -> (Vec<usize>, usize) {
        (decode(idx / self.dh(), self.da(), n + 1), idx % self.dh())
    }

    fn cell(&self, parts: &[&SVec], g: &SVec) -> SVec {
        tensor2(&kron(parts, self.da()), g, self.dh())
    }

    /// `S⁻¹(h_p)·a`, or `h_p·a` under the mutation.
    fn twist(&self, p: usize, a: &SVec) -> SVec {
        match self.mutation {
            Some(Mutation::NoAntipode) => self.act.act_on(p, a),
            None => self.act.act(self.hopf.s_inv_basis(p), a),
        }
    }

    /// Matrix of `f ↦ h_j·f` in degree `n`.
    pub fn action_op(&self, n: usize, j: usize) -> LinOp {
        let d = self.dim(n);
        LinOp::from_fn(d, d, |idx| {
            let (a, g) = self.split(n, idx);
            let mut acc = Accum::new();
            for (legs, c) in self.hopf.delta_basis(j, n).iter() {
                let parts: Vec<SVec> = legs.iter().zip(&a).map(|(&l, &ak)| self.act.act_basis(l, ak).clone()).collect();
                let refs: Vec<&SVec> = parts.iter().collect();
                acc.add_scaled(c, &self.cell(&refs, &SVec::unit(g)));
            }
            acc.finish()
        })
    }

    /// `(h·f)(a₀,…,a_n)(g) = f(h⁽⁰⁾·a₀,…,h⁽ⁿ⁾·a_n)(g)`.
    pub fn cochain_action(&self, h: &Elem, f: &Cochain) -> Cochain {
        let mut acc = Accum::new();
        for (j, c) in h.iter() {
            acc.add_scaled(c, &self.action_op(f.degree, j).apply(&f.data));
        }
        Cochain::new(f.degree, acc.finish())
    }

    /// Matrix of `f ↦ (f(a)(g) ↦ f(a)(S(h⁽¹⁾) g h⁽⁰⁾))`.
    fn conj_op(&self, n: usize, j: usize) -> LinOp {
        let d = self.dim(n);
        let h = &self.hopf;
        LinOp::from_fn(d, d, |idx| {
            let (at, g) = (idx / self.dh(), idx % self.dh());
            let mut acc = Accum::new();
            for (p, q, c) in h.coprod_basis(j) {
                let x = h.mul(&h.mul(h.s_basis(*q), &Elem::unit(g)), &Elem::unit(*p));
                acc.add_scaled(c, &x.map_indices(|k| at * self.dh() + k));
            }
            acc.finish()
        })
    }

    /// Rows of the linear system `(h·f)(a)(g) = f(a)(S(h⁽¹⁾)gh⁽⁰⁾)` over basis `h`.
    pub fn equivariance_rows(&self, n: usize) -> Vec<SVec> {
        (0..self.dh())
            .flat_map(|j| {
                let l = self.action_op(n, j);
                let r = self.conj_op(n, j);
                l.sub(&r).rows().to_vec()
            })
            .filter(|r| !r.is_zero())
            .collect()
    }

    /// Checks equivariance on every basis tuple.
    pub fn is_equivariant(&self, f: &Cochain) -> Report {
        let n = f.degree;
        let mut rep = Report::new(format!("equivariance of a degree {n} cochain on {}", self.name));
        let fail = (0..self.dh()).find_map(|j| {
            let l = self.action_op(n, j).apply(&f.data);
            let r = self.conj_op(n, j).apply(&f.data);
            let idx = l.sub(&r).leading().map(|(i, _)| i)?;
            Some(Failure::new(
                format!("h = {}, at {}", self.hopf.labels()[j], self.coord(n, idx)),
                l.get(idx),
                r.get(idx),
            ))
        });
        rep.record_at("h·f(a)(g) = f(a)(S(h⁽¹⁾)gh⁽⁰⁾)", n, fail);
        rep
    }
}

impl Cocyclic for EquivariantModule {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn dim(&self, n: usize) -> usize {
        self.da().pow(n as u32 + 1) * self.dh()
    }

    /// `T f(a₀,…,a_n)(g) = f(S⁻¹(g⁽⁰⁾)·a_n, a₀,…,a_{n−1})(g⁽¹⁾)`.
    fn tau(&self, n: usize) -> LinOp {
        let d = self.dim(n);
        LinOp::from_fn(d, d, |idx| {
            let (a, g) = self.split(n, idx);
            let mut acc = Accum::new();
            for (p, q, c) in self.hopf.coprod_basis(g) {
                let first = self.twist(*p, &SVec::unit(a[n]));
                let rest: Vec<SVec> = a[..n].iter().map(|&x| SVec::unit(x)).collect();
                let mut parts = vec![&first];
                parts.extend(rest.iter());
                acc.add_scaled(c, &self.cell(&parts, &SVec::unit(*q)));
            }
            acc.finish()
        })
    }

    fn face(&self, n: usize, i: usize) -> LinOp {
        assert!(n >= 1 && i <= n);
        LinOp::from_fn(self.dim(n - 1), self.dim(n), |idx| {
            let (a, g) = self.split(n, idx);
            let units: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            if i < n {
                let prod = self.alg.mul_basis(a[i], a[i + 1]).clone();
                let mut parts: Vec<&SVec> = units[..i].iter().collect();
                parts.push(&prod);
                parts.extend(units[i + 2..].iter());
                self.cell(&parts, &SVec::unit(g))
            } else {
                let mut acc = Accum::new();
                for (p, q, c) in self.hopf.coprod_basis(g) {
                    let first = self.alg.mul(&self.twist(*p, &units[n]), &units[0]);
                    let mut parts = vec![&first];
                    parts.extend(units[1..n].iter());
                    acc.add_scaled(c, &self.cell(&parts, &SVec::unit(*q)));
                }
                acc.finish()
            }
        })
    }

    fn degen(&self, n: usize, i: usize) -> LinOp {
        assert!(i <= n);
        let one = self.alg.unit().clone();
        LinOp::from_fn(self.dim(n + 1), self.dim(n), |idx| {
            let (a, g) = self.split(n, idx);
            let units: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            let mut parts: Vec<&SVec> = units[..=i].iter().collect();
            parts.push(&one);
            parts.extend(units[i + 1..].iter());
            self.cell(&parts, &SVec::unit(g))
        })
    }

    fn constraints(&self, n: usize) -> Vec<SVec> {
        self.equivariance_rows(n)
    }

    fn coord(&self, n: usize, idx: usize) -> String {
        let (a, g) = self.split(n, idx);
        let labels = self.alg.labels();
        let a: Vec<&str> = a.iter().map(|&x| labels[x].as_str()).collect();
        if self.dh() == 1 {
            format!("({})", a.join(", "))
        } else {
            format!("({})({})", a.join(", "), self.hopf.labels()[g])
        }
    }
}

/// `Complex` over the equivariant cochains of an `H`-algebra.
pub fn equivariant_complex(a: &HAlgebra) -> Complex<EquivariantModule> {
    Complex::new(EquivariantModule::from_halgebra(a))
}

/// The standard cocyclic module of a plain algebra.
pub fn std_cyclic_ops(b: &FinAlgebra) -> Complex<EquivariantModule> {
    Complex::new(EquivariantModule::plain(b))
}

/// Basis of the equivariant cochains of degree `n`.
pub fn equivariant_basis(a: &HAlgebra, n: usize) -> Vec<Cochain> {
    equivariant_complex(a).basis(n)
}

/// `f(S(h⁽¹⁾) g h⁽⁰⁾) = ε(h) f(g)` for all `h`, `g`.
fn r_rows_a(h: &FinHopf) -> Vec<SVec> {
    rows_for(h, |p, q, g| h.mul(&h.mul(h.s_basis(q), &Elem::unit(g)), &Elem::unit(p)))
}

/// `f(S²(h⁽⁰⁾) g S(h⁽¹⁾)) = ε(h) f(g)` for all `h`, `g`.
fn r_rows_b(h: &FinHopf) -> Vec<SVec> {
    rows_for(h, |p, q, g| {
        let s2 = h.s(h.s_basis(p));
        h.mul(&h.mul(&s2, &Elem::unit(g)), h.s_basis(q))
    })
}

fn rows_for(h: &FinHopf, conj: impl Fn(usize, usize, usize) -> Elem) -> Vec<SVec> {
    let d = h.dim();
    let mut rows = Vec::new();
    for j in 0..d {
        for g in 0..d {
            let mut acc = Accum::new();
            for (p, q, c) in h.coprod_basis(j) {
                acc.add_scaled(c, &conj(*p, *q, g));
            }
            let eps = h.counit_basis(j);
            if !eps.is_zero() {
                acc.add(g, &-eps.clone());
            }
            rows.push(acc.finish());
        }
    }
    rows
}

/// Basis of `R(H)`, computed from both defining conditions, which must agree.
pub fn r_of_h(h: &FinHopf) -> Result<Vec<SVec>, Error> {
    let a = Subspace::cut_out(h.dim(), r_rows_a(h));
    let b = Subspace::cut_out(h.dim(), r_rows_b(h));
    let agree = a.dim() == b.dim() && a.basis().iter().all(|v| b.contains(v));
    if !agree {
        return Err(Error::Domain(format!(
            "the two descriptions of R({}) differ: dimensions {} and {}",
            h.name(),
            a.dim(),
            b.dim()
        )));
    }
    Ok(a.basis().to_vec())
}

/// Both `R(H)` conditions as a report, with a witness for any disagreement.
pub fn verify_r_of_h(h: &FinHopf) -> Report {
    let mut rep = Report::new(format!("R({})", h.name()));
    let a = Subspace::cut_out(h.dim(), r_rows_a(h));
    let b = Subspace::cut_out(h.dim(), r_rows_b(h));
    let ab = a.basis().iter().enumerate().find(|(_, v)| !b.contains(v));
    rep.record("condition A ⊆ condition B", ab.map(|(k, v)| Failure::new(format!("basis #{k}"), h.fmt(v), "outside")));
    let ba = b.basis().iter().enumerate().find(|(_, v)| !a.contains(v));
    rep.record("condition B ⊆ condition A", ba.map(|(k, v)| Failure::new(format!("basis #{k}"), h.fmt(v), "outside")));
    rep
}

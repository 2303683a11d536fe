use std::sync::Arc;

use num_traits::One;

use super::equivariant::{equivariant_complex, std_cyclic_ops, tensor2};
use super::{compare_on, decode, encode, kron, Cocyclic, Complex, LinOp, Subspace};
use crate::actions::{crossed_product, ActionMap, FinAlgebra, HAlgebra};
use crate::hopf::{Elem, FinHopf};
use crate::linalg::{Accum, SVec};
use crate::report::Report;
use crate::scalar::Rational;
use crate::Error;

type Legs = Arc<Vec<(Vec<usize>, Rational)>>;

/// Calls `f` on every choice of one term from each list, with the product coefficient.
fn for_each_combo(lists: &[Legs], f: &mut impl FnMut(&[&[usize]], &Rational)) {
    fn go<'a>(
        lists: &'a [Legs],
        k: usize,
        picked: &mut Vec<&'a [usize]>,
        c: Rational,
        f: &mut impl FnMut(&[&[usize]], &Rational),
    ) {
        if k == lists.len() {
            f(picked, &c);
            return;
        }
        for (legs, d) in lists[k].iter() {
            picked.push(legs);
            go(lists, k + 1, picked, &c * d, f);
            picked.pop();
        }
    }
    go(lists, 0, &mut Vec::new(), Rational::one(), f);
}

fn product(h: &FinHopf, xs: impl IntoIterator<Item = usize>) -> Elem {
    xs.into_iter().fold(h.unit().clone(), |acc, x| h.mul(&acc, &Elem::unit(x)))
}

/// `A⋊H`, the maps `φ`, `ψ`, `μ*` and the cocylindrical module `X_{p,q}`
/// for an `H`-module algebra `A`.
#[derive(Clone, Debug)]
pub struct Crossed {
    hopf: Arc<FinHopf>,
    alg: FinAlgebra,
    act: ActionMap,
    crossed: FinAlgebra,
    drop_vertical_action: bool,
}

impl Crossed {
    pub fn new(a: &HAlgebra) -> Result<Self, Error> {
        let crossed = crossed_product(&a.hopf, &a.algebra, &a.action)?;
        Ok(Self {
            hopf: a.hopf.clone(),
            alg: a.algebra.clone(),
            act: a.action.clone(),
            crossed,
            drop_vertical_action: false,
        })
    }

    /// Negative control: `τ̄` and `∂̄^q` without the action of `g_q⁽⁰⁾`.
    pub fn without_vertical_action(mut self) -> Self {
        self.drop_vertical_action = true;
        self
    }

    pub fn crossed_algebra(&self) -> &FinAlgebra {
        &self.crossed
    }

    fn da(&self) -> usize {
        self.alg.dim()
    }

    fn dh(&self) -> usize {
        self.hopf.dim()
    }

    /// `dim X_{p,q}`.
    pub fn xdim(&self, p: usize, q: usize) -> usize {
        self.da().pow(p as u32 + 1) * self.dh().pow(q as u32 + 1)
    }

    fn hom_dim(&self, n: usize) -> usize {
        (self.da() * self.dh()).pow(n as u32 + 1)
    }

    fn split(&self, p: usize, q: usize, idx: usize) -> (Vec<usize>, Vec<usize>) {
        let hq = self.dh().pow(q as u32 + 1);
        (decode(idx / hq, self.da(), p + 1), decode(idx % hq, self.dh(), q + 1))
    }

    fn cell(&self, q: usize, a: &[&SVec], g: &[&SVec]) -> SVec {
        tensor2(&kron(a, self.da()), &kron(g, self.dh()), self.dh().pow(q as u32 + 1))
    }

    pub fn coord(&self, p: usize, q: usize, idx: usize) -> String {
        let (a, g) = self.split(p, q, idx);
        let al: Vec<&str> = a.iter().map(|&x| self.alg.labels()[x].as_str()).collect();
        let gl: Vec<&str> = g.iter().map(|&x| self.hopf.labels()[x].as_str()).collect();
        format!("({})({})", al.join(", "), gl.join(", "))
    }

    fn hom_coord(&self, n: usize, idx: usize) -> String {
        let xs = decode(idx, self.da() * self.dh(), n + 1);
        let l: Vec<&str> = xs.iter().map(|&x| self.crossed.labels()[x].as_str()).collect();
        format!("({})", l.join(", "))
    }

    /// `(μ*f)(a)(g₀,…,g_n) = f(a)(g₀⋯g_n)`, from `C^n(A, F(H))` to `X_{n,n}`.
    pub fn mu_star(&self, n: usize) -> LinOp {
        let dh = self.dh();
        LinOp::from_fn(self.da().pow(n as u32 + 1) * dh, self.xdim(n, n), |idx| {
            let (a, g) = self.split(n, n, idx);
            tensor2(&SVec::unit(encode(&a, self.da())), &product(&self.hopf, g), dh)
        })
    }

    /// `φ_n: X_{n,n} → Hom((A⋊H)^{⊗(n+1)}, k)`; `g_i` contributes `g_i^{(i−j)}`
    /// to slot `j ≤ i` and `g_i^{(i+1)}` to the evaluation.
    pub fn phi_x(&self, n: usize) -> LinOp {
        let (da, dh) = (self.da(), self.dh());
        let h = &self.hopf;
        LinOp::from_fn(self.xdim(n, n), self.hom_dim(n), |idx| {
            let xs = decode(idx, da * dh, n + 1);
            let (a, g): (Vec<usize>, Vec<usize>) = xs.iter().map(|x| (x / dh, x % dh)).unzip();
            let lists: Vec<Legs> = (0..=n).map(|i| h.delta_basis(g[i], i + 1)).collect();
            let mut acc = Accum::new();
            for_each_combo(&lists, &mut |l, c| {
                let slots: Vec<SVec> = (0..=n)
                    .map(|j| {
                        let m = product(h, (j..=n).map(|i| l[i][i - j]));
                        self.act.act(&h.s_inv(&m), &SVec::unit(a[j]))
                    })
                    .collect();
                let gs: Vec<SVec> = (0..=n).map(|i| SVec::unit(l[i][i + 1])).collect();
                let sr: Vec<&SVec> = slots.iter().collect();
                let gr: Vec<&SVec> = gs.iter().collect();
                acc.add_scaled(c, &self.cell(n, &sr, &gr));
            });
            acc.finish()
        })
    }

    /// `φ_n` on `C^n(A, F(H))`: `φ_x ∘ μ*`, evaluating at `g₀^{(1)}g₁^{(2)}⋯g_n^{(n+1)}`.
    pub fn phi(&self, n: usize) -> LinOp {
        self.phi_x(n).compose(&self.mu_star(n))
    }

    /// `ψ_n: Hom((A⋊H)^{⊗(n+1)}, k) → X_{n,n}`; slot `j` is
    /// `(g_j^{(j)}⋯g_n^{(j)})·a_j ⊗ g_j^{(j+1)}`.
    pub fn psi(&self, n: usize) -> LinOp {
        let (da, dh) = (self.da(), self.dh());
        let h = &self.hopf;
        LinOp::from_fn(self.hom_dim(n), self.xdim(n, n), |idx| {
            let (a, g) = self.split(n, n, idx);
            let lists: Vec<Legs> = (0..=n).map(|i| h.delta_basis(g[i], i + 1)).collect();
            let mut acc = Accum::new();
            for_each_combo(&lists, &mut |l, c| {
                let slots: Vec<SVec> = (0..=n)
                    .map(|j| {
                        let m = product(h, (j..=n).map(|i| l[i][j]));
                        tensor2(&self.act.act(&m, &SVec::unit(a[j])), &SVec::unit(l[j][j + 1]), dh)
                    })
                    .collect();
                let sr: Vec<&SVec> = slots.iter().collect();
                acc.add_scaled(c, &kron(&sr, da * dh));
            });
            acc.finish()
        })
    }

    /// `τ_{p,q}`.
    pub fn h_tau(&self, p: usize, q: usize) -> LinOp {
        let d = self.xdim(p, q);
        self.h_twisted(p, q, d, |units, twisted| {
            let mut v = vec![twisted];
            v.extend(units[..p].iter().cloned());
            v
        })
    }

    /// Rows built from `S⁻¹(g₀⁽⁰⁾⋯g_q⁽⁰⁾)·a_p` and `(g₀⁽¹⁾,…,g_q⁽¹⁾)`.
    fn h_twisted(&self, p: usize, q: usize, src: usize, slots: impl Fn(&[SVec], SVec) -> Vec<SVec>) -> LinOp {
        let h = &self.hopf;
        LinOp::from_fn(src, self.xdim(p, q), |idx| {
            let (a, g) = self.split(p, q, idx);
            let units: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            let lists: Vec<Legs> = g.iter().map(|&x| h.delta_basis(x, 1)).collect();
            let mut acc = Accum::new();
            for_each_combo(&lists, &mut |l, c| {
                let m = product(h, l.iter().map(|x| x[0]));
                let tw = self.act.act(&h.s_inv(&m), &units[p]);
                let parts = slots(&units, tw);
                let gs: Vec<SVec> = l.iter().map(|x| SVec::unit(x[1])).collect();
                let pr: Vec<&SVec> = parts.iter().collect();
                let gr: Vec<&SVec> = gs.iter().collect();
                acc.add_scaled(c, &self.cell(q, &pr, &gr));
            });
            acc.finish()
        })
    }

    /// `∂^i_{p,q}: X_{p−1,q} → X_{p,q}`.
    pub fn h_face(&self, p: usize, q: usize, i: usize) -> LinOp {
        assert!(p >= 1 && i <= p);
        let src = self.xdim(p - 1, q);
        if i == p {
            return self.h_twisted(p, q, src, |units, tw| {
                let mut v = vec![self.alg.mul(&tw, &units[0])];
                v.extend(units[1..p].iter().cloned());
                v
            });
        }
        LinOp::from_fn(src, self.xdim(p, q), |idx| {
            let (a, g) = self.split(p, q, idx);
            let mut parts: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            parts[i] = self.alg.mul_basis(a[i], a[i + 1]).clone();
            parts.remove(i + 1);
            let gs: Vec<SVec> = g.iter().map(|&x| SVec::unit(x)).collect();
            self.cell(q, &parts.iter().collect::<Vec<_>>(), &gs.iter().collect::<Vec<_>>())
        })
    }

    /// `σ^i_{p,q}: X_{p+1,q} → X_{p,q}`.
    pub fn h_degen(&self, p: usize, q: usize, i: usize) -> LinOp {
        assert!(i <= p);
        LinOp::from_fn(self.xdim(p + 1, q), self.xdim(p, q), |idx| {
            let (a, g) = self.split(p, q, idx);
            let mut parts: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            parts.insert(i + 1, self.alg.unit().clone());
            let gs: Vec<SVec> = g.iter().map(|&x| SVec::unit(x)).collect();
            self.cell(q, &parts.iter().collect::<Vec<_>>(), &gs.iter().collect::<Vec<_>>())
        })
    }

    /// Rows built from `g_q⁽⁰⁾·(a₀,…,a_p)` and `g_q⁽¹⁾`.
    fn v_twisted(&self, p: usize, q: usize, sq: usize, gslots: impl Fn(&[SVec], SVec) -> Vec<SVec>) -> LinOp {
        let h = &self.hopf;
        LinOp::from_fn(self.xdim(p, sq), self.xdim(p, q), |idx| {
            let (a, g) = self.split(p, q, idx);
            let gu: Vec<SVec> = g.iter().map(|&x| SVec::unit(x)).collect();
            let mut acc = Accum::new();
            if self.drop_vertical_action {
                let parts: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
                let gs = gslots(&gu[..q], gu[q].clone());
                acc.add_scaled(&Rational::one(), &self.cell(sq, &parts.iter().collect::<Vec<_>>(), &gs.iter().collect::<Vec<_>>()));
                return acc.finish();
            }
            for (legs, c) in h.delta_basis(g[q], p + 1).iter() {
                let parts: Vec<SVec> = (0..=p).map(|k| self.act.act_basis(legs[k], a[k]).clone()).collect();
                let gs = gslots(&gu[..q], SVec::unit(legs[p + 1]));
                acc.add_scaled(c, &self.cell(sq, &parts.iter().collect::<Vec<_>>(), &gs.iter().collect::<Vec<_>>()));
            }
            acc.finish()
        })
    }

    /// `τ̄_{p,q}`.
    pub fn v_tau(&self, p: usize, q: usize) -> LinOp {
        self.v_twisted(p, q, q, |rest, last| {
            let mut v = vec![last];
            v.extend(rest.iter().cloned());
            v
        })
    }

    /// `∂̄^i_{p,q}: X_{p,q−1} → X_{p,q}`.
    pub fn v_face(&self, p: usize, q: usize, i: usize) -> LinOp {
        assert!(q >= 1 && i <= q);
        let src = self.xdim(p, q - 1);
        if i == q {
            return self.v_twisted(p, q, q - 1, |rest, last| {
                let mut v = vec![self.hopf.mul(&last, &rest[0])];
                v.extend(rest[1..].iter().cloned());
                v
            });
        }
        LinOp::from_fn(src, self.xdim(p, q), |idx| {
            let (a, g) = self.split(p, q, idx);
            let parts: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            let mut gs: Vec<SVec> = g.iter().map(|&x| SVec::unit(x)).collect();
            gs[i] = self.hopf.mul_basis(g[i], g[i + 1]).clone();
            gs.remove(i + 1);
            self.cell(q - 1, &parts.iter().collect::<Vec<_>>(), &gs.iter().collect::<Vec<_>>())
        })
    }

    /// `σ̄^i_{p,q}: X_{p,q+1} → X_{p,q}`.
    pub fn v_degen(&self, p: usize, q: usize, i: usize) -> LinOp {
        assert!(i <= q);
        LinOp::from_fn(self.xdim(p, q + 1), self.xdim(p, q), |idx| {
            let (a, g) = self.split(p, q, idx);
            let parts: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            let mut gs: Vec<SVec> = g.iter().map(|&x| SVec::unit(x)).collect();
            gs.insert(i + 1, self.hopf.unit().clone());
            self.cell(q + 1, &parts.iter().collect::<Vec<_>>(), &gs.iter().collect::<Vec<_>>())
        })
    }
}

/// Row `q` of `X`: the horizontal paracocyclic module `p ↦ X_{p,q}`.
pub struct XRow(pub Arc<Crossed>, pub usize);
/// Column `p` of `X`: the vertical paracocyclic module `q ↦ X_{p,q}`.
pub struct XCol(pub Arc<Crossed>, pub usize);

impl Cocyclic for XRow {
    fn name(&self) -> String {
        format!("X_{{•,{}}}", self.1)
    }
    fn dim(&self, n: usize) -> usize {
        self.0.xdim(n, self.1)
    }
    fn tau(&self, n: usize) -> LinOp {
        self.0.h_tau(n, self.1)
    }
    fn face(&self, n: usize, i: usize) -> LinOp {
        self.0.h_face(n, self.1, i)
    }
    fn degen(&self, n: usize, i: usize) -> LinOp {
        self.0.h_degen(n, self.1, i)
    }
    fn coord(&self, n: usize, idx: usize) -> String {
        self.0.coord(n, self.1, idx)
    }
}

impl Cocyclic for XCol {
    fn name(&self) -> String {
        format!("X_{{{},•}}", self.1)
    }
    fn dim(&self, n: usize) -> usize {
        self.0.xdim(self.1, n)
    }
    fn tau(&self, n: usize) -> LinOp {
        self.0.v_tau(self.1, n)
    }
    fn face(&self, n: usize, i: usize) -> LinOp {
        self.0.v_face(self.1, n, i)
    }
    fn degen(&self, n: usize, i: usize) -> LinOp {
        self.0.v_degen(self.1, n, i)
    }
    fn coord(&self, n: usize, idx: usize) -> String {
        self.0.coord(self.1, n, idx)
    }
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Tau,
    Face(usize),
    Degen(usize),
}

impl Kind {
    /// All operators landing in degree `n` whose source degree is at most `max`.
    fn all(n: usize, max: usize) -> Vec<(Kind, usize)> {
        let mut v = vec![(Kind::Tau, n)];
        if n >= 1 {
            v.extend((0..=n).map(|i| (Kind::Face(i), n - 1)));
        }
        if n < max {
            v.extend((0..=n).map(|i| (Kind::Degen(i), n + 1)));
        }
        v
    }

    fn label(self, bar: bool) -> String {
        let b = if bar { "\u{304}" } else { "" };
        match self {
            Kind::Tau => format!("τ{b}"),
            Kind::Face(i) => format!("∂{b}^{i}"),
            Kind::Degen(i) => format!("σ{b}^{i}"),
        }
    }
}

impl Crossed {
    fn h_op(&self, k: Kind, p: usize, q: usize) -> LinOp {
        match k {
            Kind::Tau => self.h_tau(p, q),
            Kind::Face(i) => self.h_face(p, q, i),
            Kind::Degen(i) => self.h_degen(p, q, i),
        }
    }

    fn v_op(&self, k: Kind, p: usize, q: usize) -> LinOp {
        match k {
            Kind::Tau => self.v_tau(p, q),
            Kind::Face(i) => self.v_face(p, q, i),
            Kind::Degen(i) => self.v_degen(p, q, i),
        }
    }
}

/// Horizontal and vertical paracocyclic identities, commutation of every
/// horizontal with every vertical operator, and cylindricity, for
/// `p ≤ p_max`, `q ≤ q_max`.
pub fn verify_cylindrical(x: &Arc<Crossed>, p_max: usize, q_max: usize) -> Report {
    let mut rep = Report::new(format!("X_{{p,q}} over {}", x.crossed.name()));
    for q in 0..=q_max {
        rep.absorb(&format!("row q={q}"), Complex::new(XRow(x.clone(), q)).verify(p_max, false));
    }
    for p in 0..=p_max {
        rep.absorb(&format!("column p={p}"), Complex::new(XCol(x.clone(), p)).verify(q_max, false));
    }
    for p in 0..=p_max {
        for q in 0..=q_max {
            let mut fail = None;
            'outer: for (hk, ps) in Kind::all(p, p_max) {
                for (vk, qs) in Kind::all(q, q_max) {
                    let l = x.h_op(hk, p, q).compose(&x.v_op(vk, ps, q));
                    let r = x.v_op(vk, p, q).compose(&x.h_op(hk, p, qs));
                    let sub = Subspace::full(l.src());
                    if let Some(mut f) = compare_on(&sub, &l, &r, |i| x.coord(p, q, i)) {
                        f.witness = format!("{}{}; {}", hk.label(false), vk.label(true), f.witness);
                        fail = Some(f);
                        break 'outer;
                    }
                }
            }
            rep.record(format!("horizontal and vertical operators commute at (p, q) = ({p}, {q})"), fail);
            let (t, tb) = (x.h_tau(p, q), x.v_tau(p, q));
            let sub = Subspace::full(x.xdim(p, q));
            let own = t.pow(p + 1).compose(&tb.pow(q + 1));
            let id = LinOp::identity(x.xdim(p, q));
            rep.record(
                format!("τ^{{p+1}}τ̄^{{q+1}} = id at (p, q) = ({p}, {q})"),
                compare_on(&sub, &own, &id, |i| x.coord(p, q, i)),
            );
            if p == q {
                rep.record(format!("τ̄^{{p+1}}τ^{{q+1}} = id at (p, q) = ({p}, {q})"), cylindricity_swapped(x, p, q));
            }
        }
    }
    rep
}

/// `τ̄^{p+1}τ^{q+1} = id` with the exponents swapped; it agrees with
/// `τ^{p+1}τ̄^{q+1} = id` only when `p = q`.
pub fn cylindricity_swapped(x: &Crossed, p: usize, q: usize) -> Option<crate::report::Failure> {
    let l = x.v_tau(p, q).pow(p + 1).compose(&x.h_tau(p, q).pow(q + 1));
    compare_on(&Subspace::full(x.xdim(p, q)), &l, &LinOp::identity(x.xdim(p, q)), |i| x.coord(p, q, i))
}

/// The diagonal of `X` against the standard cocyclic module of `A⋊H` under `φ`,
/// and `φ∘ψ = ψ∘φ = id`, for `n ≤ n_max`.
pub fn verify_diagonal(x: &Crossed, n_max: usize) -> Report {
    let mut rep = Report::new(format!("Δ(X) ≅ C({})", x.crossed.name()));
    let std = std_cyclic_ops(&x.crossed);
    for n in 0..=n_max {
        let (phi, psi) = (x.phi_x(n), x.psi(n));
        let hom = Subspace::full(x.hom_dim(n));
        let xs = Subspace::full(x.xdim(n, n));
        let r = compare_on(&hom, &phi.compose(&psi), &LinOp::identity(x.hom_dim(n)), |i| x.hom_coord(n, i));
        rep.record_at("φ∘ψ = id", n, r);
        let r = compare_on(&xs, &psi.compose(&phi), &LinOp::identity(x.xdim(n, n)), |i| x.coord(n, n, i));
        rep.record_at("ψ∘φ = id", n, r);
        let diag_tau = x.v_tau(n, n).compose(&x.h_tau(n, n));
        let r = compare_on(&xs, &phi.compose(&diag_tau), &std.tau(n).compose(&phi), |i| x.hom_coord(n, i));
        rep.record_at("φ τ̄τ = τ φ", n, r);
        if n >= 1 {
            let prev = x.phi_x(n - 1);
            let sub = Subspace::full(x.xdim(n - 1, n - 1));
            let r = (0..=n).find_map(|i| {
                let d = x.v_face(n, n, i).compose(&x.h_face(n, n - 1, i));
                let std_face = std.face(n, i).expect("index in range");
                compare_on(&sub, &phi.compose(&d), &std_face.compose(&prev), |k| format!("i={i}; {}", x.hom_coord(n, k)))
            });
            rep.record_at("φ ∂̄^i∂^i = ∂^i φ", n, r);
        }
        if n < n_max {
            let next = x.phi_x(n + 1);
            let sub = Subspace::full(x.xdim(n + 1, n + 1));
            let r = (0..=n).find_map(|i| {
                let d = x.v_degen(n, n, i).compose(&x.h_degen(n, n + 1, i));
                let std_deg = std.degen(n, i).expect("index in range");
                compare_on(&sub, &phi.compose(&d), &std_deg.compose(&next), |k| format!("i={i}; {}", x.hom_coord(n, k)))
            });
            rep.record_at("φ σ̄^iσ^i = σ^i φ", n, r);
        }
    }
    rep
}

/// `φ` intertwines `T`, `∂^i`, `σ^i` of the equivariant cochains with the
/// operators of `C(A⋊H)`, checked on equivariant cochains of degree `≤ n_max`.
pub fn verify_phi(a: &HAlgebra, n_max: usize) -> Result<Report, Error> {
    let x = Crossed::new(a)?;
    let eq = equivariant_complex(a);
    let std = std_cyclic_ops(&x.crossed);
    let mut rep = Report::new(format!("φ: C_{}({}) → C({})", a.hopf.name(), a.algebra.name(), x.crossed.name()));
    for n in 0..=n_max {
        let phi = x.phi(n);
        let sub = eq.space(n, false);
        let r = compare_on(&sub, &phi.compose(&eq.tau(n)), &std.tau(n).compose(&phi), |i| x.hom_coord(n, i));
        rep.record_at("φT = τφ", n, r);
        if n >= 1 {
            let prev = x.phi(n - 1);
            let sub = eq.space(n - 1, false);
            let r = (0..=n).find_map(|i| {
                let l = phi.compose(&eq.face(n, i).expect("in range"));
                let r = std.face(n, i).expect("in range").compose(&prev);
                compare_on(&sub, &l, &r, |k| format!("i={i}; {}", x.hom_coord(n, k)))
            });
            rep.record_at("φ∂^i = ∂^iφ", n, r);
        }
        if n < n_max {
            let next = x.phi(n + 1);
            let sub = eq.space(n + 1, false);
            let r = (0..=n).find_map(|i| {
                let l = phi.compose(&eq.degen(n, i).expect("in range"));
                let r = std.degen(n, i).expect("in range").compose(&next);
                compare_on(&sub, &l, &r, |k| format!("i={i}; {}", x.hom_coord(n, k)))
            });
            rep.record_at("φσ^i = σ^iφ", n, r);
        }
        let r = compare_on(&sub, &x.psi(n).compose(&phi), &x.mu_star(n), |i| x.coord(n, n, i));
        rep.record_at("ψ∘φ = μ* on equivariant cochains", n, r);
    }
    Ok(rep)
}

use crate::actions::{invariance_failure, HAlgebra};
use crate::cyclic::{
    compare_on, decode, equivariant_complex, kron, tensor2, verify_cocyclic_map, Cocyclic, Complex, EquivariantModule,
    LinOp,
};
use crate::hopf::Elem;
use crate::linalg::{Accum, SVec};
use crate::report::Report;
use crate::scalar::Rational;
use crate::Error;

/// Conjugation `α_b`, inner derivation `δ_b` and the homotopies `θ^i`, `ϱ`
/// for an invariant element `b` of an `H`-algebra.
pub struct InnerOps {
    cx: Complex<EquivariantModule>,
    b: Elem,
    b_inv: Option<Elem>,
}

impl InnerOps {
    pub fn new(a: &HAlgebra, b: Elem) -> Result<Self, Error> {
        if b.max_index().is_some_and(|i| i >= a.dim()) {
            return Err(Error::Shape(format!("element outside {} of dimension {}", a.name, a.dim())));
        }
        if let Some(f) = invariance_failure(&a.hopf, &a.action, |x| a.algebra.fmt(x), &b) {
            return Err(Error::Domain(format!("b is not invariant: {}·b = {}", f.witness, f.lhs)));
        }
        let b_inv = a.algebra.inverse(&b);
        Ok(Self { cx: equivariant_complex(a), b, b_inv })
    }

    pub fn complex(&self) -> &Complex<EquivariantModule> {
        &self.cx
    }

    pub fn is_invertible(&self) -> bool {
        self.b_inv.is_some()
    }

    fn inv(&self) -> Result<&Elem, Error> {
        self.b_inv.as_ref().ok_or_else(|| Error::Domain("b is not invertible".into()))
    }

    fn da(&self) -> usize {
        self.cx.module().algebra().dim()
    }

    fn dh(&self) -> usize {
        self.cx.module().hopf().dim()
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        self.cx.module().algebra().mul(x, y)
    }

    /// Rows `idx ↦ f(args(a))(g)` where `args` turns the output tuple into input slots.
    fn substitution(&self, n_in: usize, n_out: usize, args: impl Fn(&[usize]) -> Vec<Vec<(Rational, Vec<Elem>)>>) -> LinOp {
        let (da, dh) = (self.da(), self.dh());
        let src = da.pow(n_in as u32 + 1) * dh;
        let dst = da.pow(n_out as u32 + 1) * dh;
        LinOp::from_fn(src, dst, |idx| {
            let a = decode(idx / dh, da, n_out + 1);
            let g = SVec::unit(idx % dh);
            let mut acc = Accum::new();
            for terms in args(&a) {
                for (c, parts) in terms {
                    let refs: Vec<&Elem> = parts.iter().collect();
                    acc.add_scaled(&c, &tensor2(&kron(&refs, da), &g, dh));
                }
            }
            acc.finish()
        })
    }

    fn conj(&self, x: usize) -> Result<Elem, Error> {
        Ok(self.mul(&self.mul(&self.b, &Elem::unit(x)), self.inv()?))
    }

    /// `α_b f(a₀,…,a_n) = f(ba₀b⁻¹,…,ba_nb⁻¹)`.
    pub fn alpha(&self, n: usize) -> Result<LinOp, Error> {
        let conj: Vec<Elem> = (0..self.da()).map(|x| self.conj(x)).collect::<Result<_, _>>()?;
        Ok(self.substitution(n, n, |a| vec![vec![(Rational::from(1), a.iter().map(|&x| conj[x].clone()).collect())]]))
    }

    /// `δ_b f(a₀,…,a_n) = Σ_i f(a₀,…,[b, a_i],…,a_n)`.
    pub fn delta(&self, n: usize) -> LinOp {
        let comm: Vec<Elem> =
            (0..self.da()).map(|x| self.mul(&self.b, &Elem::unit(x)).sub(&self.mul(&Elem::unit(x), &self.b))).collect();
        self.substitution(n, n, |a| {
            (0..=n)
                .map(|i| {
                    let parts = a.iter().enumerate().map(|(k, &x)| if k == i { comm[x].clone() } else { Elem::unit(x) }).collect();
                    vec![(Rational::from(1), parts)]
                })
                .collect()
        })
    }

    /// `θ^i f(a₀,…,a_n) = f(a₀b⁻¹, ba₁b⁻¹,…, ba_ib⁻¹, b, a_{i+1},…,a_n)`, `C^{n+1} → C^n`.
    pub fn theta(&self, n: usize, i: usize) -> Result<LinOp, Error> {
        if i > n {
            return Err(Error::Index(format!("θ^{i} in degree {n}")));
        }
        let inv = self.inv()?.clone();
        let conj: Vec<Elem> = (0..self.da()).map(|x| self.conj(x)).collect::<Result<_, _>>()?;
        Ok(self.substitution(n + 1, n, |a| {
            let mut parts = vec![self.mul(&Elem::unit(a[0]), &inv)];
            parts.extend(a[1..=i].iter().map(|&x| conj[x].clone()));
            parts.push(self.b.clone());
            parts.extend(a[i + 1..].iter().map(|&x| Elem::unit(x)));
            vec![vec![(Rational::from(1), parts)]]
        }))
    }

    /// `ϱ f(a₀,…,a_n) = Σ_i (−1)^i f(a₀,…,a_i, b, a_{i+1},…,a_n)`, `C^{n+1} → C^n`.
    pub fn rho(&self, n: usize) -> LinOp {
        self.substitution(n + 1, n, |a| {
            (0..=n)
                .map(|i| {
                    let mut parts: Vec<Elem> = a.iter().map(|&x| Elem::unit(x)).collect();
                    parts.insert(i + 1, self.b.clone());
                    vec![(Rational::from(if i % 2 == 0 { 1 } else { -1 }), parts)]
                })
                .collect()
        })
    }

    /// The homotopy identities and the cocyclicity of `α_b`, `δ_b`, `n ≤ n_max`.
    pub fn verify(&self, n_max: usize) -> Result<Report, Error> {
        let cx = &self.cx;
        let mut rep = Report::new(format!("inner automorphisms and derivations of {}", cx.name()));
        let coord = |n: usize| move |i: usize| cx.module().coord(n, i);
        if self.is_invertible() {
            let alphas: Vec<LinOp> = (0..=n_max).map(|n| self.alpha(n)).collect::<Result<_, _>>()?;
            verify_cocyclic_map(&mut rep, "α_b", cx, cx, |n| alphas[n].clone(), n_max);
        }
        verify_cocyclic_map(&mut rep, "δ_b", cx, cx, |n| self.delta(n), n_max);
        for n in 0..=n_max {
            let sub = cx.space(n, false);
            if self.is_invertible() {
                let thetas: Vec<LinOp> = (0..=n).map(|i| self.theta(n, i)).collect::<Result<_, _>>()?;
                let top = thetas[n].compose(&*cx.face(n + 1, n + 1)?);
                rep.record_at("θ^n∂^{n+1} = α_b", n, compare_on(&sub, &top, &self.alpha(n)?, coord(n)));
                let bottom = thetas[0].compose(&*cx.face(n + 1, 0)?);
                rep.record_at("θ^0∂^0 = id", n, compare_on(&sub, &bottom, &LinOp::identity(cx.dim(n)), coord(n)));
                let mid = (0..n).find_map(|j| {
                    let f = cx.face(n + 1, j + 1).expect("in range");
                    compare_on(&sub, &thetas[j].compose(&f), &thetas[j + 1].compose(&f), |k| format!("j={j}; {}", coord(n)(k)))
                });
                if n > 0 {
                    rep.record_at("θ^j∂^{j+1} = θ^{j+1}∂^{j+1}", n, mid);
                }
            }
            let mut lhs = self.rho(n).compose(&cx.b(n + 1));
            if n > 0 {
                lhs = lhs.add(&cx.b(n).compose(&self.rho(n - 1)));
            }
            let rhs = self.delta(n).scale(&Rational::from(-1));
            rep.record_at("bϱ + ϱb = −δ_b", n, compare_on(&sub, &lhs, &rhs, coord(n)));
        }
        Ok(rep)
    }
}

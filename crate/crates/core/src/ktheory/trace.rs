use num_traits::{One, Zero};

use super::{invariant_functionals, InvariantFunctionalSpace, MatrixAlgebra, Structure};
use crate::actions::{beta_iso, HAlgebra, Representation};
use crate::cyclic::{
    compare_on, decode, encode, equivariant_complex, kron, tensor2, verify_cocyclic_map, Cochain, Cocyclic, Complex,
    EquivariantModule, LinOp, Subspace,
};
use crate::hopf::Elem;
use crate::linalg::{Accum, Mat, SVec};
use crate::report::Report;
use crate::scalar::Rational;
use crate::Error;

/// The generalized trace map `Ψ: C_H(A) → C_H(A ⊗ End V)` into the diagonal
/// structure, and its simplified form into the non-diagonal one.
pub struct PsiTrace {
    base: HAlgebra,
    rep: Representation,
    src: Complex<EquivariantModule>,
    diag: Complex<EquivariantModule>,
    bar: Complex<EquivariantModule>,
    beta: Vec<Elem>,
    s_mats: Vec<Mat>,
    r_h: InvariantFunctionalSpace,
}

type Slot = Vec<(usize, Mat, Rational)>;

impl PsiTrace {
    pub fn new(a: &HAlgebra, v: &Representation) -> Result<Self, Error> {
        let diag = MatrixAlgebra::new(a, v, Structure::Diagonal)?;
        let bar = MatrixAlgebra::new(a, v, Structure::NonDiagonal)?;
        let h = &a.hopf;
        Ok(Self {
            base: a.clone(),
            rep: v.clone(),
            src: equivariant_complex(a),
            diag: equivariant_complex(diag.halgebra()),
            bar: equivariant_complex(bar.halgebra()),
            beta: beta_iso(a, v, 1)?,
            s_mats: (0..h.dim()).map(|i| v.eval(h.s_basis(i))).collect(),
            r_h: invariant_functionals(h)?,
        })
    }

    pub fn base(&self) -> &HAlgebra {
        &self.base
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn source(&self) -> &Complex<EquivariantModule> {
        &self.src
    }

    /// Cochains on the diagonal structure.
    pub fn target(&self) -> &Complex<EquivariantModule> {
        &self.diag
    }

    /// Cochains on the non-diagonal structure.
    pub fn target_bar(&self) -> &Complex<EquivariantModule> {
        &self.bar
    }

    pub fn invariant_functionals(&self) -> &InvariantFunctionalSpace {
        &self.r_h
    }

    fn dims(&self) -> (usize, usize, usize) {
        let d = self.rep.dim();
        (self.base.dim(), d * d, self.base.hopf.dim())
    }

    fn slot(&self, x: usize, full: bool) -> Slot {
        let (_, dd, _) = self.dims();
        let d = self.rep.dim();
        let (a, k) = (x / dd, x % dd);
        let u = Mat::unit(d, k / d, k % d);
        if !full {
            return vec![(a, u, Rational::one())];
        }
        let co = self.base.coaction.as_ref().expect("checked by beta_iso");
        co.legs(a).map(|(a0, a1, c)| (a0, self.s_mats[a1].mul(&u), c.clone())).collect()
    }

    /// Coefficients of `f ↦ Ψf(x₀,…,x_n)(g)` on the source cochain basis.
    /// With `full`, `f(a₀₍₀₎,…)(g⁽¹⁾) tr(S(a₀₍₁₎)u₀⋯S(a_n₍₁₎)u_n g⁽⁰⁾)`;
    /// otherwise `f(a₀,…,a_n)(g⁽¹⁾) tr(u₀⋯u_n g⁽⁰⁾)`.
    fn row(&self, xs: &[usize], g: usize, full: bool) -> SVec {
        let (da, _, dh) = self.dims();
        let d = self.rep.dim();
        let mut terms: Vec<(Vec<usize>, Mat, Rational)> = vec![(Vec::new(), Mat::identity(d), Rational::one())];
        for &x in xs {
            let slot = self.slot(x, full);
            let mut next = Vec::with_capacity(terms.len() * slot.len());
            for (a, m, c) in &terms {
                for (a0, u, c0) in &slot {
                    let mut a = a.clone();
                    a.push(*a0);
                    next.push((a, m.mul(u), c * c0));
                }
            }
            terms = next;
        }
        let h = &self.base.hopf;
        let mut acc = Accum::new();
        for (a, m, c) in &terms {
            let at = encode(a, da);
            for (p, q, cg) in h.coprod_basis(g) {
                let t = m.mul(self.rep.basis_mat(*p)).trace();
                if !t.is_zero() {
                    acc.add(at * dh + q, &(&(c * cg) * &t));
                }
            }
        }
        acc.finish()
    }

    fn matrix(&self, n: usize, full: bool) -> LinOp {
        let (da, dd, dh) = self.dims();
        let dst = (da * dd).pow(n as u32 + 1) * dh;
        LinOp::from_fn(self.src.dim(n), dst, |idx| {
            let xs = decode(idx / dh, da * dd, n + 1);
            self.row(&xs, idx % dh, full)
        })
    }

    /// `Ψ^n`.
    pub fn op(&self, n: usize) -> LinOp {
        self.matrix(n, true)
    }

    /// `Ψ^n` in the form valid for the non-diagonal structure.
    pub fn simplified_op(&self, n: usize) -> LinOp {
        self.matrix(n, false)
    }

    /// `F ↦ F∘β^{⊗(n+1)}` from cochains on the diagonal structure to the non-diagonal one.
    pub fn beta_pullback(&self, n: usize) -> LinOp {
        let (da, dd, dh) = self.dims();
        let db = da * dd;
        LinOp::from_fn(self.diag.dim(n), self.bar.dim(n), |idx| {
            let xs = decode(idx / dh, db, n + 1);
            let parts: Vec<&Elem> = xs.iter().map(|&x| &self.beta[x]).collect();
            tensor2(&kron(&parts, db), &SVec::unit(idx % dh), dh)
        })
    }

    fn eval(&self, f: &Cochain, elems: &[Elem], full: bool) -> Result<SVec, Error> {
        let (da, dd, dh) = self.dims();
        let n = f.degree;
        if elems.len() != n + 1 {
            return Err(Error::Shape(format!("degree {n} needs {} arguments, got {}", n + 1, elems.len())));
        }
        if f.data.max_index().is_some_and(|i| i >= self.src.dim(n)) {
            return Err(Error::Shape(format!("cochain outside C^{n} of dimension {}", self.src.dim(n))));
        }
        if elems.iter().any(|x| x.max_index().is_some_and(|i| i >= da * dd)) {
            return Err(Error::Shape(format!("argument outside A ⊗ End(V) of dimension {}", da * dd)));
        }
        let supports: Vec<&[(usize, Rational)]> = elems.iter().map(|x| x.entries()).collect();
        let mut out = Accum::new();
        let count: usize = supports.iter().map(|s| s.len()).product();
        for g in 0..dh {
            let mut v = Rational::zero();
            for m in 0..count {
                let mut rest = m;
                let mut xs = vec![0; n + 1];
                let mut c = Rational::one();
                for k in (0..=n).rev() {
                    let (x, ck) = &supports[k][rest % supports[k].len()];
                    rest /= supports[k].len();
                    xs[k] = *x;
                    c *= ck;
                }
                v += &(&c * &self.row(&xs, g, full).dot(&f.data));
            }
            out.add(g, &v);
        }
        Ok(out.finish())
    }

    /// `Ψ^n f(x₀,…,x_n)` as a functional on `H`, for `x_i ∈ A ⊗ End V` (diagonal structure).
    pub fn psi_trace(&self, f: &Cochain, elems: &[Elem]) -> Result<SVec, Error> {
        self.eval(f, elems, true)
    }

    /// The simplified trace for `x_i` in the non-diagonal structure.
    pub fn psi_trace_simplified(&self, f: &Cochain, elems: &[Elem]) -> Result<SVec, Error> {
        self.eval(f, elems, false)
    }

    /// `Ψ` and its simplified form are equivariant cocyclic maps, `n ≤ n_max`.
    pub fn verify(&self, n_max: usize) -> Report {
        let mut rep = Report::new(format!("Ψ: {} → {}", self.src.name(), self.diag.name()));
        verify_cocyclic_map(&mut rep, "Ψ", &self.src, &self.diag, |n| self.op(n), n_max);
        verify_cocyclic_map(&mut rep, "Ψ̄", &self.src, &self.bar, |n| self.simplified_op(n), n_max);
        rep
    }

    /// `(Ψf)∘β = Ψ̄f` for every cochain `f`, `n ≤ n_max`.
    pub fn verify_beta(&self, n_max: usize) -> Report {
        let mut rep = Report::new(format!("Ψ∘β on {} ⊗ End({})", self.base.name, self.rep.name()));
        for n in 0..=n_max {
            let l = self.beta_pullback(n).compose(&self.op(n));
            let r = compare_on(&Subspace::full(self.src.dim(n)), &l, &self.simplified_op(n), |i| self.bar.module().coord(n, i));
            rep.record_at("Ψ(f)∘β = Ψ̄(f)", n, r);
        }
        rep
    }
}

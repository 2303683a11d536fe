use super::equivariant::{tensor2, EquivariantModule};
use super::{decode, kron, verify_cocyclic_map, Cochain, Cocyclic, Complex, LinOp};
use crate::actions::{lin, endo_algebra, ActionMap, FinAlgebra, HAlgebra};
use crate::hopf::Elem;
use crate::linalg::{Accum, Mat, SVec};
use crate::report::Report;
use crate::Error;

/// The operators `δ_i`, `t` of θ-twisted cyclic cohomology for an algebra
/// automorphism `θ` and an integer `m`, on θ-invariant cochains.
#[derive(Clone, Debug)]
pub struct ThetaTwisted {
    alg: FinAlgebra,
    theta: Vec<Elem>,
    theta_m: Vec<Elem>,
    m: i64,
}

fn images_to_mat(imgs: &[Elem]) -> Mat {
    let d = imgs.len();
    let mut m = Mat::zeros(d, d);
    for (j, x) in imgs.iter().enumerate() {
        for (i, c) in x.iter() {
            m[(i, j)] = c.clone();
        }
    }
    m
}

fn mat_to_images(m: &Mat) -> Vec<Elem> {
    (0..m.cols()).map(|j| SVec::from_unsorted((0..m.rows()).map(|i| (i, m[(i, j)].clone())).collect())).collect()
}

impl ThetaTwisted {
    /// `theta[i]` is the image of the `i`-th basis element.
    pub fn new(alg: &FinAlgebra, theta: Vec<Elem>, m: i64) -> Result<Self, Error> {
        let d = alg.dim();
        if theta.len() != d {
            return Err(Error::Shape(format!("θ needs {d} basis images, got {}", theta.len())));
        }
        let apply = |x: &Elem| lin(x, |i| theta[i].clone());
        if apply(alg.unit()) != *alg.unit() {
            return Err(Error::Domain("θ(1) ≠ 1: not an algebra automorphism".into()));
        }
        for i in 0..d {
            for j in 0..d {
                if apply(alg.mul_basis(i, j)) != alg.mul(&theta[i], &theta[j]) {
                    return Err(Error::Domain(format!(
                        "θ({}·{}) ≠ θ({})θ({}): not an algebra automorphism",
                        alg.labels()[i],
                        alg.labels()[j],
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        let mat = images_to_mat(&theta);
        let inv = mat.inverse().ok_or_else(|| Error::Domain("θ is not invertible".into()))?;
        let base = if m >= 0 { mat } else { inv };
        let mut pow = Mat::identity(d);
        for _ in 0..m.unsigned_abs() {
            pow = base.mul(&pow);
        }
        Ok(Self { alg: alg.clone(), theta, theta_m: mat_to_images(&pow), m })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    fn da(&self) -> usize {
        self.alg.dim()
    }

    fn theta_m(&self, x: &Elem) -> Elem {
        lin(x, |i| self.theta_m[i].clone())
    }
}

impl Cocyclic for ThetaTwisted {
    fn name(&self) -> String {
        format!("θ-twisted C({}), m = {}", self.alg.name(), self.m)
    }

    fn dim(&self, n: usize) -> usize {
        self.da().pow(n as u32 + 1)
    }

    /// `t f(a₀,…,a_n) = f(θ^m a_n, a₀,…,a_{n−1})`.
    fn tau(&self, n: usize) -> LinOp {
        let d = self.dim(n);
        LinOp::from_fn(d, d, |idx| {
            let a = decode(idx, self.da(), n + 1);
            let first = self.theta_m(&SVec::unit(a[n]));
            let units: Vec<SVec> = a[..n].iter().map(|&x| SVec::unit(x)).collect();
            let mut parts = vec![&first];
            parts.extend(units.iter());
            kron(&parts, self.da())
        })
    }

    fn face(&self, n: usize, i: usize) -> LinOp {
        assert!(n >= 1 && i <= n);
        LinOp::from_fn(self.dim(n - 1), self.dim(n), |idx| {
            let a = decode(idx, self.da(), n + 1);
            let mut parts: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            if i < n {
                parts[i] = self.alg.mul_basis(a[i], a[i + 1]).clone();
                parts.remove(i + 1);
            } else {
                parts[0] = self.alg.mul(&self.theta_m(&SVec::unit(a[n])), &parts[0]);
                parts.pop();
            }
            kron(&parts.iter().collect::<Vec<_>>(), self.da())
        })
    }

    fn degen(&self, n: usize, i: usize) -> LinOp {
        assert!(i <= n);
        LinOp::from_fn(self.dim(n + 1), self.dim(n), |idx| {
            let a = decode(idx, self.da(), n + 1);
            let mut parts: Vec<SVec> = a.iter().map(|&x| SVec::unit(x)).collect();
            parts.insert(i + 1, self.alg.unit().clone());
            kron(&parts.iter().collect::<Vec<_>>(), self.da())
        })
    }

    /// `f(θa₀,…,θa_n) = f(a₀,…,a_n)`.
    fn constraints(&self, n: usize) -> Vec<SVec> {
        (0..self.dim(n))
            .map(|idx| {
                let a = decode(idx, self.da(), n + 1);
                let parts: Vec<&Elem> = a.iter().map(|&x| &self.theta[x]).collect();
                kron(&parts, self.da()).sub(&SVec::unit(idx))
            })
            .filter(|r| !r.is_zero())
            .collect()
    }

    fn coord(&self, n: usize, idx: usize) -> String {
        let a = decode(idx, self.da(), n + 1);
        let l: Vec<&str> = a.iter().map(|&x| self.alg.labels()[x].as_str()).collect();
        format!("({})", l.join(", "))
    }
}

/// `θ`-twisted operators as a complex.
pub fn theta_twisted_ops(alg: &FinAlgebra, theta: Vec<Elem>, m: i64) -> Result<Complex<ThetaTwisted>, Error> {
    Ok(Complex::new(ThetaTwisted::new(alg, theta, m)?))
}

/// The trace map from equivariant cochains on `A` to those on `M_r(A) = A ⊗ M_r(k)`,
/// where `H` acts on the first factor.
pub struct MatrixTrace {
    r: usize,
    src: Complex<EquivariantModule>,
    dst: Complex<EquivariantModule>,
}

/// `M_r(A)` with `h·(a⊗m) = h·a ⊗ m`.
pub fn matrix_halgebra(a: &HAlgebra, r: usize) -> Result<HAlgebra, Error> {
    let rr = r * r;
    let alg = FinAlgebra::tensor(&a.algebra, &endo_algebra(r));
    let act = ActionMap::from_fn(a.hopf.dim(), a.dim() * rr, |h, idx| {
        tensor2(a.act_basis(h, idx / rr), &SVec::unit(idx % rr), rr)
    });
    HAlgebra::new(&format!("M_{r}({})", a.algebra.name()), alg, a.hopf.clone(), act, None)
}

impl MatrixTrace {
    pub fn new(a: &HAlgebra, r: usize) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::Domain("matrix size must be positive".into()));
        }
        let m = matrix_halgebra(a, r)?;
        Ok(Self {
            r,
            src: Complex::new(EquivariantModule::from_halgebra(a)),
            dst: Complex::new(EquivariantModule::from_halgebra(&m)),
        })
    }

    pub fn source(&self) -> &Complex<EquivariantModule> {
        &self.src
    }

    pub fn target(&self) -> &Complex<EquivariantModule> {
        &self.dst
    }

    /// `(tr f)(a₀⊗m₀,…,a_n⊗m_n)(g) = tr(m₀⋯m_n) f(a₀,…,a_n)(g)`.
    pub fn op(&self, n: usize) -> LinOp {
        let r = self.r;
        let rr = r * r;
        let dh = self.src.module().hopf().dim();
        let da = self.src.module().algebra().dim();
        LinOp::from_fn(self.src.dim(n), self.dst.dim(n), |idx| {
            let (t, g) = (idx / dh, idx % dh);
            let xs = decode(t, da * rr, n + 1);
            let chained = (0..=n).all(|k| {
                let (_, j) = ((xs[k] % rr) / r, (xs[k] % rr) % r);
                let next = (xs[(k + 1) % (n + 1)] % rr) / r;
                j == next
            });
            if !chained {
                return SVec::new();
            }
            let a: Vec<usize> = xs.iter().map(|x| x / rr).collect();
            let mut acc = Accum::new();
            acc.add(super::encode(&a, da) * dh + g, &num_traits::One::one());
            acc.finish()
        })
    }

    pub fn apply(&self, f: &Cochain) -> Cochain {
        Cochain::new(f.degree, self.op(f.degree).apply(&f.data))
    }

    /// Equivariance of the image and commutation with `T`, `∂^i`, `σ^i`, `n ≤ n_max`.
    pub fn verify(&self, n_max: usize) -> Report {
        let mut rep = Report::new(format!("trace {} → {}", self.src.name(), self.dst.name()));
        verify_cocyclic_map(&mut rep, "tr", &self.src, &self.dst, |n| self.op(n), n_max);
        rep
    }
}

/// `tr f` for an equivariant cochain `f` on `a`.
pub fn matrix_trace_cochain(a: &HAlgebra, f: &Cochain, r: usize) -> Result<Cochain, Error> {
    let t = MatrixTrace::new(a, r)?;
    if !t.src.module().is_equivariant(f).all_pass() {
        return Err(Error::Domain("matrix trace needs an equivariant cochain".into()));
    }
    Ok(t.apply(f))
}

use std::sync::Arc;

use super::{lin, tensor_elem, twisted_product, ActionMap, FinAlgebra, HAlgebra};
use crate::hopf::{Elem, FinHopf};
use crate::linalg::{Accum, Mat, SVec};
use crate::report::{Failure, Report};
use crate::Error;

/// A representation `r: H → End(V)` given on the basis of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    name: String,
    dim: usize,
    mats: Vec<Mat>,
}

impl Representation {
    /// Checks `r(1) = id` and `r(h_i h_j) = r(h_i) r(h_j)`.
    pub fn new(h: &FinHopf, name: &str, mats: Vec<Mat>) -> Result<Self, Error> {
        let dim = mats.first().map_or(0, Mat::rows);
        if mats.len() != h.dim() || mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape("one square matrix per basis element".into()));
        }
        let r = Self { name: name.into(), dim, mats };
        let rep = r.verify(h);
        if rep.all_pass() {
            Ok(r)
        } else {
            Err(Error::Axioms(Box::new(rep)))
        }
    }

    pub fn verify(&self, h: &FinHopf) -> Report {
        let mut rep = Report::new(format!("{} is a representation of {}", self.name, h.name()));
        let one = self.eval(h.unit());
        let unital = (one != Mat::identity(self.dim)).then(|| Failure::new("1", format!("{one:?}"), "id"));
        rep.record("r(1) = id", unital);
        let d = h.dim();
        let mult = (0..d * d).find_map(|k| {
            let (i, j) = (k / d, k % d);
            let l = self.eval(h.mul_basis(i, j));
            let r = self.mats[i].mul(&self.mats[j]);
            (l != r).then(|| Failure::new(format!("({}, {})", h.labels()[i], h.labels()[j]), format!("{l:?}"), format!("{r:?}")))
        });
        rep.record("r(gh) = r(g)r(h)", mult);
        rep
    }

    /// `r(h) = ε(h) id_d`.
    pub fn trivial(h: &FinHopf, d: usize) -> Self {
        let mats = (0..h.dim()).map(|i| Mat::identity(d).scale(h.counit_basis(i))).collect();
        Self { name: format!("trivial^{d}"), dim: d, mats }
    }

    /// Left multiplication on `H` in its own basis.
    pub fn regular(h: &FinHopf) -> Self {
        let d = h.dim();
        let mats = (0..d)
            .map(|i| {
                let mut m = Mat::zeros(d, d);
                for l in 0..d {
                    for (k, c) in h.mul_basis(i, l).iter() {
                        m[(k, l)] = c.clone();
                    }
                }
                m
            })
            .collect();
        Self { name: format!("regular {}", h.name()), dim: d, mats }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_mat(&self, i: usize) -> &Mat {
        &self.mats[i]
    }

    pub fn eval(&self, x: &Elem) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (i, c) in x.iter() {
            m = m.add(&self.mats[i].scale(c));
        }
        m
    }
}

/// Matrix units `E_ij` at index `i * d + j`.
pub fn mat_to_elem(m: &Mat) -> Elem {
    let d = m.cols();
    SVec::from_unsorted(m.entries().filter(|(_, c)| !num_traits::Zero::is_zero(*c)).map(|((i, j), c)| (i * d + j, c.clone())).collect())
}

pub fn elem_to_mat(x: &Elem, d: usize) -> Mat {
    let mut m = Mat::zeros(d, d);
    for (k, c) in x.iter() {
        m[(k / d, k % d)] = c.clone();
    }
    m
}

/// `M_d(k)` on matrix units.
pub fn endo_algebra(d: usize) -> FinAlgebra {
    let labels = (0..d * d).map(|k| format!("E{}{}", k / d + 1, k % d + 1)).collect();
    FinAlgebra::from_fn(&format!("M_{d}"), labels, mat_to_elem(&Mat::identity(d)), |x, y| {
        let (i, j) = (x / d, x % d);
        let (k, l) = (y / d, y % d);
        if j == k {
            Elem::unit(i * d + l)
        } else {
            Elem::new()
        }
    })
    .expect("matrix algebra")
}

fn conj(h: &FinHopf, v: &Representation, left: &Elem, right: usize, u: &Mat) -> Mat {
    v.eval(left).mul(u).mul(&v.eval(h.s_basis(right)))
}

/// `End(V)` with `h·u = r(h⁽⁰⁾) u r(S(h⁽¹⁾))`.
pub fn endo_conj_algebra(hopf: Arc<FinHopf>, v: &Representation) -> Result<HAlgebra, Error> {
    let d = v.dim();
    let h = &hopf;
    let act = ActionMap::from_fn(h.dim(), d * d, |g, k| {
        let u = elem_to_mat(&Elem::unit(k), d);
        let mut acc = Mat::zeros(d, d);
        for (p, q, c) in h.coprod_basis(g) {
            acc = acc.add(&conj(h, v, &Elem::unit(*p), *q, &u).scale(c));
        }
        mat_to_elem(&acc)
    });
    HAlgebra::new(&format!("End({})", v.name()), endo_algebra(d), hopf.clone(), act, None)
}

/// `A ⊗ End(V)` with the twisted product and diagonal action.
pub fn matrix_algebra_diagonal(a: &HAlgebra, v: &Representation) -> Result<HAlgebra, Error> {
    twisted_product(a, &endo_conj_algebra(a.hopf.clone(), v)?)
}

/// `A ⊗ End(V)` with componentwise product and `h·(a⊗u) = h⁽¹⁾·a ⊗ r(h⁽⁰⁾) u r(S(h⁽²⁾))`.
pub fn matrix_algebra_nondiagonal(a: &HAlgebra, v: &Representation) -> Result<HAlgebra, Error> {
    let h = &a.hopf;
    let d = v.dim();
    let dd = d * d;
    let alg = FinAlgebra::tensor(&a.algebra, &endo_algebra(d));
    let act = ActionMap::from_fn(h.dim(), a.dim() * dd, |g, idx| {
        let (x, k) = (idx / dd, idx % dd);
        let u = elem_to_mat(&Elem::unit(k), d);
        let mut acc = Accum::new();
        for (legs, c) in h.delta_basis(g, 2).iter() {
            let m = conj(h, v, &Elem::unit(legs[0]), legs[2], &u);
            acc.add_scaled(c, &tensor_elem(a.act_basis(legs[1], x), &mat_to_elem(&m), dd));
        }
        acc.finish()
    });
    HAlgebra::new(&format!("{}⊗̄End({})", a.algebra.name(), v.name()), alg, h.clone(), act, None)
}

/// Images of the basis under `β` (`direction = 1`) or `β′` (`direction = -1`).
pub fn beta_iso(a: &HAlgebra, v: &Representation, direction: i32) -> Result<Vec<Elem>, Error> {
    if !a.is_yd() {
        return Err(Error::Domain(format!("{} is not a Yetter-Drinfeld algebra", a.name)));
    }
    let co = a.coaction()?;
    let h = &a.hopf;
    let d = v.dim();
    let dd = d * d;
    Ok((0..a.dim() * dd)
        .map(|idx| {
            let (x, k) = (idx / dd, idx % dd);
            let u = elem_to_mat(&Elem::unit(k), d);
            let mut acc = Accum::new();
            for (x0, x1, c) in co.legs(x) {
                let left = if direction >= 0 { Elem::unit(x1) } else { h.s_basis(x1).clone() };
                let m = v.eval(&left).mul(&u);
                acc.add_scaled(c, &tensor_elem(&Elem::unit(x0), &mat_to_elem(&m), dd));
            }
            acc.finish()
        })
        .collect())
}

/// Checks that `f` and `g` are mutually inverse, that `f` is unital and
/// multiplicative from `src` to `dst`, and that `f` intertwines the actions.
pub fn verify_iso(title: &str, src: &HAlgebra, dst: &HAlgebra, f: &[Elem], g: &[Elem]) -> Report {
    let mut rep = Report::new(title);
    let n = src.dim();
    let labels = src.algebra.labels();
    let apply = |m: &[Elem], x: &Elem| lin(x, |i| m[i].clone());
    let e = Elem::unit;
    let fg = (0..n).find_map(|i| {
        let y = apply(f, &apply(g, &e(i)));
        (y != e(i)).then(|| Failure::new(labels[i].clone(), dst.algebra.fmt(&y), &labels[i]))
    });
    rep.record("f∘g = id", fg);
    let gf = (0..n).find_map(|i| {
        let y = apply(g, &apply(f, &e(i)));
        (y != e(i)).then(|| Failure::new(labels[i].clone(), src.algebra.fmt(&y), &labels[i]))
    });
    rep.record("g∘f = id", gf);
    let unit = {
        let y = apply(f, src.algebra.unit());
        (y != *dst.algebra.unit()).then(|| Failure::new("1", dst.algebra.fmt(&y), dst.algebra.fmt(dst.algebra.unit())))
    };
    rep.record("f(1) = 1", unit);
    let mult = (0..n * n).find_map(|k| {
        let (i, j) = (k / n, k % n);
        let l = apply(f, src.algebra.mul_basis(i, j));
        let r = dst.algebra.mul(&f[i], &f[j]);
        (l != r).then(|| Failure::new(format!("({}, {})", labels[i], labels[j]), dst.algebra.fmt(&l), dst.algebra.fmt(&r)))
    });
    rep.record("f(xy) = f(x)f(y)", mult);
    let h = &src.hopf;
    let equi = (0..h.dim() * n).find_map(|k| {
        let (g_, i) = (k / n, k % n);
        let l = apply(f, src.act_basis(g_, i));
        let r = dst.action.act_on(g_, &f[i]);
        (l != r).then(|| Failure::new(format!("({}, {})", h.labels()[g_], labels[i]), dst.algebra.fmt(&l), dst.algebra.fmt(&r)))
    });
    rep.record("f(h·x) = h·f(x)", equi);
    rep
}

/// `β` and `β′` between the non-diagonal and the diagonal structure.
pub fn verify_beta(a: &HAlgebra, v: &Representation) -> Result<Report, Error> {
    let b = beta_iso(a, v, 1)?;
    let b2 = beta_iso(a, v, -1)?;
    let src = matrix_algebra_nondiagonal(a, v)?;
    let dst = matrix_algebra_diagonal(a, v)?;
    Ok(verify_iso(&format!("β: {} → {}", src.name, dst.name), &src, &dst, &b, &b2))
}

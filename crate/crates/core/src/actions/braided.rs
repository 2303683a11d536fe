use super::matrix::{elem_to_mat, mat_to_elem, matrix_algebra_diagonal, matrix_algebra_nondiagonal, verify_iso};
use super::{tensor_elem, tensor_labels, ActionMap, CoactionMap, FinAlgebra, HAlgebra, Representation};
use crate::hopf::{fmt_elem, Elem, FinHopf};
use crate::linalg::{Accum, Mat};
use crate::report::{Failure, Report};
use crate::scalar::Rational;
use crate::Error;

/// An invertible element of `H ⊗ H`, basis index `i * dim H + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    r: Elem,
    r_inv: Elem,
}

impl RMatrix {
    pub fn new(h: &FinHopf, r: Elem) -> Result<Self, Error> {
        let hh = FinAlgebra::tensor(&FinAlgebra::from_hopf(h), &FinAlgebra::from_hopf(h));
        let r_inv = hh.inverse(&r).ok_or_else(|| Error::Domain("R is not invertible".into()))?;
        Ok(Self { r, r_inv })
    }

    /// `Σ c h_i ⊗ h_j` from triples.
    pub fn from_terms(h: &FinHopf, terms: &[(usize, usize, Rational)]) -> Result<Self, Error> {
        let d = h.dim();
        let mut acc = Accum::new();
        for (i, j, c) in terms {
            acc.add(i * d + j, c);
        }
        Self::new(h, acc.finish())
    }

    pub fn r(&self) -> &Elem {
        &self.r
    }

    pub fn r_inv(&self) -> &Elem {
        &self.r_inv
    }
}

fn legs(x: &Elem, d: usize) -> impl Iterator<Item = (usize, usize, &Rational)> {
    x.iter().map(move |(k, c)| (k / d, k % d, c))
}

/// Applies `f ⊗ g` to an element of `H ⊗ H`.
fn map2(x: &Elem, d: usize, f: impl Fn(usize) -> Elem, g: impl Fn(usize) -> Elem) -> Elem {
    let mut acc = Accum::new();
    for (i, j, c) in legs(x, d) {
        acc.add_scaled(c, &tensor_elem(&f(i), &g(j), d));
    }
    acc.finish()
}

/// The identities of a quasitriangular structure.
pub fn verify_quasitriangular(h: &FinHopf, rm: &RMatrix) -> Report {
    let mut rep = Report::new(format!("R-matrix axioms on {}", h.name()));
    let d = h.dim();
    let l2 = tensor_labels(h.labels(), h.labels());
    let l3 = tensor_labels(&l2, h.labels());
    let f2 = |x: &Elem| fmt_elem(&l2, x);
    let f3 = |x: &Elem| fmt_elem(&l3, x);
    let hh = FinAlgebra::tensor(&FinAlgebra::from_hopf(h), &FinAlgebra::from_hopf(h));
    let (r, ri) = (&rm.r, &rm.r_inv);
    let cmp = |l: Elem, r: Elem, f: &dyn Fn(&Elem) -> String| (l != r).then(|| Failure::new("R", f(&l), f(&r)));

    let inv = {
        let a = hh.mul(r, ri);
        let b = hh.mul(ri, r);
        if a != *hh.unit() {
            Some(Failure::new("RR⁻¹", f2(&a), "1⊗1"))
        } else if b != *hh.unit() {
            Some(Failure::new("R⁻¹R", f2(&b), "1⊗1"))
        } else {
            None
        }
    };
    rep.record("RR⁻¹ = R⁻¹R = 1⊗1", inv);

    let (mut l, mut rr) = (Accum::new(), Accum::new());
    for (i, j, c) in legs(r, d) {
        for (p, q, e) in h.coprod_basis(i) {
            l.add((p * d + q) * d + j, &(c * e));
        }
        for (k, m, e) in legs(r, d) {
            for (z, w) in h.mul_basis(j, m).iter() {
                rr.add((i * d + k) * d + z, &(&(c * e) * w));
            }
        }
    }
    rep.record("Δ(R⁽¹⁾)⊗R⁽²⁾ = R⁽¹⁾⊗r⁽¹⁾⊗R⁽²⁾r⁽²⁾", cmp(l.finish(), rr.finish(), &f3));

    let (mut l, mut rr) = (Accum::new(), Accum::new());
    for (i, j, c) in legs(r, d) {
        for (p, q, e) in h.coprod_basis(j) {
            l.add((i * d + p) * d + q, &(c * e));
        }
        for (k, m, e) in legs(r, d) {
            for (z, w) in h.mul_basis(i, k).iter() {
                rr.add((z * d + j) * d + m, &(&(c * e) * w));
            }
        }
    }
    rep.record("R⁽¹⁾⊗Δ(R⁽²⁾) = R⁽¹⁾r⁽¹⁾⊗R⁽²⁾⊗r⁽²⁾", cmp(l.finish(), rr.finish(), &f3));

    let braid = (0..d).find_map(|g| {
        let mut cop = Accum::new();
        let mut co = Accum::new();
        for (p, q, c) in h.coprod_basis(g) {
            cop.add(q * d + p, c);
            co.add(p * d + q, c);
        }
        let l = hh.mul(&cop.finish(), r);
        let rr = hh.mul(r, &co.finish());
        (l != rr).then(|| Failure::new(h.labels()[g].clone(), f2(&l), f2(&rr)))
    });
    rep.record("Δ^cop(h)R = RΔ(h)", braid);

    let (mut l, mut rr) = (Accum::new(), Accum::new());
    for (i, j, c) in legs(r, d) {
        l.add(j, &(c * h.counit_basis(i)));
        rr.add(i, &(c * h.counit_basis(j)));
    }
    let f1 = |x: &Elem| h.fmt(x);
    rep.record("ε(R⁽¹⁾)R⁽²⁾ = 1", cmp(l.finish(), h.unit().clone(), &f1));
    rep.record("R⁽¹⁾ε(R⁽²⁾) = 1", cmp(rr.finish(), h.unit().clone(), &f1));

    let e = Elem::unit;
    let s = |i: usize| h.s_basis(i).clone();
    rep.record("(S⊗id)R = R⁻¹", cmp(map2(r, d, s, e), ri.clone(), &f2));
    rep.record("(id⊗S)R⁻¹ = R", cmp(map2(ri, d, e, s), r.clone(), &f2));
    rep.record("(S⊗S)R = R", cmp(map2(r, d, s, s), r.clone(), &f2));
    rep
}

/// `ρ(a) = R⁽²⁾·a ⊗ R⁽¹⁾`.
pub fn coaction_from_r(h: &FinHopf, adim: usize, act: &ActionMap, rm: &RMatrix) -> CoactionMap {
    let d = h.dim();
    CoactionMap::from_fn(adim, d, |x| {
        let mut acc = Accum::new();
        for (i, j, c) in legs(&rm.r, d) {
            acc.add_scaled(c, &tensor_elem(act.act_basis(j, x), &Elem::unit(i), d));
        }
        acc.finish()
    })
}

/// Images of the basis of `A ⊗ End(V)` under `t` (`direction = 1`) or `t′` (`direction = -1`).
pub fn t_iso(a: &HAlgebra, v: &Representation, rm: &RMatrix, direction: i32) -> Result<Vec<Elem>, Error> {
    let h = &a.hopf;
    let rep = verify_quasitriangular(h, rm);
    if !rep.all_pass() {
        return Err(Error::Axioms(Box::new(rep)));
    }
    let d = h.dim();
    let n = v.dim();
    let nn = n * n;
    Ok((0..a.dim() * nn)
        .map(|idx| {
            let (x, k) = (idx / nn, idx % nn);
            let u = elem_to_mat(&Elem::unit(k), n);
            let mut acc = Accum::new();
            for (i, j, c) in legs(&rm.r, d) {
                let left = if direction >= 0 { Elem::unit(i) } else { h.s_basis(i).clone() };
                let m = v.eval(&left).mul(&u);
                acc.add_scaled(c, &tensor_elem(a.act_basis(j, x), &mat_to_elem(&m), nn));
            }
            acc.finish()
        })
        .collect())
}

/// `t` and `t′` between the non-diagonal structure and the diagonal one built
/// from the coaction induced by `R`.
pub fn verify_t(a: &HAlgebra, v: &Representation, rm: &RMatrix) -> Result<Report, Error> {
    let t = t_iso(a, v, rm, 1)?;
    let t2 = t_iso(a, v, rm, -1)?;
    let co = coaction_from_r(&a.hopf, a.dim(), &a.action, rm);
    let yd = a.with_coaction(&format!("{} (R-coaction)", a.algebra.name()), co)?;
    let src = matrix_algebra_nondiagonal(&yd, v)?;
    let dst = matrix_algebra_diagonal(&yd, v)?;
    Ok(verify_iso(&format!("t: {} → {}", src.name, dst.name), &src, &dst, &t, &t2))
}

/// A bilinear form on `H ⊗ H` with a convolution inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalRForm {
    form: Mat,
    inv: Mat,
}

impl UniversalRForm {
    /// Takes the claimed inverse as given; [`verify_coquasitriangular`] checks it.
    pub fn new(form: Mat, inv: Mat) -> Result<Self, Error> {
        if form.rows() != form.cols() || inv.rows() != form.rows() || inv.cols() != form.cols() {
            return Err(Error::Shape("forms must be square and of equal size".into()));
        }
        Ok(Self { form, inv })
    }

    /// Solves `ℛ⁻¹ * ℛ = ε⊗ε` for the convolution inverse.
    pub fn with_inverse(h: &FinHopf, form: Mat) -> Result<Self, Error> {
        let d = h.dim();
        if form.rows() != d || form.cols() != d {
            return Err(Error::Shape("form must be dim H × dim H".into()));
        }
        // Row (x, y) of the system: Σ_{p,r} f(p, r) Σ c e ℛ(q, s) over Δx = c p⊗q, Δy = e r⊗s.
        let dd = d * d;
        let mut sys: Mat = Mat::zeros(dd, dd);
        for x in 0..d {
            for y in 0..d {
                for (p, q, c) in h.coprod_basis(x) {
                    for (r, s, e) in h.coprod_basis(y) {
                        let v = &(c * e) * &form[(*q, *s)];
                        let cur = sys[(x * d + y, p * d + r)].clone();
                        sys[(x * d + y, p * d + r)] = &cur + &v;
                    }
                }
            }
        }
        let rhs: Vec<Rational> =
            (0..dd).map(|k| h.counit_basis(k / d) * h.counit_basis(k % d)).collect();
        let sol = sys.inverse().ok_or_else(|| Error::Domain("form is not convolution invertible".into()))?.apply(&rhs);
        let mut inv = Mat::zeros(d, d);
        for (k, v) in sol.into_iter().enumerate() {
            inv[(k / d, k % d)] = v;
        }
        Ok(Self { form, inv })
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    pub fn inv(&self) -> &Mat {
        &self.inv
    }

    pub fn eval(&self, x: &Elem, y: &Elem) -> Rational {
        pair(&self.form, x, y)
    }
}

fn pair(m: &Mat, x: &Elem, y: &Elem) -> Rational {
    let mut s = Rational::from(0);
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            s = &s + &(&(a * b) * &m[(i, j)]);
        }
    }
    s
}

/// The identities of a coquasitriangular structure.
pub fn verify_coquasitriangular(h: &FinHopf, f: &UniversalRForm) -> Report {
    let mut rep = Report::new(format!("coquasitriangular axioms on {}", h.name()));
    let d = h.dim();
    let lab = h.labels();
    let (rf, ri) = (&f.form, &f.inv);
    let e = Elem::unit;
    let pairs = || (0..d).flat_map(move |x| (0..d).map(move |y| (x, y)));
    let triples = || pairs().flat_map(move |(x, y)| (0..d).map(move |z| (x, y, z)));

    let conv = |a: &Mat, b: &Mat, x: usize, y: usize| {
        let mut s = Rational::from(0);
        for (p, q, c) in h.coprod_basis(x) {
            for (r, t, g) in h.coprod_basis(y) {
                s = &s + &(&(&(c * g) * &a[(*p, *r)]) * &b[(*q, *t)]);
            }
        }
        s
    };
    let eps2 = |x: usize, y: usize| h.counit_basis(x) * h.counit_basis(y);
    let w2 = |x: usize, y: usize| format!("({}, {})", lab[x], lab[y]);
    let w3 = |x: usize, y: usize, z: usize| format!("({}, {}, {})", lab[x], lab[y], lab[z]);

    let c1 = pairs().find_map(|(x, y)| {
        let (l, r) = (conv(ri, rf, x, y), eps2(x, y));
        (l != r).then(|| Failure::new(w2(x, y), l, r))
    });
    rep.record("ℛ⁻¹(h⁽⁰⁾⊗g⁽⁰⁾)ℛ(h⁽¹⁾⊗g⁽¹⁾) = ε(h)ε(g)", c1);
    let c2 = pairs().find_map(|(x, y)| {
        let (l, r) = (conv(rf, ri, x, y), eps2(x, y));
        (l != r).then(|| Failure::new(w2(x, y), l, r))
    });
    rep.record("ℛ(h⁽⁰⁾⊗g⁽⁰⁾)ℛ⁻¹(h⁽¹⁾⊗g⁽¹⁾) = ε(h)ε(g)", c2);

    let m1 = triples().find_map(|(x, y, z)| {
        let l = pair(rf, h.mul_basis(x, y), &e(z));
        let mut r = Rational::from(0);
        for (p, q, c) in h.coprod_basis(z) {
            r = &r + &(&(c * &rf[(x, *p)]) * &rf[(y, *q)]);
        }
        (l != r).then(|| Failure::new(w3(x, y, z), l, r))
    });
    rep.record("ℛ(hg, r) = ℛ(h, r⁽⁰⁾)ℛ(g, r⁽¹⁾)", m1);

    let m2 = triples().find_map(|(x, y, z)| {
        let l = pair(rf, &e(x), h.mul_basis(y, z));
        let mut r = Rational::from(0);
        for (p, q, c) in h.coprod_basis(x) {
            r = &r + &(&(c * &rf[(*p, y)]) * &rf[(*q, z)]);
        }
        (l != r).then(|| Failure::new(w3(x, y, z), l, r))
    });
    rep.record("ℛ(h, gr) = ℛ(h⁽⁰⁾, g)ℛ(h⁽¹⁾, r)", m2);

    let comm = pairs().find_map(|(g, x)| {
        let (mut l, mut r) = (Accum::new(), Accum::new());
        for (g0, g1, c) in h.coprod_basis(g) {
            for (x0, x1, k) in h.coprod_basis(x) {
                let ck = c * k;
                l.add_scaled(&(&ck * &rf[(*g1, *x1)]), h.mul_basis(*g0, *x0));
                r.add_scaled(&(&ck * &rf[(*g0, *x0)]), h.mul_basis(*g1, *x1));
            }
        }
        let (l, r) = (l.finish(), r.finish());
        (l != r).then(|| Failure::new(w2(g, x), h.fmt(&l), h.fmt(&r)))
    });
    rep.record("g⁽⁰⁾h⁽⁰⁾ℛ(g⁽¹⁾⊗h⁽¹⁾) = ℛ(g⁽⁰⁾⊗h⁽⁰⁾)g⁽¹⁾h⁽¹⁾", comm);

    let norm = (0..d).find_map(|x| {
        let a = pair(rf, &e(x), h.unit());
        let b = pair(rf, h.unit(), &e(x));
        let eps = h.counit_basis(x).clone();
        if a != eps {
            Some(Failure::new(format!("ℛ({}, 1)", lab[x]), a, eps))
        } else if b != eps {
            Some(Failure::new(format!("ℛ(1, {})", lab[x]), b, eps))
        } else {
            None
        }
    });
    rep.record("ℛ(h⊗1) = ℛ(1⊗h) = ε(h)", norm);

    let s1 = pairs().find_map(|(x, y)| {
        let (l, r) = (pair(rf, h.s_basis(x), &e(y)), ri[(x, y)].clone());
        (l != r).then(|| Failure::new(w2(x, y), l, r))
    });
    rep.record("ℛ(S(h)⊗g) = ℛ⁻¹(h⊗g)", s1);
    let s2 = pairs().find_map(|(x, y)| {
        let (l, r) = (pair(ri, &e(x), h.s_basis(y)), rf[(x, y)].clone());
        (l != r).then(|| Failure::new(w2(x, y), l, r))
    });
    rep.record("ℛ⁻¹(h⊗S(g)) = ℛ(h⊗g)", s2);
    let s3 = pairs().find_map(|(x, y)| {
        let (l, r) = (pair(rf, h.s_basis(x), h.s_basis(y)), rf[(x, y)].clone());
        (l != r).then(|| Failure::new(w2(x, y), l, r))
    });
    rep.record("ℛ(S(h)⊗S(g)) = ℛ(h⊗g)", s3);
    rep
}

/// `h·a = a₍₀₎ ℛ(h⊗a₍₁₎)`.
pub fn action_from_form(h: &FinHopf, co: &CoactionMap, f: &UniversalRForm) -> ActionMap {
    ActionMap::from_fn(h.dim(), co.adim(), |g, x| {
        let mut acc = Accum::new();
        for (x0, x1, c) in co.legs(x) {
            acc.add(x0, &(c * &f.form[(g, x1)]));
        }
        acc.finish()
    })
}

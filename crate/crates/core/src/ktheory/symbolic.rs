use serde::Serialize;

use crate::linalg::Mat;
use crate::report::{Check, Failure, Report};
use crate::rewrite::{fmt_word, GeneratorAction, NCPoly, Presentation, PresentedRep, SymbolicHopf};
use crate::scalar::LaurentFrac;
use crate::Error;

type L = LaurentFrac;

/// A `d × d` matrix over a presented algebra, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    d: usize,
    entries: Vec<NCPoly>,
}

/// `coef · a ⊗ u` with `u ∈ End(V)`; `label` names `u` for audit output.
#[derive(Clone, Debug)]
pub struct TensorSummand {
    pub coef: L,
    pub a: NCPoly,
    pub u: Mat<L>,
    pub label: String,
}

impl SymbolicMatrix {
    pub fn new(d: usize, entries: Vec<NCPoly>) -> Result<Self, Error> {
        if entries.len() != d * d {
            return Err(Error::Shape(format!("{} entries for a {d}×{d} matrix", entries.len())));
        }
        Ok(Self { d, entries })
    }

    pub fn zero(d: usize) -> Self {
        Self { d, entries: vec![NCPoly::zero(); d * d] }
    }

    pub fn size(&self) -> usize {
        self.d
    }

    pub fn entry(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.d + j]
    }

    /// `Σ coef · a ⊗ u` read as a matrix.
    pub fn from_tensor_form(d: usize, summands: &[TensorSummand], alg: &Presentation) -> Self {
        let mut m = Self::zero(d);
        for s in summands {
            m.add_tensor(&s.a, &s.u, &s.coef);
        }
        m.normalize(alg)
    }

    fn add_tensor(&mut self, a: &NCPoly, u: &Mat<L>, c: &L) {
        for ((i, j), x) in u.entries() {
            if !x.is_zero() {
                let k = i * self.d + j;
                self.entries[k] = self.entries[k].add(&a.scale(&c.mul(x)));
            }
        }
    }

    pub fn normalize(&self, alg: &Presentation) -> Self {
        Self { d: self.d, entries: self.entries.iter().map(|x| alg.nf(x)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    pub fn mul(&self, o: &Self, alg: &Presentation) -> Result<Self, Error> {
        if self.d != o.d {
            return Err(Error::Shape(format!("{}×{} times {}×{}", self.d, self.d, o.d, o.d)));
        }
        let d = self.d;
        let mut out = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = NCPoly::zero();
                for k in 0..d {
                    acc = acc.add(&self.entry(i, k).concat(o.entry(k, j)));
                }
                out.entries[i * d + j] = alg.nf(&acc);
            }
        }
        Ok(out)
    }

    /// The summands `a_ij ⊗ E_ij`.
    pub fn summands(&self) -> Vec<TensorSummand> {
        let d = self.d;
        (0..d * d)
            .filter(|&k| !self.entries[k].is_zero())
            .map(|k| TensorSummand {
                coef: L::one(),
                a: self.entries[k].clone(),
                u: Mat::unit(d, k / d, k % d),
                label: format!("E{}{}", k / d + 1, k % d + 1),
            })
            .collect()
    }

    pub fn fmt(&self, alg: &Presentation) -> String {
        let rows: Vec<String> = (0..self.d)
            .map(|i| (0..self.d).map(|j| alg.fmt(self.entry(i, j))).collect::<Vec<_>>().join(", "))
            .collect();
        format!("[{}]", rows.join("; "))
    }

    /// `x² = x`.
    pub fn is_idempotent(&self, alg: &Presentation) -> Report {
        let mut rep = Report::new("idempotent");
        match self.mul(self, alg) {
            Ok(sq) => {
                let r = (sq != self.normalize(alg)).then(|| Failure::new("x·x", sq.fmt(alg), self.fmt(alg)));
                rep.record("x² = x", r);
            }
            Err(e) => rep.push(Check::error("x² = x", e.to_string())),
        }
        rep
    }
}

/// One summand of `h·(a⊗u) = Σ h⁽¹⁾·a ⊗ h⁽⁰⁾uS(h⁽²⁾)`.
#[derive(Clone, Debug, Serialize)]
pub struct ExpansionTerm {
    pub generator: String,
    pub legs: [String; 3],
    pub summand: String,
    pub acted: String,
    pub matrix: String,
    pub vanishes: bool,
}

/// The non-diagonal action on `A ⊗ End(V)` for a presented `H`-algebra `A`.
pub struct NonDiagonalAction<'a> {
    pub hopf: &'a SymbolicHopf,
    pub alg: &'a Presentation,
    pub action: &'a GeneratorAction,
    pub rep: &'a PresentedRep,
}

impl NonDiagonalAction<'_> {
    /// `h·x` expanded over `Δ²h`, with each leg-summand pair recorded.
    pub fn act(&self, h: &NCPoly, summands: &[TensorSummand]) -> Result<(SymbolicMatrix, Vec<ExpansionTerm>), Error> {
        let hg = self.hopf.presentation().generators();
        let d = self.rep.dim();
        let mut out = SymbolicMatrix::zero(d);
        let mut audit = Vec::new();
        let name = self.hopf.fmt(h);
        for (legs, c) in self.hopf.coproduct(h, 2).terms() {
            let left = self.rep.eval_word(&legs[0]);
            let s2 = self.hopf.s(&NCPoly::monomial(legs[2].clone(), L::one()));
            let right = self.rep.eval(&s2);
            let h1 = NCPoly::monomial(legs[1].clone(), L::one());
            for s in summands {
                let acted = self.action.apply(self.hopf, self.alg, &h1, &s.a)?;
                let m = left.mul(&s.u).mul(&right);
                let coef = c.mul(&s.coef);
                audit.push(ExpansionTerm {
                    generator: name.clone(),
                    legs: [fmt_word(hg, &legs[0]), fmt_word(hg, &legs[1]), fmt_word(hg, &legs[2])],
                    summand: format!("({coef})*{} ⊗ {}", self.alg.fmt(&s.a), s.label),
                    acted: self.alg.fmt(&acted),
                    matrix: format!("{m:?}"),
                    vanishes: acted.is_zero() || m.is_zero(),
                });
                out.add_tensor(&acted, &m, &coef);
            }
        }
        Ok((out.normalize(self.alg), audit))
    }

    /// `h·x = ε(h)x` for each generator `h`.
    pub fn is_invariant(&self, x: &SymbolicMatrix) -> Result<Report, Error> {
        let mut rep = Report::new("invariance under the non-diagonal action");
        let summands = x.summands();
        for (g, name) in self.hopf.presentation().generators().iter().enumerate() {
            let h = NCPoly::gen(g as u8);
            let (hx, _) = self.act(&h, &summands)?;
            let eps = self.hopf.counit(&h);
            let want = SymbolicMatrix { d: x.d, entries: x.entries.iter().map(|e| e.scale(&eps)).collect() }.normalize(self.alg);
            rep.record(
                format!("{name}·x = ε({name})x"),
                (hx != want).then(|| Failure::new(name.clone(), hx.fmt(self.alg), want.fmt(self.alg))),
            );
        }
        Ok(rep)
    }
}

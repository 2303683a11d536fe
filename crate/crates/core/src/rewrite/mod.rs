//! Presented noncommutative algebras with rewriting to normal form.

mod quantum;
mod symbolic;

pub use quantum::{podles_action, podles_sphere, rep2_uq, uq_su2, podles, uq};
pub use symbolic::PresentedRep;
pub use symbolic::{GeneratorAction, SymbolicHopf, TensorPoly};

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::report::{Check, Failure, Report};
use crate::scalar::{Field, LaurentFrac, Scalar};
use crate::Error;

/// A monomial: generator indices read left to right.
pub type Word = Vec<u8>;

pub const STEP_BUDGET: usize = 1_000_000;

/// Degree-lexicographic order on words.
pub fn deglex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct DegLex(Word);

/// A finite linear combination of words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly<F: Field = LaurentFrac> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> NCPoly<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(w: Word, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn gen(g: u8) -> Self {
        Self::monomial(vec![g], F::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: &F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c);
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().negate()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, x)| (w.clone(), x.times(c))).collect() }
    }

    /// Free (unreduced) product: words concatenate.
    pub fn concat(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                p.add_term(w, &x.times(y));
            }
        }
        p
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn fmt_with(&self, gens: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut items: Vec<(&Word, &F)> = self.terms.iter().collect();
        items.sort_by(|a, b| deglex(a.0, b.0));
        items
            .into_iter()
            .map(|(w, c)| {
                let m = fmt_word(gens, w);
                if c.is_one() {
                    m
                } else if w.is_empty() {
                    format!("{c}")
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<F: Field> fmt::Debug for NCPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..=255u8).map(|g| format!("x{g}")).collect();
        write!(f, "{}", self.fmt_with(&gens))
    }
}

pub fn fmt_word(gens: &[String], w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = gens.get(w[i] as usize).cloned().unwrap_or_else(|| format!("x{}", w[i]));
        out.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name });
        i = j;
    }
    out.join("·")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule<F: Field = LaurentFrac> {
    pub lhs: Word,
    pub rhs: NCPoly<F>,
}

/// Generators, deg-lex order by generator index, and rewrite rules.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field = LaurentFrac> {
    name: String,
    generators: Vec<String>,
    rules: Vec<Rule<F>>,
    by_first: HashMap<u8, Vec<usize>>,
}

impl<F: Field> Presentation<F> {
    /// Rejects rules whose right-hand side is not strictly smaller than the left.
    pub fn new(name: &str, generators: Vec<String>, rules: Vec<Rule<F>>) -> Result<Self, Error> {
        if generators.len() > 255 {
            return Err(Error::Shape("at most 255 generators".into()));
        }
        for r in &rules {
            if r.lhs.is_empty() {
                return Err(Error::Domain("empty left-hand side".into()));
            }
            for (w, _) in r.rhs.terms() {
                if w.iter().chain(&r.lhs).any(|&g| g as usize >= generators.len()) {
                    return Err(Error::Index("generator index in rule".into()));
                }
                if deglex(w, &r.lhs) != Ordering::Less {
                    return Err(Error::Domain(format!(
                        "rule {} -> {} is not decreasing",
                        fmt_word(&generators, &r.lhs),
                        fmt_word(&generators, w)
                    )));
                }
            }
        }
        let mut by_first: HashMap<u8, Vec<usize>> = HashMap::new();
        for (k, r) in rules.iter().enumerate() {
            by_first.entry(r.lhs[0]).or_default().push(k);
        }
        Ok(Self { name: name.into(), generators, rules, by_first })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    pub fn gen_index(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g == name).map(|i| i as u8)
    }

    pub fn gen(&self, name: &str) -> NCPoly<F> {
        NCPoly::gen(self.gen_index(name).unwrap_or_else(|| panic!("no generator {name}")))
    }

    /// Parses a word written as space separated generator names.
    pub fn word(&self, text: &str) -> Result<Word, Error> {
        text.split_whitespace()
            .map(|t| self.gen_index(t).ok_or_else(|| Error::Parse(format!("unknown generator {t}"))))
            .collect()
    }

    pub fn fmt(&self, p: &NCPoly<F>) -> String {
        p.fmt_with(&self.generators)
    }

    /// First rule occurrence in `w` as `(position, rule index)`.
    fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            if let Some(cands) = self.by_first.get(&w[pos]) {
                for &k in cands {
                    let l = &self.rules[k].lhs;
                    if w.len() - pos >= l.len() && &w[pos..pos + l.len()] == l.as_slice() {
                        return Some((pos, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Rewrites to the unique normal form (given confluence). Largest
    /// monomials are reduced first so equal terms merge before expanding.
    pub fn normal_form(&self, x: &NCPoly<F>) -> Result<NCPoly<F>, Error> {
        self.normal_form_with_budget(x, STEP_BUDGET)
    }

    pub fn normal_form_with_budget(&self, x: &NCPoly<F>, budget: usize) -> Result<NCPoly<F>, Error> {
        let mut pending: BTreeMap<DegLex, F> = BTreeMap::new();
        for (w, c) in x.terms() {
            pending.insert(DegLex(w.clone()), c.clone());
        }
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        let mut trace: Vec<Word> = Vec::new();
        while let Some((DegLex(w), c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w) {
                None => out.add_term(w, &c),
                Some((pos, k)) => {
                    steps += 1;
                    if trace.len() == 8 {
                        trace.remove(0);
                    }
                    trace.push(w.clone());
                    if steps > budget {
                        let t: Vec<String> = trace.iter().map(|w| fmt_word(&self.generators, w)).collect();
                        return Err(Error::StepBudget { budget, trace: t.join(" -> ") });
                    }
                    let rule = &self.rules[k];
                    for (m, d) in rule.rhs.terms() {
                        let mut nw = Vec::with_capacity(w.len() - rule.lhs.len() + m.len());
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend_from_slice(m);
                        nw.extend_from_slice(&w[pos + rule.lhs.len()..]);
                        let v = c.times(d);
                        let e = pending.entry(DegLex(nw)).or_insert_with(F::zero);
                        e.add_assign_ref(&v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn nf(&self, x: &NCPoly<F>) -> NCPoly<F> {
        self.normal_form(x).expect("rewriting terminates for validated presentations")
    }

    /// Product followed by normal form.
    pub fn mul(&self, x: &NCPoly<F>, y: &NCPoly<F>) -> NCPoly<F> {
        self.nf(&x.concat(y))
    }

    /// Overlap and inclusion ambiguities of the rule left-hand sides, each
    /// reduced both ways; one check per ambiguity with length at most `degree_bound`.
    pub fn check_confluence(&self, degree_bound: usize) -> Report {
        let mut rep = Report::new(format!("confluence of {} up to degree {degree_bound}", self.name));
        let g = &self.generators;
        let max_rule = self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        if degree_bound < max_rule {
            rep.push(Check::error("degree bound", format!("bound {degree_bound} below rule degree {max_rule}")));
            return rep;
        }
        let word_poly = |w: &[u8]| NCPoly::monomial(w.to_vec(), F::one());
        let mut any = false;
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // proper overlaps: suffix of l1 equals prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let mut w = l1.clone();
                    w.extend_from_slice(&l2[k..]);
                    if w.len() > degree_bound {
                        continue;
                    }
                    any = true;
                    let left = r1.rhs.concat(&word_poly(&l2[k..]));
                    let right = word_poly(&l1[..l1.len() - k]).concat(&r2.rhs);
                    rep.push(self.resolve(&w, &left, &right));
                }
                // inclusions: l2 strictly inside l1
                if i != j && l2.len() < l1.len() {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] != l2[..] {
                            continue;
                        }
                        any = true;
                        let right = word_poly(&l1[..pos]).concat(&r2.rhs).concat(&word_poly(&l1[pos + l2.len()..]));
                        rep.push(self.resolve(l1, &r1.rhs, &right));
                    }
                }
            }
        }
        if !any {
            rep.push(Check::pass("no ambiguities").with_note(format!("{} rules", self.rules.len())));
        }
        let _ = g;
        rep
    }

    fn resolve(&self, w: &[u8], left: &NCPoly<F>, right: &NCPoly<F>) -> Check {
        let id = format!("ambiguity {}", fmt_word(&self.generators, w));
        match (self.normal_form(left), self.normal_form(right)) {
            (Ok(a), Ok(b)) if a == b => Check::pass(id),
            (Ok(a), Ok(b)) => Check::fail(id, Failure::new(fmt_word(&self.generators, w), self.fmt(&a), self.fmt(&b))),
            (Err(e), _) | (_, Err(e)) => Check::error(id, e.to_string()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RuleJson {
    lhs: Vec<u8>,
    rhs: Vec<(Vec<u8>, Scalar)>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    #[serde(default)]
    name: Option<String>,
    generators: Vec<String>,
    rules: Vec<RuleJson>,
}

impl<F: Field> Presentation<F> {
    pub fn to_json(&self) -> serde_json::Value {
        let j = PresentationJson {
            name: Some(self.name.clone()),
            generators: self.generators.clone(),
            rules: self
                .rules
                .iter()
                .map(|r| RuleJson {
                    lhs: r.lhs.clone(),
                    rhs: r.rhs.terms().map(|(w, c)| (w.clone(), c.to_scalar())).collect(),
                })
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let j: PresentationJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut rules = Vec::new();
        for r in j.rules {
            let mut rhs = NCPoly::zero();
            for (w, c) in r.rhs {
                rhs.add_term(w, &F::from_scalar(&c)?);
            }
            rules.push(Rule { lhs: r.lhs, rhs });
        }
        Self::new(j.name.as_deref().unwrap_or("user"), j.generators, rules)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn toy() -> Presentation<Rational> {
        let one = Rational::from(1);
        Presentation::new(
            "toy",
            vec!["x".into(), "y".into()],
            vec![
                Rule { lhs: vec![0, 1], rhs: NCPoly::one() },
                Rule { lhs: vec![1, 0], rhs: NCPoly::monomial(vec![0], one) },
            ],
        )
        .unwrap()
    }

    #[test]
    fn toy_system_is_not_confluent_on_xyx() {
        let rep = toy().check_confluence(6);
        let bad: Vec<_> = rep.failures().collect();
        assert!(bad.iter().any(|c| c.witness.as_deref() == Some("x·y·x")), "{rep}");
        let c = rep.find("x·y·x").unwrap();
        let sides = [c.lhs.clone().unwrap(), c.rhs.clone().unwrap()];
        assert!(sides.contains(&"x".to_string()) && sides.contains(&"x^2".to_string()));
    }

    #[test]
    fn increasing_rule_is_rejected() {
        let r = Presentation::<Rational>::new(
            "bad",
            vec!["x".into(), "y".into()],
            vec![Rule { lhs: vec![0], rhs: NCPoly::monomial(vec![1], Rational::from(1)) }],
        );
        assert!(r.is_err());
    }

    #[test]
    fn step_budget_is_reported() {
        let p = Presentation::<Rational>::new(
            "sort",
            vec!["a".into(), "b".into()],
            vec![Rule { lhs: vec![1, 0], rhs: NCPoly::monomial(vec![0, 1], Rational::from(1)) }],
        )
        .unwrap();
        let mut w = vec![1u8; 6];
        w.extend([0u8; 6]);
        let x = NCPoly::monomial(w, Rational::from(1));
        assert_eq!(p.normal_form(&x).unwrap().terms().next().unwrap().0, &[0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1]);
        match p.normal_form_with_budget(&x, 10) {
            Err(Error::StepBudget { budget: 10, trace }) => assert!(trace.contains("->")),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let p = toy();
        let back = Presentation::<Rational>::from_json(&p.to_json()).unwrap();
        assert_eq!(back.rules(), p.rules());
        assert_eq!(back.generators(), p.generators());
    }
}

//! Laurent polynomials in `s = q^{1/2}` and their fraction field.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Rational, ScalarError};

/// `Σ coeffs[k] s^(low + k)`; no zero at either end, and the zero polynomial
/// is the empty vector with `low = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_parts(exp, vec![c])
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let (Some(&lo), Some(&hi)) = (map.keys().next(), map.keys().next_back()) else {
            return Self::zero();
        };
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        Self { low: lo, coeffs }
    }

    fn from_parts(low: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self { low: low + lead_zeros as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_exp(&self) -> i64 {
        self.low
    }

    pub fn high_exp(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i64, c))
    }

    pub fn is_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 if self.low == 0 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().max(other.high_exp());
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms().chain(other.terms()) {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_parts(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_parts(self.low + other.low, coeffs)
    }

    /// Substitutes `s -> s^{-1}`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }
}

// Ordinary polynomials (coefficient vectors, lowest degree first) for the
// gcd computations behind canonical fractions.

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().and_then(|c| c.recip()).expect("nonzero divisor");
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                r[shift + k] -= &c * bk;
            }
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn poly_monic(mut p: Vec<Rational>) -> Vec<Rational> {
    if let Some(inv) = p.last().and_then(|c| c.recip()) {
        for c in p.iter_mut() {
            *c *= &inv;
        }
    }
    p
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = poly_monic(r);
    }
    poly_monic(x)
}

/// A quotient of Laurent polynomials in canonical form: the denominator is a
/// monic polynomial with nonzero constant term and is coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFrac {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(r))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_i64(n))
    }

    /// `c · s^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, exp))
    }

    /// The formal square root `s` of `q`.
    pub fn s() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `q^k = s^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), 2 * k)
    }

    /// `q^{half/2}`, i.e. `s^half`.
    pub fn q_half_pow(half: i64) -> Self {
        Self::monomial(Rational::one(), half)
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant().is_some() && self.num == LaurentPoly::one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den == LaurentPoly::one() {
            self.num.is_constant()
        } else {
            None
        }
    }

    /// Re-canonicalizes; a no-op on values produced by this type.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // move the s-power of den into num so den has lowest exponent 0
        let shift = den.low_exp();
        let den = den.shift(-shift);
        let num = num.shift(-shift);
        if den.coeffs.len() == 1 {
            let inv = den.coeffs[0].recip().unwrap();
            return Self { num: num.scale(&inv), den: LaurentPoly::one() };
        }
        // den(0) != 0, so s is coprime to den and the s-power of num can be ignored
        let g = poly_gcd(&num.coeffs, &den.coeffs);
        let (num_c, den_c) = if g.len() > 1 {
            let (nq, nr) = poly_divrem(&num.coeffs, &g);
            let (dq, dr) = poly_divrem(&den.coeffs, &g);
            debug_assert!(nr.is_empty() && dr.is_empty());
            (nq, dq)
        } else {
            (num.coeffs, den.coeffs)
        };
        let lead_inv = den_c.last().and_then(|c| c.recip()).unwrap();
        let num = LaurentPoly::from_parts(num.low, num_c).scale(&lead_inv);
        let den = LaurentPoly::from_parts(0, den_c).scale(&lead_inv);
        Self { num, den }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den == LaurentPoly::one() {
                return Self::from_poly(self.num.add(&o.num));
            }
            return Self::canonical(self.num.add(&o.num), self.den.clone());
        }
        Self::canonical(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let one = LaurentPoly::one();
        if self.den == one && o.den == one {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::canonical(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        o.inv().map(|i| self.mul(&i)).ok_or(ScalarError::DivisionByZero)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv().ok_or(ScalarError::DivisionByZero)? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

fn fmt_poly(p: &LaurentPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let neg = c.signum() < 0;
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (e, a.is_one()) {
            (0, _) => write!(f, "{a}")?,
            (_, true) => write!(f, "s^{e}")?,
            _ => write!(f, "{a}*s^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Display for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            fmt_poly(&self.num, f)
        } else {
            write!(f, "(")?;
            fmt_poly(&self.num, f)?;
            write!(f, ")/(")?;
            fmt_poly(&self.den, f)?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct WireFrac {
    num: BTreeMap<String, Rational>,
    den: BTreeMap<String, Rational>,
}

fn poly_to_wire(p: &LaurentPoly) -> BTreeMap<String, Rational> {
    p.terms().map(|(e, c)| (e.to_string(), c.clone())).collect()
}

fn poly_from_wire(m: &BTreeMap<String, Rational>) -> Result<LaurentPoly, ScalarError> {
    let mut terms = Vec::with_capacity(m.len());
    for (e, c) in m {
        let e: i64 = e.trim().parse().map_err(|_| ScalarError::Parse(e.clone()))?;
        terms.push((e, c.clone()));
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl serde::Serialize for LaurentFrac {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WireFrac { num: poly_to_wire(&self.num), den: poly_to_wire(&self.den) }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentFrac {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = WireFrac::deserialize(d)?;
        let num = poly_from_wire(&w.num).map_err(D::Error::custom)?;
        let den = poly_from_wire(&w.den).map_err(D::Error::custom)?;
        LaurentFrac::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, r(c))))
    }

    #[test]
    fn long_division_in_s() {
        // (q - 1)/(s - 1) = s + 1
        let x = LaurentFrac::new(poly(&[(2, 1), (0, -1)]), poly(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(x, LaurentFrac::from_poly(poly(&[(1, 1), (0, 1)])));
    }

    #[test]
    fn canonical_examples() {
        let x = LaurentFrac::new(poly(&[(4, 1), (0, -1)]), poly(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(x, LaurentFrac::from_poly(poly(&[(2, 1), (0, 1)])));
        let z = LaurentFrac::new(LaurentPoly::zero(), poly(&[(6, 1)])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.den(), &LaurentPoly::one());
        let y = LaurentFrac::new(poly(&[(4, 1)]), poly(&[(2, 1)])).unwrap();
        assert_eq!(y, LaurentFrac::q_pow(1));
        assert_eq!(y.canonicalize(), y);
        assert!(LaurentFrac::new(r(1).into_poly(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn inverse_pair() {
        let q = LaurentFrac::q_pow(1);
        assert!(q.mul(&q.inv().unwrap()).is_one());
        let d = LaurentFrac::q_pow(1).sub(&LaurentFrac::q_pow(-1));
        assert!(d.mul(&d.inv().unwrap()).is_one());
    }

    #[test]
    fn denominator_is_monic_with_constant_term() {
        let x = LaurentFrac::new(poly(&[(0, 3)]), poly(&[(3, 2), (1, 4)])).unwrap();
        assert_eq!(x.den().low_exp(), 0);
        assert!(x.den().lead().unwrap().is_one());
        assert_eq!(x.num(), &poly(&[(-1, 3)]).scale(&Rational::new(1, 2)));
    }

    #[test]
    fn json_round_trip() {
        let x = LaurentFrac::new(poly(&[(1, 1), (0, 1)]), poly(&[(2, 1), (0, 3)])).unwrap();
        let js = serde_json::to_string(&x).unwrap();
        let back: LaurentFrac = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
        let parsed: LaurentFrac =
            serde_json::from_str(r#"{"num": {"1": "1/1", "0": "1/1"}, "den": {"0": "1/1"}}"#).unwrap();
        assert_eq!(parsed, LaurentFrac::s().add(&LaurentFrac::one()));
    }

    trait IntoPoly {
        fn into_poly(self) -> LaurentPoly;
    }

    impl IntoPoly for Rational {
        fn into_poly(self) -> LaurentPoly {
            LaurentPoly::constant(self)
        }
    }
}

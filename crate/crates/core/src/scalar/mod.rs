//! Exact coefficient fields: ℚ and ℚ(s) with `s² = q`.

mod laurent;
mod rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use laurent::{LaurentFrac, LaurentPoly};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: cannot combine a rational with a Laurent fraction")]
    FieldMismatch,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// The operations shared by both coefficient fields.
///
/// Arithmetic is by reference and named to stay clear of `std::ops`.
pub trait Field: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_scalar(&self) -> Scalar;
    fn from_scalar(s: &Scalar) -> Result<Self, ScalarError>;

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.plus(o);
    }

    fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        o.inv().map(|i| self.times(&i)).ok_or(ScalarError::DivisionByZero)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_i64(n)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }
    fn from_scalar(s: &Scalar) -> Result<Self, ScalarError> {
        match s {
            Scalar::Rational(r) => Ok(r.clone()),
            Scalar::Laurent(l) => l.as_rational().ok_or(ScalarError::FieldMismatch),
        }
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
}

impl Field for LaurentFrac {
    fn zero() -> Self {
        LaurentFrac::zero()
    }
    fn one() -> Self {
        LaurentFrac::one()
    }
    fn is_zero(&self) -> bool {
        LaurentFrac::is_zero(self)
    }
    fn is_one(&self) -> bool {
        LaurentFrac::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn inv(&self) -> Option<Self> {
        LaurentFrac::inv(self)
    }
    fn from_i64(n: i64) -> Self {
        LaurentFrac::from_i64(n)
    }
    fn from_rational(r: &Rational) -> Self {
        LaurentFrac::from_rational(r.clone())
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Laurent(self.clone())
    }
    fn from_scalar(s: &Scalar) -> Result<Self, ScalarError> {
        match s {
            Scalar::Rational(r) => Ok(LaurentFrac::from_rational(r.clone())),
            Scalar::Laurent(l) => Ok(l.clone()),
        }
    }
}

/// A tagged exact scalar. Binary operations require both sides to live in
/// the same field.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Rational(Rational),
    Laurent(LaurentFrac),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => Zero::is_zero(r),
            Scalar::Laurent(l) => l.is_zero(),
        }
    }

    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(match op {
                ArithOp::Add => x + y,
                ArithOp::Sub => x - y,
                ArithOp::Mul => x * y,
                ArithOp::Div => x.checked_div(y)?,
            })),
            (Scalar::Laurent(x), Scalar::Laurent(y)) => Ok(Scalar::Laurent(match op {
                ArithOp::Add => x.add(y),
                ArithOp::Sub => x.sub(y),
                ArithOp::Mul => x.mul(y),
                ArithOp::Div => x.div(y)?,
            })),
            _ => Err(ScalarError::FieldMismatch),
        }
    }
}

impl Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Rational(r) => Display::fmt(r, f),
            Scalar::Laurent(l) => Display::fmt(l, f),
        }
    }
}

impl Debug for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        Display::fmt(self, f)
    }
}

/// Rendering used in reports: `"p/q"` for rationals, the JSON map for fractions.
pub fn wire_string<F: Field>(x: &F) -> String {
    match x.to_scalar() {
        Scalar::Rational(r) => r.to_wire(),
        Scalar::Laurent(l) => x_to_json(&l),
    }
}

fn x_to_json(l: &LaurentFrac) -> String {
    serde_json::to_string(l).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Scalar::Rational(Rational::new(1, 2));
        let b = Scalar::Laurent(LaurentFrac::q_pow(1));
        assert_eq!(a.arith(&b, ArithOp::Add), Err(ScalarError::FieldMismatch));
        let z = Scalar::Rational(Rational::from_i64(0));
        assert_eq!(a.arith(&z, ArithOp::Div), Err(ScalarError::DivisionByZero));
        assert_eq!(
            a.arith(&Scalar::Rational(Rational::new(1, 4)), ArithOp::Add).unwrap(),
            Scalar::Rational(Rational::new(3, 4))
        );
    }

    #[test]
    fn scalar_json_forms() {
        let a = Scalar::Rational(Rational::new(-2, 4));
        assert_eq!(serde_json::to_string(&a).unwrap(), r#""-1/2""#);
        let b = Scalar::Laurent(LaurentFrac::q_half_pow(5));
        let js = serde_json::to_string(&b).unwrap();
        assert_eq!(js, r#"{"num":{"5":"1/1"},"den":{"0":"1/1"}}"#);
        let back: Scalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, b);
    }
}

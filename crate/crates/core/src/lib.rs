//! Exact computer algebra for Hopf-equivariant cyclic cohomology.
//!
//! Everything is computed over ℚ or over ℚ(s) with `s² = q`, and every
//! identity check returns a [`report::Report`] carrying witnesses.

pub mod actions;
pub mod catalog;
pub mod cyclic;
pub mod hopf;
pub mod ktheory;
pub mod linalg;
pub mod report;
pub mod rewrite;
pub mod scalar;

use report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("axiom check failed:\n{0}")]
    Axioms(Box<Report>),
    #[error("rewriting exceeded the step budget of {budget} after trace {trace}")]
    StepBudget { budget: usize, trace: String },
    #[error(transparent)]
    Scalar(#[from] scalar::ScalarError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

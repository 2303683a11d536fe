//! Structured verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Skipped,
}

/// One identity check. `witness` names the first failing basis tuple;
/// `lhs`/`rhs` hold both sides evaluated there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// A counterexample: basis tuple and the two disagreeing sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(witness: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Self { witness: witness.into(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

impl Check {
    pub fn new(identity: impl Into<String>, status: Status) -> Self {
        let identity = identity.into();
        Self {
            id: identity.clone(),
            identity,
            degree: None,
            status,
            witness: None,
            lhs: None,
            rhs: None,
            note: None,
        }
    }

    pub fn pass(identity: impl Into<String>) -> Self {
        Self::new(identity, Status::Pass)
    }

    pub fn fail(identity: impl Into<String>, f: Failure) -> Self {
        let mut c = Self::new(identity, Status::Fail);
        c.witness = Some(f.witness);
        c.lhs = Some(f.lhs);
        c.rhs = Some(f.rhs);
        c
    }

    pub fn error(identity: impl Into<String>, msg: impl Into<String>) -> Self {
        let mut c = Self::new(identity, Status::Error);
        c.note = Some(msg.into());
        c
    }

    pub fn from_result(identity: impl Into<String>, r: Option<Failure>) -> Self {
        match r {
            None => Self::pass(identity),
            Some(f) => Self::fail(identity, f),
        }
    }

    pub fn at_degree(mut self, n: usize) -> Self {
        self.degree = Some(n);
        self.id = format!("{}[n={}]", self.identity, n);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn prefixed(mut self, prefix: &str) -> Self {
        self.id = format!("{prefix}/{}", self.id);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
            Status::Skipped => "skip",
        };
        write!(f, "[{tag}] {}", self.id)?;
        if let Some(w) = &self.witness {
            write!(f, "  witness={w}")?;
        }
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, "  lhs={l}  rhs={r}")?;
        }
        if let Some(n) = &self.note {
            write!(f, "  ({n})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn record(&mut self, identity: impl Into<String>, r: Option<Failure>) {
        self.push(Check::from_result(identity, r));
    }

    pub fn record_at(&mut self, identity: impl Into<String>, n: usize, r: Option<Failure>) {
        self.push(Check::from_result(identity, r).at_degree(n));
    }

    /// Appends another report's checks under a `prefix/` namespace.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        self.checks.extend(other.checks.into_iter().map(|c| c.prefixed(prefix)));
    }

    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn find(&self, needle: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id.contains(needle))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

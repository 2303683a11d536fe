//! The JSON run report and the exit-code contract.

use std::fmt::Write as _;

use hopf_cyclic::report::{Check, Report, Status};
use serde::Serialize;
use serde_json::Value;

/// Schema version of [`RunReport`].
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOut {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<Check> for CheckOut {
    fn from(c: Check) -> Self {
        Self { id: c.id, status: c.status, witness: c.witness, lhs: c.lhs, rhs: c.rhs, note: c.note }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub checks: Vec<CheckOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub timing_ms: u64,
    pub version: String,
    pub tool: String,
}

impl RunReport {
    pub fn new(command: &str, inputs: Vec<String>) -> Self {
        Self {
            command: command.into(),
            inputs,
            checks: Vec::new(),
            result: None,
            timing_ms: 0,
            version: SCHEMA_VERSION.into(),
            tool: format!("hopf-cyclic {}", env!("CARGO_PKG_VERSION")),
        }
    }

    /// Adds every check of `r` under `prefix/`.
    pub fn absorb(&mut self, prefix: &str, r: Report) {
        self.checks.extend(r.checks.into_iter().map(|c| CheckOut::from(c.prefixed(prefix))));
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c.into());
    }

    /// Sorts checks by id and, under `fail_fast`, marks everything after the first non-pass as skipped.
    pub fn finish(&mut self, fail_fast: bool) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        if fail_fast {
            mark_skipped(&mut self.checks);
        }
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(&self.checks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "hopf-cyclic {}  [{}]", self.command, self.inputs.join(", "));
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
                Status::Skipped => "skip",
            };
            let _ = write!(s, "  [{tag}] {}", c.id);
            if let Some(w) = &c.witness {
                let _ = write!(s, "  witness={w}");
            }
            if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                let _ = write!(s, "  lhs={l}  rhs={r}");
            }
            if let Some(n) = &c.note {
                let _ = write!(s, "  ({n})");
            }
            s.push('\n');
        }
        if let Some(r) = &self.result {
            let _ = writeln!(s, "{}", serde_json::to_string_pretty(r).expect("serializable"));
        }
        let count = |st: Status| self.checks.iter().filter(|c| c.status == st).count();
        let _ = writeln!(
            s,
            "{} checks: {} pass, {} fail, {} error, {} skipped ({} ms)",
            self.checks.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Error),
            count(Status::Skipped),
            self.timing_ms
        );
        s
    }
}

/// 0 iff there is at least one check and every check passed.
pub fn exit_code(checks: &[CheckOut]) -> i32 {
    if !checks.is_empty() && checks.iter().all(|c| c.status == Status::Pass) {
        0
    } else {
        1
    }
}

pub fn mark_skipped(checks: &mut [CheckOut]) {
    if let Some(i) = checks.iter().position(|c| c.status != Status::Pass) {
        for c in &mut checks[i + 1..] {
            *c = CheckOut { id: std::mem::take(&mut c.id), status: Status::Skipped, witness: None, lhs: None, rhs: None, note: None };
        }
    }
}

/// Zeroes the timing field of a serialized report.
pub fn strip_timing(json: &str) -> String {
    let mut v: Value = serde_json::from_str(json).expect("report JSON");
    if let Some(o) = v.as_object_mut() {
        o.insert("timing_ms".into(), Value::from(0));
    }
    serde_json::to_string_pretty(&v).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(id: &str, status: Status) -> CheckOut {
        CheckOut { id: id.into(), status, witness: Some("w".into()), lhs: None, rhs: None, note: None }
    }

    #[test]
    fn fail_fast_keeps_every_check() {
        let mut r = RunReport::new("t", vec![]);
        r.checks = vec![c("c", Status::Pass), c("a", Status::Pass), c("b", Status::Fail), c("d", Status::Pass)];
        r.finish(true);
        let st: Vec<_> = r.checks.iter().map(|c| (c.id.as_str(), c.status)).collect();
        assert_eq!(st, [("a", Status::Pass), ("b", Status::Fail), ("c", Status::Skipped), ("d", Status::Skipped)]);
        assert_eq!(r.exit_code(), 1);
        assert!(r.checks[2].witness.is_none());
    }

    #[test]
    fn empty_report_is_not_success() {
        assert_eq!(exit_code(&[]), 1);
        assert_eq!(exit_code(&[c("x", Status::Pass)]), 0);
    }
}

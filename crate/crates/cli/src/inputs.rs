//! Resolution of catalog names and JSON files into library values.

use std::path::Path;
use std::sync::Arc;

use hopf_cyclic::actions::{ActionMap, CoactionMap, FinAlgebra, HAlgebra, Representation};
use hopf_cyclic::catalog::{catalog_entries, lookup, CatalogEntry, Payload};
use hopf_cyclic::cyclic::Cochain;
use hopf_cyclic::hopf::FinHopf;
use hopf_cyclic::ktheory::{MatrixAlgElem, MatrixAlgebra, Structure};
use hopf_cyclic::linalg::Mat;
use hopf_cyclic::scalar::Rational;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn looks_like_file(s: &str) -> bool {
    s.ends_with(".json") || s.contains('/') || Path::new(s).is_file()
}

/// Reads a JSON file, unwrapping the `{"payload": …}` envelope written by `export`.
pub fn read_json(path: &str) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{path}: invalid JSON: {e}")))?;
    Ok(match v.get("payload") {
        Some(p) if v.get("kind").is_some() => p.clone(),
        _ => v,
    })
}

fn parse_err(path: &str, e: impl std::fmt::Display) -> CliError {
    usage(format!("{path}: {e}"))
}

/// A Hopf algebra by catalog name.
pub fn hopf_by_name(name: &str) -> Result<Arc<FinHopf>, CliError> {
    match lookup(name).map(|e| e.payload) {
        Some(Payload::Hopf(h)) => Ok(h),
        Some(_) => Err(usage(format!("{name} is not a finite Hopf algebra"))),
        None => Err(usage(format!("unknown Hopf algebra {name}"))),
    }
}

/// A Hopf algebra from a JSON file, axioms unchecked.
pub fn hopf_from_file(path: &str) -> Result<FinHopf, CliError> {
    let v = read_json(path)?;
    FinHopf::from_json_unchecked(&v).map_err(|e| parse_err(path, e))
}

fn algebra_by_name(name: &str) -> Option<HAlgebra> {
    catalog_entries().into_iter().find_map(|e| match e.payload {
        Payload::Algebra(a) if e.name.eq_ignore_ascii_case(name) || a.name.eq_ignore_ascii_case(name) => Some(a),
        _ => None,
    })
}

#[derive(Deserialize)]
struct AlgebraFile {
    name: Option<String>,
    hopf: Value,
    algebra: Value,
    action: Value,
    #[serde(default)]
    coaction: Option<Value>,
}

fn algebra_from_file(path: &str) -> Result<HAlgebra, CliError> {
    let f: AlgebraFile = serde_json::from_value(read_json(path)?).map_err(|e| parse_err(path, e))?;
    let hopf = match &f.hopf {
        Value::String(s) => hopf_by_name(s)?,
        v => Arc::new(FinHopf::from_json_unchecked(v).map_err(|e| parse_err(path, e))?),
    };
    let algebra = FinAlgebra::from_json(&f.algebra).map_err(|e| parse_err(path, e))?;
    let action = ActionMap::from_json(&f.action).map_err(|e| parse_err(path, e))?;
    let coaction = match f.coaction.filter(|c| !c.is_null()) {
        Some(c) => Some(CoactionMap::from_json(&c).map_err(|e| parse_err(path, e))?),
        None => None,
    };
    let name = f.name.unwrap_or_else(|| path.to_string());
    HAlgebra::new_unchecked(&name, algebra, hopf, action, coaction).map_err(|e| parse_err(path, e))
}

/// An `H`-algebra by catalog name or file, unvalidated.
pub fn halgebra(arg: &str) -> Result<HAlgebra, CliError> {
    if let Some(a) = algebra_by_name(arg) {
        return Ok(a);
    }
    if looks_like_file(arg) {
        return algebra_from_file(arg);
    }
    Err(usage(format!("unknown module algebra {arg}")))
}

/// `--hopf`/`--algebra` as given on the command line, with a default pair.
pub fn algebra_pair(hopf: Option<&str>, algebra: Option<&str>, default: &str) -> Result<HAlgebra, CliError> {
    let a = match (hopf, algebra) {
        (_, Some(a)) => halgebra(a)?,
        (Some(h), None) => HAlgebra::adjoint(hopf_by_name(h)?).map_err(CliError::Core)?,
        (None, None) => halgebra(default)?,
    };
    if let Some(h) = hopf {
        if !a.hopf.name().eq_ignore_ascii_case(hopf_by_name(h)?.name()) {
            return Err(usage(format!("{} is a {}-algebra, not a {h}-algebra", a.name, a.hopf.name())));
        }
    }
    Ok(a)
}

#[derive(Deserialize)]
struct RepFile {
    hopf: String,
    name: Option<String>,
    matrices: Vec<Vec<Vec<Rational>>>,
}

/// A representation of `h` by catalog name or file.
pub fn representation(arg: &str, h: &FinHopf) -> Result<Representation, CliError> {
    let found = catalog_entries().into_iter().find_map(|e| match e.payload {
        Payload::Representation { rep, .. } if e.name.eq_ignore_ascii_case(arg) || rep.name().eq_ignore_ascii_case(arg) => {
            Some(rep)
        }
        _ => None,
    });
    if let Some(r) = found {
        return Ok(r);
    }
    if arg.eq_ignore_ascii_case("trivial") {
        return Ok(Representation::trivial(h, 1));
    }
    if !looks_like_file(arg) {
        return Err(usage(format!("unknown representation {arg}")));
    }
    let f: RepFile = serde_json::from_value(read_json(arg)?).map_err(|e| parse_err(arg, e))?;
    if !f.hopf.eq_ignore_ascii_case(h.name()) {
        return Err(usage(format!("{arg} represents {}, not {}", f.hopf, h.name())));
    }
    let mats = f.matrices.into_iter().map(Mat::from_rows).collect();
    Representation::new(h, f.name.as_deref().unwrap_or(arg), mats).map_err(|e| parse_err(arg, e))
}

#[derive(Deserialize)]
struct IdempotentFile {
    algebra: String,
    representation: String,
    structure: Structure,
    size: usize,
    entries: Vec<Vec<Vec<(String, Rational)>>>,
}

/// An element of `A ⊗ End(V)` by catalog name or in the `export` layout.
pub fn idempotent(arg: &str) -> Result<MatrixAlgElem, CliError> {
    if let Some(CatalogEntry { payload: Payload::Idempotent(e), .. }) = lookup(arg) {
        return Ok(e);
    }
    if let Some(e) = lookup(arg) {
        return Err(usage(format!("{} is a {} entry, not a finite idempotent", e.name, e.kind())));
    }
    if !looks_like_file(arg) {
        return Err(usage(format!("unknown idempotent {arg}")));
    }
    let f: IdempotentFile = serde_json::from_value(read_json(arg)?).map_err(|e| parse_err(arg, e))?;
    let base = halgebra(&f.algebra)?;
    let rep = representation(&f.representation, &base.hopf)?;
    let m = MatrixAlgebra::new(&base, &rep, f.structure).map_err(CliError::Core)?;
    if f.entries.len() != f.size || f.size != m.size() {
        return Err(usage(format!("{arg}: expected a {0}×{0} matrix", m.size())));
    }
    let labels = base.algebra.labels();
    let mut parts: Vec<Mat> = vec![Mat::zeros(f.size, f.size); base.dim()];
    for (i, row) in f.entries.iter().enumerate() {
        if row.len() != f.size {
            return Err(usage(format!("{arg}: row {i} has {} entries", row.len())));
        }
        for (j, cell) in row.iter().enumerate() {
            for (label, c) in cell {
                let a = labels.iter().position(|l| l == label).ok_or_else(|| usage(format!("{arg}: unknown basis label {label}")))?;
                parts[a][(i, j)] += c;
            }
        }
    }
    let entries: Vec<(usize, Mat)> = parts.into_iter().enumerate().filter(|(_, m)| !m.is_zero()).collect();
    m.from_entries(&entries).map_err(CliError::Core)
}

/// A cochain or a list of cochains `{"degree": n, "data": [[index, "c"], …]}`.
pub fn cochains(path: &str) -> Result<Vec<Cochain>, CliError> {
    let v = read_json(path)?;
    let parsed = match v {
        Value::Array(_) => serde_json::from_value::<Vec<Cochain>>(v),
        _ => serde_json::from_value::<Cochain>(v).map(|c| vec![c]),
    };
    let fs = parsed.map_err(|e| parse_err(path, e))?;
    if fs.is_empty() {
        return Err(usage(format!("{path}: no cochains")));
    }
    Ok(fs)
}

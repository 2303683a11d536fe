use std::sync::Arc;

use hopf_cyclic::actions::{twisted_product, verify_module_algebra, verify_yd, yd_perturbation_suite, HAlgebra, Representation};
use hopf_cyclic::catalog::{
    catalog_entries, kc2, kc2_invertible, kc3, ks3, lookup, monopole_suite, regular_kc2, sign_line,
    sign_line_braided, sign_line_idempotent, sweedler_h4, h4_rep2, Monopole, Payload,
};
use hopf_cyclic::cyclic::{equivariant_complex, verify_cylindrical, verify_diagonal, verify_phi, Cochain, Crossed};
use hopf_cyclic::hopf::Elem;
use hopf_cyclic::ktheory::{pair_even, pair_periodic, InnerOps, PsiTrace};
use hopf_cyclic::linalg::SVec;
use hopf_cyclic::report::{Check, Failure, Report};
use hopf_cyclic::scalar::Rational;
use hopf_cyclic::Error;
use serde_json::{json, Value};

use crate::inputs::{self, algebra_pair};
use crate::report::RunReport;
use crate::{CatalogCmd, Cli, CliError, Command, Format, Pair, Verify};

pub enum Output {
    Report(RunReport),
    Raw(String),
}

const DEFAULT_ALGEBRA: &str = "sign-line";

fn absorb(r: &mut RunReport, prefix: &str, res: Result<Report, Error>) {
    match res {
        Ok(rep) => r.absorb(prefix, rep),
        Err(e) => r.push(Check::error(prefix, e.to_string())),
    }
}

fn pair_inputs(a: &HAlgebra) -> Vec<String> {
    vec![a.hopf.name().to_string(), a.name.clone()]
}

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let r = match &cli.command {
        Command::Verify(v) => verify(v, cli.seed)?,
        Command::Monopole { expansions } => monopole(*expansions),
        Command::Pairing { idempotent, cocycle, periodic } => pairing(idempotent, cocycle, *periodic)?,
        Command::Cohomology { pair, n_max, cocycles } => cohomology(pair, *n_max, *cocycles)?,
        Command::Export { name, format } => return export(name, *format).map(Output::Raw),
        Command::Catalog(CatalogCmd::List) => catalog_list(),
    };
    Ok(Output::Report(r))
}

fn verify(v: &Verify, seed: u64) -> Result<RunReport, CliError> {
    match v {
        Verify::Hopf { target } => verify_hopf(target),
        Verify::ModuleAlgebra { pair } => verify_module(pair),
        Verify::Yd { pair, perturbations } => verify_yd_cmd(pair, *perturbations, seed),
        Verify::Cocyclic { pair, n_max } => {
            let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
            let mut r = RunReport::new("verify cocyclic", pair_inputs(&a));
            r.absorb("input", verify_module_algebra(&a.hopf, &a.algebra, &a.action));
            let cx = equivariant_complex(&a);
            r.absorb("cocyclic", cx.verify(*n_max, true));
            r.absorb("mixed", cx.verify_mixed(*n_max));
            Ok(r)
        }
        Verify::PhiPsi { pair, n_max } => {
            let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
            let mut r = RunReport::new("verify phi-psi", pair_inputs(&a));
            absorb(&mut r, "phi", verify_phi(&a, *n_max));
            match Crossed::new(&a) {
                Ok(x) => r.absorb("psi", verify_diagonal(&x, *n_max)),
                Err(e) => r.push(Check::error("psi", e.to_string())),
            }
            Ok(r)
        }
        Verify::Cylindrical { pair, p_max, q_max } => {
            let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
            let mut r = RunReport::new("verify cylindrical", pair_inputs(&a));
            match Crossed::new(&a) {
                Ok(x) => r.absorb("cylindrical", verify_cylindrical(&Arc::new(x), *p_max, *q_max)),
                Err(e) => r.push(Check::error("cylindrical", e.to_string())),
            }
            Ok(r)
        }
        Verify::TraceMap { pair, rep, n_max } => verify_trace(pair, rep.as_deref(), *n_max),
        Verify::Homotopies { pair, element, n_max } => verify_homotopies(pair, element.as_deref(), *n_max),
    }
}

fn verify_hopf(target: &str) -> Result<RunReport, CliError> {
    if let Some(e) = lookup(target) {
        if !matches!(e.payload, Payload::Hopf(_) | Payload::SymbolicHopf(_)) {
            return Err(CliError::Usage(format!("{} is a {} entry, not a Hopf algebra", e.name, e.kind())));
        }
        let mut r = RunReport::new("verify hopf", vec![e.name.clone()]);
        r.absorb(&e.name, e.verify());
        return Ok(r);
    }
    if !std::path::Path::new(target).is_file() {
        return Err(CliError::Usage(format!("{target}: no such catalog entry or file")));
    }
    let h = inputs::hopf_from_file(target)?;
    let mut r = RunReport::new("verify hopf", vec![target.to_string()]);
    r.absorb(h.name(), h.verify_hopf_axioms());
    Ok(r)
}

fn catalog_algebras() -> Vec<(String, HAlgebra)> {
    catalog_entries()
        .into_iter()
        .filter_map(|e| match e.payload {
            Payload::Algebra(a) => Some((e.name, a)),
            _ => None,
        })
        .collect()
}

fn verify_module(pair: &Pair) -> Result<RunReport, CliError> {
    if !pair.is_empty() {
        let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
        let mut r = RunReport::new("verify module-algebra", pair_inputs(&a));
        r.absorb(&a.name, verify_module_algebra(&a.hopf, &a.algebra, &a.action));
        return Ok(r);
    }
    let all = catalog_algebras();
    let mut r = RunReport::new("verify module-algebra", all.iter().map(|(n, _)| n.clone()).collect());
    for (name, a) in &all {
        r.absorb(name, verify_module_algebra(&a.hopf, &a.algebra, &a.action));
    }
    let mut twisted = Vec::new();
    for h in [kc2(), kc3(), ks3(), sweedler_h4()] {
        let pair = HAlgebra::self_yd(h.clone()).and_then(|y| Ok((y, HAlgebra::adjoint(h)?)));
        twisted.push(pair);
    }
    twisted.push(Ok((sign_line(), sign_line())));
    twisted.push(Ok((sign_line_braided(), sign_line())));
    for p in twisted {
        let res = p.and_then(|(a, b)| Ok((format!("twisted/{} ⊗ {}", a.name, b.name), twisted_product(&a, &b)?)));
        match res {
            Ok((id, t)) => r.absorb(&id, verify_module_algebra(&t.hopf, &t.algebra, &t.action)),
            Err(e) => r.push(Check::error("twisted", e.to_string())),
        }
    }
    Ok(r)
}

fn verify_yd_cmd(pair: &Pair, count: usize, seed: u64) -> Result<RunReport, CliError> {
    let targets: Vec<(String, HAlgebra)> = if pair.is_empty() {
        catalog_algebras().into_iter().filter(|(_, a)| a.coaction.is_some()).collect()
    } else {
        let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
        if a.coaction.is_none() {
            return Err(CliError::Usage(format!("{} carries no coaction", a.name)));
        }
        vec![(a.name.clone(), a)]
    };
    let mut r = RunReport::new("verify yd", targets.iter().map(|(n, _)| n.clone()).collect());
    for (name, a) in &targets {
        absorb(&mut r, name, verify_yd(a));
    }
    let structures: Vec<HAlgebra> = targets.into_iter().map(|(_, a)| a).collect();
    if count > 0 {
        r.absorb("perturbed", yd_perturbation_suite(&structures, count, seed));
    }
    Ok(r)
}

fn verify_trace(pair: &Pair, rep: Option<&str>, n_max: usize) -> Result<RunReport, CliError> {
    let cases: Vec<(HAlgebra, Representation)> = if pair.is_empty() && rep.is_none() {
        let h4 = HAlgebra::self_yd(sweedler_h4()).map_err(CliError::Core)?;
        vec![(sign_line(), regular_kc2()), (sign_line_braided(), regular_kc2()), (h4, h4_rep2())]
    } else {
        let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
        let v = inputs::representation(rep.unwrap_or("trivial"), &a.hopf)?;
        vec![(a, v)]
    };
    let names = cases.iter().flat_map(|(a, v)| [a.name.clone(), v.name().to_string()]).collect();
    let mut r = RunReport::new("verify trace-map", names);
    for (a, v) in &cases {
        let id = format!("{} ⊗ {}", a.name, v.name());
        match PsiTrace::new(a, v) {
            Ok(t) => {
                r.absorb(&format!("{id}/Ψ"), t.verify(n_max));
                r.absorb(&format!("{id}/Ψ∘β"), t.verify_beta(n_max));
            }
            Err(e) => r.push(Check::error(id, e.to_string())),
        }
    }
    Ok(r)
}

/// `label=coef,…` in the basis of `a`.
fn parse_element(a: &HAlgebra, s: &str) -> Result<Elem, CliError> {
    let labels = a.algebra.labels();
    let mut terms = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (l, c) = part.split_once('=').unwrap_or((part, "1"));
        let i = labels
            .iter()
            .position(|x| x == l.trim())
            .ok_or_else(|| CliError::Usage(format!("unknown basis label {l} (have {})", labels.join(", "))))?;
        let c: Rational = c.trim().parse().map_err(|_| CliError::Usage(format!("bad coefficient {c}")))?;
        terms.push((i, c));
    }
    Ok(SVec::from_unsorted(terms))
}

fn verify_homotopies(pair: &Pair, element: Option<&str>, n_max: usize) -> Result<RunReport, CliError> {
    let cases: Vec<(HAlgebra, Elem)> = if pair.is_empty() && element.is_none() {
        let e = sign_line_idempotent();
        let (g, _) = kc2_invertible(&e).map_err(CliError::Core)?;
        let adj = HAlgebra::adjoint(kc3()).map_err(CliError::Core)?;
        vec![(e.algebra().halgebra().clone(), g.elem().clone()), (adj, Elem::unit(1))]
    } else {
        let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
        let b = match element {
            Some(s) => parse_element(&a, s)?,
            None => a.algebra.unit().clone(),
        };
        vec![(a, b)]
    };
    let mut r = RunReport::new("verify homotopies", cases.iter().map(|(a, _)| a.name.clone()).collect());
    for (a, b) in &cases {
        let ops = InnerOps::new(a, b.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
        let id = format!("{} b={}", a.name, a.algebra.fmt(b));
        absorb(&mut r, &id, ops.verify(n_max));
    }
    Ok(r)
}

fn monopole(expansions: bool) -> RunReport {
    let audit = monopole_suite();
    let m = Monopole::new();
    let mut r = RunReport::new("monopole", vec!["uq-su2".into(), "podles".into(), "rep2-uq".into()]);
    r.checks.extend(audit.report.checks.iter().cloned().map(Into::into));
    let mut result = json!({ "e_q": m.matrix().fmt(&m.sphere), "e_q^2": audit.square });
    if expansions {
        result["expansions"] = serde_json::to_value(&audit.expansions).expect("serializable");
    }
    r.result = Some(result);
    r
}

fn pairing(idempotent: &str, cocycle: &str, periodic: bool) -> Result<RunReport, CliError> {
    let e = inputs::idempotent(idempotent)?;
    let fs = inputs::cochains(cocycle)?;
    if !periodic && fs.len() != 1 {
        return Err(CliError::Usage(format!("{cocycle}: {} cochains; pass --periodic for a (b, B) cocycle", fs.len())));
    }
    let mut r = RunReport::new("pairing", vec![idempotent.to_string(), cocycle.to_string()]);
    r.absorb("e", e.is_invariant());
    r.absorb("e", e.is_idempotent());
    let value = if periodic { pair_periodic(&e, &fs) } else { pair_even(&e, &fs[0]) };
    match value {
        Ok(p) => {
            let c = (!p.in_r_h).then(|| Failure::new("value", format!("{:?}", p.value), "an element of R(H)"));
            r.push(Check::from_result("⟨e, f⟩ ∈ R(H)", c));
            let degrees: Vec<usize> = fs.iter().map(|f| f.degree).collect();
            r.result = Some(json!({ "degrees": degrees, "periodic": periodic, "pairing": p.to_json() }));
        }
        Err(err) => r.push(Check::error("⟨e, f⟩ ∈ R(H)", err.to_string())),
    }
    Ok(r)
}

fn cohomology(pair: &Pair, n_max: usize, cocycles: bool) -> Result<RunReport, CliError> {
    let a = algebra_pair(pair.hopf.as_deref(), pair.algebra.as_deref(), DEFAULT_ALGEBRA)?;
    let mut r = RunReport::new("cohomology", pair_inputs(&a));
    let cx = equivariant_complex(&a);
    let connes = cx.connes_dims(n_max);
    let mut result = json!({
        "cochains": (0..=n_max).map(|n| cx.space(n, false).dim()).collect::<Vec<_>>(),
        "hc_connes": connes,
    });
    match cx.cohomology_dims(n_max) {
        Ok(d) => {
            for n in 0..=n_max {
                let c = (d.hc[n] != connes[n]).then(|| Failure::new(format!("n={n}"), d.hc[n], connes[n]));
                r.push(Check::from_result("dim HC: (b, B) bicomplex = Connes complex", c).at_degree(n));
            }
            result["hh"] = json!(d.hh);
            result["hc"] = json!(d.hc);
        }
        Err(e) => r.push(Check::error("dim HC", e.to_string())),
    }
    if cocycles {
        let basis: Vec<Vec<Cochain>> = (0..=n_max)
            .map(|n| cx.cyclic_cocycles(n).basis().iter().map(|v| Cochain::new(n, v.clone())).collect())
            .collect();
        result["cyclic_cocycles"] = serde_json::to_value(basis).expect("serializable");
    }
    r.result = Some(result);
    Ok(r)
}

fn export(name: &str, format: Format) -> Result<String, CliError> {
    let e = lookup(name).ok_or_else(|| CliError::Usage(format!("unknown catalog entry {name}")))?;
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&e.to_json()).expect("serializable") + "\n"),
    }
}

fn catalog_list() -> RunReport {
    let entries = catalog_entries();
    let mut r = RunReport::new("catalog list", entries.iter().map(|e| e.name.clone()).collect());
    let mut rows = Vec::new();
    for e in &entries {
        let rep = e.verify();
        let c = rep.failures().next().map(|f| Failure::new(f.id.clone(), f.lhs.clone().unwrap_or_default(), f.rhs.clone().unwrap_or_default()));
        let mut check = Check::from_result(format!("catalog/{}", e.name), c);
        check = check.with_note(format!("{} checks", rep.checks.len()));
        r.push(check);
        rows.push(json!({ "name": e.name, "kind": e.kind(), "provenance": e.provenance }));
    }
    r.result = Some(Value::Array(rows));
    r
}

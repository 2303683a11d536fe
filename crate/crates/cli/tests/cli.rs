use std::path::PathBuf;
use std::process::Command;

use hopf_cyclic_cli::report::strip_timing;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopf-cyclic"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("spawn");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let (code, out, err) = run(&a);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}")))
}

fn statuses(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap().to_string()).collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopf-cyclic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn monopole_reports_four_passing_checks() {
    let (code, v) = json(&["monopole"]);
    assert_eq!(code, 0);
    assert_eq!(statuses(&v), ["pass"; 4]);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["E·e_q = 0", "F·e_q = 0", "K·e_q = e_q", "e_q² = e_q"]);
    assert_eq!(v["version"], "1");
}

#[test]
fn cocyclic_suite_on_the_sign_line() {
    let (code, v) = json(&["verify", "cocyclic", "--hopf", "kc2", "--algebra", "sign-line", "--n-max", "3"]);
    assert_eq!(code, 0);
    assert!(statuses(&v).iter().all(|s| s == "pass"));
    assert!(v["checks"].as_array().unwrap().len() > 40);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "hopf", "does-not-exist.json"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify", "cocyclic", "--hopf", "kS3", "--algebra", "sign-line"]).0, 2);
    assert_eq!(run(&["export", "nothing-by-this-name"]).0, 2);
    assert_eq!(run(&["verify", "homotopies", "--algebra", "sign-line", "--element", "y=1"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn exported_hopf_algebra_verifies_and_broken_copy_fails() {
    let (code, out, _) = run(&["export", "H4"]);
    assert_eq!(code, 0);
    let good = scratch("h4.json");
    std::fs::write(&good, &out).unwrap();
    let (code, v) = json(&["verify", "hopf", good.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");

    let mut doc: Value = serde_json::from_str(&out).unwrap();
    doc["payload"]["counit"][2] = Value::from("1/1");
    let bad = scratch("h4-bad.json");
    std::fs::write(&bad, doc.to_string()).unwrap();
    let (code, v) = json(&["verify", "hopf", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(statuses(&v).contains(&"fail".to_string()));
    let c = v["checks"].as_array().unwrap().iter().find(|c| c["status"] == "fail").unwrap();
    assert!(c.get("witness").is_some());

    let (code, v) = json(&["--fail-fast", "verify", "hopf", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let st = statuses(&v);
    let first = st.iter().position(|s| s != "pass").unwrap();
    assert!(st[first + 1..].iter().all(|s| s == "skipped"));
    assert!(st[..first].iter().all(|s| s == "pass"));
}

#[test]
fn reports_are_reproducible_modulo_timing() {
    for args in [&["verify", "yd", "--seed", "11"][..], &["catalog", "list"], &["verify", "phi-psi", "--n-max", "1"]] {
        let a = run(&[&["--json"], args].concat()).1;
        let b = run(&[&["--json"], args].concat()).1;
        assert_eq!(strip_timing(&a), strip_timing(&b), "{args:?}");
    }
}

#[test]
fn checks_are_sorted_by_id() {
    let (_, v) = json(&["verify", "cylindrical", "--p-max", "1", "--q-max", "1"]);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn pairing_from_exported_idempotent_and_emitted_cocycle() {
    let (_, e, _) = run(&["export", "sign-line-e"]);
    let ef = scratch("e.json");
    std::fs::write(&ef, e).unwrap();
    let (code, coh) = json(&["cohomology", "--algebra", "sign-line", "--n-max", "2", "--cocycles"]);
    assert_eq!(code, 0);
    let f0 = &coh["result"]["cyclic_cocycles"][0][0];
    let f = scratch("f0.json");
    std::fs::write(&f, f0.to_string()).unwrap();
    let (code, p) = json(&["pairing", "--idempotent", ef.to_str().unwrap(), "--cocycle", f.to_str().unwrap()]);
    assert_eq!(code, 0, "{p}");
    assert_eq!(p["result"]["pairing"]["in_R_H"], true);

    let by_name = json(&["pairing", "--idempotent", "sign-line-e", "--cocycle", f.to_str().unwrap()]).1;
    assert_eq!(by_name["result"], p["result"]);

    let per = scratch("per.json");
    std::fs::write(&per, serde_json::json!([f0, {"degree": 2, "data": []}]).to_string()).unwrap();
    let (code, q) = json(&["pairing", "--idempotent", "sign-line-e", "--cocycle", per.to_str().unwrap(), "--periodic"]);
    assert_eq!(code, 0);
    assert_eq!(q["result"]["pairing"], p["result"]["pairing"]);
}

#[test]
fn non_cocycle_is_an_error_check() {
    let f = scratch("not-cocycle.json");
    std::fs::write(&f, r#"{"degree": 0, "data": [[1, "1"]]}"#).unwrap();
    let (code, v) = json(&["pairing", "--idempotent", "sign-line-e", "--cocycle", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(statuses(&v).contains(&"error".to_string()));
}

#[test]
fn hc_dimensions_agree_between_complexes() {
    let (code, v) = json(&["cohomology", "--hopf", "kc3", "--n-max", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["hc"], v["result"]["hc_connes"]);
}

use std::process::{Command, Output};

use serde_json::Value;

fn rootzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootzeta"))
        .args(args)
        .env_remove("ROOTZETA_OUTPUT")
        .env_remove("ROOTZETA_PRECISION")
        .env_remove("ROOTZETA_TOLERANCE")
        .env_remove("ROOTZETA_MAX_OUTER")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn value_of(v: &Value) -> f64 {
    v["value"].as_str().unwrap().parse().unwrap()
}

#[test]
fn eval_zhao_value() {
    let out = rootzeta(&["eval", "2", "1", "1", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert!((value_of(&v) - 0.0099527234).abs() < 1e-10);
    assert!(v["error_bound"].as_f64().unwrap() < 1e-10);
    assert!(v["terms_summed"].as_u64().unwrap() > 0);
}

#[test]
fn eval_rejects_weight_six() {
    let out = rootzeta(&["eval", "1", "1", "1", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("weight"));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn symmetrized_sum_doubles_under_reduction() {
    let s = ["2", "2", "2", "3", "2", "2"];
    let plain = json(&rootzeta(&[&["eval"][..], &s].concat()));
    let ssum = json(&rootzeta(&[&["eval", "--ssum", "2"][..], &s].concat()));
    assert!((value_of(&ssum) - 2.0 * value_of(&plain)).abs() < 1e-10);
}

#[test]
fn eval_with_real_slot() {
    let out = rootzeta(&["eval", "--var", "1=2", "1", "1", "1", "1", "1"]);
    let direct = rootzeta(&["eval", "2", "1", "1", "1", "1", "1"]);
    assert!((value_of(&json(&out)) - value_of(&json(&direct))).abs() < 1e-10);
    let bad = rootzeta(&["eval", "--var", "7=2", "1", "1", "1", "1", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn closed_form_matches_lattice() {
    let out = rootzeta(&["closed-form", "1", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["display"], "1/18*zeta(2)*zeta(5) - 109/1296*zeta(7)");
    assert_eq!(
        v["expr"],
        serde_json::json!({"1/18": ["zeta(2)", "zeta(5)"], "-109/1296": ["zeta(7)"]})
    );
    assert_eq!(v["args"], serde_json::json!([2, 1, 1, 1, 1, 1]));
    assert_eq!(v["pass"], true);
}

#[test]
fn weyl_transversal_and_reduction() {
    let v = json(&rootzeta(&["weyl", "--I", "1"]));
    assert_eq!(
        v["transversal"],
        serde_json::json!(["1", "s2", "s2s1", "s2s1s2", "s2s1s2s1", "s2s1s2s1s2"])
    );

    let out = rootzeta(&[
        "weyl",
        "--I",
        "2",
        "--reduction",
        "w0s1",
        "--s",
        "2",
        "2",
        "2",
        "3",
        "2",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let red = &json(&out)["reduction"];
    assert_eq!(red["w1"], "s2s1s2s1s2");
    assert_eq!(red["kept"], serde_json::json!(["1", "s1"]));
    let terms = red["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.iter().all(|t| t["sign"] == 1));

    let bad = rootzeta(&[
        "weyl",
        "--I",
        "2",
        "--reduction",
        "w0s1",
        "--s",
        "2",
        "2",
        "2",
        "2",
        "2",
        "2",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_fr01_suite() {
    let out = rootzeta(&["verify", "--suite", "fr01", "--s", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "fr01");
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn tampered_catalog_exits_one() {
    let bundled = include_str!("../data/catalog.json");
    let path = std::env::temp_dir().join(format!("rootzeta-catalog-{}.json", std::process::id()));
    std::fs::write(&path, bundled.replacen("-109/1296", "-109/1295", 1)).unwrap();
    let out = rootzeta(&[
        "verify",
        "--suite",
        "catalog",
        "--catalog",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().contains("catalog"));
}

#[test]
fn flags_override_environment() {
    let text = Command::new(env!("CARGO_BIN_EXE_rootzeta"))
        .args(["weyl", "--I", "2"])
        .env("ROOTZETA_OUTPUT", "text")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&text.stdout).starts_with("W^{2} = {1, s1,"));
    let forced = Command::new(env!("CARGO_BIN_EXE_rootzeta"))
        .args(["weyl", "--I", "2", "--output", "json"])
        .env("ROOTZETA_OUTPUT", "text")
        .output()
        .unwrap();
    assert_eq!(json(&forced)["subset"], serde_json::json!([2]));
}

#[test]
fn in_process_runner_reports_usage_errors() {
    let (code, stdout, stderr) = rootzeta::cli::run(["rootzeta", "eval"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(!stderr.is_empty());
    let (code, stdout, _) = rootzeta::cli::run([
        "rootzeta",
        "--precision",
        "40",
        "eval",
        "2",
        "1",
        "1",
        "1",
        "1",
        "1",
    ]);
    assert_eq!(code, 2);
    assert!(stdout.contains("precision"));
}

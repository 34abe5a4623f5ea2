use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cmt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmt")).args(args).output().expect("cmt runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = cmt(args);
    let json = serde_json::from_slice(&out.stdout).expect("stdout is one JSON report");
    (out.status.code().unwrap(), json)
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn classify_builtin_fig1() {
    let (code, r) = report(&["classify", "--builtin", "fig1"]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "classify");
    assert_eq!(r["status"], "ok");
    assert_eq!(r["result"]["t_sharp"], 2);
    assert_eq!(r["result"]["block_sizes"], serde_json::json!([1, 3]));
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn classify_from_path() {
    let (code, r) = report(&["--json", "classify", &fixture("fig3.graph")]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["t_sharp"], 3);
}

#[test]
fn oracle_reports_codim() {
    let (code, r) = report(&["oracle", "--builtin", "k22", "--max-t", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["cm_codim"], 1);
    assert_eq!(r["result"]["cm_table"].as_array().unwrap().len(), 4);
    assert_eq!(r["result"]["euler_poincare_holds"], true);
}

#[test]
fn verify_exhaustive_and_single() {
    let (code, r) = report(&["verify", "--d", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["instances"], 3);
    assert_eq!(r["result"]["agreements"], 3);
    let (code, r) = report(&["verify", "--builtin", "fig2"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["status"], "agreement");
}

#[test]
fn expand_uses_the_multiplicity_line() {
    let (code, r) = report(&["expand", &fixture("chain_1_3.graph")]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["edges"], 13);
    assert_eq!(r["result"]["predicted_codim"], 2);
    let (_, r) = report(&["expand", "--builtin", "chain", "--mult", "2,2"]);
    assert_eq!(r["result"]["pairs"], 4);
    assert_eq!(r["result"]["predicted_codim"], 3);
}

#[test]
fn contract_recovers_the_base() {
    let (code, r) = report(&["contract", "--builtin", "fig1"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["multiplicities"], serde_json::json!([1, 3]));
    assert_eq!(r["result"]["predicted_codim"], 2);
    assert!(r["result"]["base"].as_str().unwrap().contains("M: 1 3"));
}

#[test]
fn enumerate_writes_documents_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let (code, r) = report(&["enumerate", "--cm", "2", "--out", out]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["count"], 4);
    let manifest: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest, r["result"]);
    for f in manifest["files"].as_array().unwrap() {
        let text = std::fs::read_to_string(dir.path().join(f.as_str().unwrap())).unwrap();
        cmt_core::bigraph::parse_graph(&text).unwrap();
    }
}

#[test]
fn enumerate_sharp_four() {
    let (code, r) = report(&["enumerate", "--cmt", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["kind"], "cmt");
    assert_eq!((r["result"]["count"].as_u64(), r["result"]["connected_count"].as_u64()), (Some(37), Some(22)));
    assert_eq!(r["result"]["strata"].as_array().unwrap().len(), 3);
}

#[test]
fn errors_exit_one_with_a_report() {
    let (code, r) = report(&["classify", "/no/such/file.graph"]);
    assert_eq!(code, 1);
    assert_eq!(r["status"], "error");
    assert!(r["error"].as_str().unwrap().contains("reading"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.graph");
    std::fs::write(&bad, "L: x1\nR: y1\nE: x1-y9\n").unwrap();
    let (code, r) = report(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(r["error"].as_str().unwrap().contains("y9"));

    let (code, _) = report(&["classify", "--builtin", "nope"]);
    assert_eq!(code, 1);
    let (code, _) = report(&["contract", "--builtin", "hexagon"]);
    assert_eq!(code, 1);
    let (code, _) = report(&["enumerate", "--cmt", "9"]);
    assert_eq!(code, 1);
}

#[test]
fn quiet_prints_nothing() {
    let out = cmt(&["--quiet", "classify", "--builtin", "k22"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn reports_are_deterministic() {
    for args in [&["classify", "--builtin", "fig2"][..], &["enumerate", "--cmt", "3"], &["oracle", "--builtin", "fig1"]]
    {
        let strip = |mut v: Value| {
            v.as_object_mut().unwrap().remove("timing_ms");
            serde_json::to_string(&v).unwrap()
        };
        assert_eq!(strip(report(args).1), strip(report(args).1));
    }
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn cwfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwfkit")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = cwfkit(&all);
    let report = serde_json::from_slice(&out.stdout).expect("json report");
    (out.status.code().expect("exit code"), report)
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

fn assert_report_shape(report: &Value) {
    let verdict = report["verdict"].as_str().unwrap();
    let findings = report["findings"].as_array().unwrap();
    assert_eq!(verdict == "valid", findings.is_empty(), "{report}");
    for f in findings {
        for key in ["law", "location", "witness"] {
            assert!(f[key].is_string(), "{f}");
        }
    }
}

#[test]
fn valid_category_exits_zero() {
    let (code, r) = run_json(&["check", "category", path(&fixture("chain2.category.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "valid");
    assert_report_shape(&r);
}

#[test]
fn law_violation_exits_one_with_findings() {
    let (code, r) = run_json(&["check", "category", path(&fixture("broken.category.json"))]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "invalid");
    assert_report_shape(&r);
    let laws: Vec<&str> = r["findings"].as_array().unwrap().iter().map(|f| f["law"].as_str().unwrap()).collect();
    assert!(laws.contains(&"left-identity"), "{laws:?}");
}

#[test]
fn malformed_input_exits_two() {
    let (code, r) = run_json(&["check", "category", path(&fixture("truncated.category.json"))]);
    assert_eq!(code, 2);
    assert_eq!(r["verdict"], "error");
    assert_report_shape(&r);
    let (code, _) = run_json(&["check", "cwf", path(&fixture("chain2.category.json"))]);
    assert_eq!(code, 2);
    let (code, _) = run_json(&["check", "category", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
    let (code, _) = run_json(&["check", "no-such-kind", path(&fixture("chain2.category.json"))]);
    assert_eq!(code, 2);
}

#[test]
fn bad_projection_is_reported() {
    let (code, r) = run_json(&["check", "cwf", path(&fixture("bad-projection.cwf.json"))]);
    assert_eq!(code, 1);
    assert_eq!(r["findings"][0]["law"], "projection-endpoints");
    assert_eq!(r["findings"][0]["location"], "(Γ, A) = (0, 0)");
}

#[test]
fn every_fixture_of_a_known_kind_checks() {
    for (kind, file) in [
        ("cwf", "interval.cwf.json"),
        ("cwf", "three-iso.cwf.json"),
        ("split-typecat", "interval.sty.json"),
        ("rep-map", "interval.rep-map.json"),
        ("rep-map", "iso-pair.rep-map.json"),
        ("rel-universe", "parallel.universe.json"),
        ("rel-universe", "three-iso.universe.json"),
        ("square", "parallel.square.json"),
        ("square", "three-iso.square.json"),
        ("category", "three-iso.category.json"),
    ] {
        let (code, r) = run_json(&["check", kind, path(&fixture(file))]);
        assert_eq!(code, 0, "{file}: {r}");
    }
}

#[test]
fn sty_to_cwf_round_trip_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cwf.json");
    let (code, r) = run_json(&["convert", "sty-to-cwf", path(&fixture("interval.sty.json")), path(&out), "--roundtrip"]);
    assert_eq!(code, 0, "{r}");
    assert!(r["notes"].as_array().unwrap().iter().any(|n| n == "round trip: exact"));
    let (code, _) = run_json(&["check", "cwf", path(&out)]);
    assert_eq!(code, 0);
}

#[test]
fn cwf_to_sty_round_trip_is_iso_on_a_non_gaunt_base() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sty.json");
    let (code, r) = run_json(&["convert", "cwf-to-sty", path(&fixture("three-iso.cwf.json")), path(&out), "--roundtrip"]);
    assert_eq!(code, 0, "{r}");
    let notes = r["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n == "round trip: iso" || n == "round trip: exact"), "{r}");
    let (code, _) = run_json(&["check", "split-typecat", path(&out)]);
    assert_eq!(code, 0);
}

#[test]
fn relu_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    let w = dir.path().join("w.json");
    let (code, _) = run_json(&["convert", "cwf-to-relu", path(&fixture("interval.cwf.json")), path(&u), "--roundtrip"]);
    assert_eq!(code, 0);
    let (code, r) = run_json(&["convert", "relu-to-cwf", path(&u), path(&w), "--roundtrip"]);
    assert_eq!(code, 0);
    assert!(r["notes"].as_array().unwrap().iter().any(|n| n == "round trip: exact"));
    let original = std::fs::read_to_string(fixture("interval.cwf.json")).unwrap();
    assert_eq!(std::fs::read_to_string(&w).unwrap(), original);
}

#[test]
fn rep_to_cwf_needs_a_gaunt_base() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let (code, r) = run_json(&["convert", "rep-to-cwf-gaunt", path(&fixture("iso-pair.rep-map.json")), path(&out)]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "error");
    assert!(r["findings"][0]["clause"].as_str().unwrap().contains("base not gaunt"));
    assert!(!out.exists());

    let (code, _) = run_json(&["convert", "rep-to-cwf-gaunt", path(&fixture("interval.rep-map.json")), path(&out), "--roundtrip"]);
    assert_eq!(code, 0);
    assert!(out.exists());
}

#[test]
fn transfer_with_swapped_alpha_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("u.json");
    let (code, r) = run_json(&[
        "transfer",
        path(&fixture("parallel-swapped-alpha.square.json")),
        path(&fixture("parallel.universe.json")),
        path(&out),
    ]);
    assert_eq!(code, 1);
    assert!(r["findings"][0]["clause"].as_str().unwrap().contains("α not natural at arrow 2"), "{r}");
    assert!(!out.exists());
}

#[test]
fn transfer_along_identity_and_skeleton() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("same.json");
    let (code, _) = run_json(&[
        "transfer",
        path(&fixture("parallel.square.json")),
        path(&fixture("parallel.universe.json")),
        path(&out),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        std::fs::read_to_string(fixture("parallel.universe.json")).unwrap()
    );

    let out = dir.path().join("skel.json");
    let (code, r) = run_json(&[
        "transfer",
        path(&fixture("three-iso.square.json")),
        path(&fixture("three-iso.universe.json")),
        path(&out),
    ]);
    assert_eq!(code, 0, "{r}");
    let (code, _) = run_json(&["check", "rel-universe", path(&out)]);
    assert_eq!(code, 0);
    let moved: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(moved["base_category"]["objects"], 2);
}

#[test]
fn mismatched_square_and_universe_are_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = run_json(&[
        "transfer",
        path(&fixture("parallel.square.json")),
        path(&fixture("three-iso.universe.json")),
        path(&dir.path().join("x.json")),
    ]);
    assert_eq!(code, 2);
}

#[test]
fn skeletonize_writes_checkable_data() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sk.json");
    let (code, r) = run_json(&["skeletonize", path(&fixture("three-iso.category.json")), path(&out)]);
    assert_eq!(code, 0);
    assert!(r["notes"].as_array().unwrap().iter().any(|n| n == "3 objects collapse to 2"));
    let (code, _) = run_json(&["check", "skeleton", path(&out)]);
    assert_eq!(code, 0);
}

#[test]
fn catalog_entries() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.json");
    for args in [
        vec!["catalog", "chain", "3"],
        vec!["catalog", "iso-pair"],
        vec!["catalog", "dag", path(&fixture("dag.json"))],
        vec!["catalog", "monoid", path(&fixture("z2.monoid.json"))],
    ] {
        let mut args = args.clone();
        args.push(path(&out));
        let (code, r) = run_json(&args);
        assert_eq!(code, 0, "{args:?}: {r}");
        let (code, _) = run_json(&["check", "category", path(&out)]);
        assert_eq!(code, 0);
    }
    let (code, _) = run_json(&["catalog", "dag", path(&fixture("cyclic.dag.json")), path(&out)]);
    assert_eq!(code, 2);
    let (code, _) = run_json(&["catalog", "chain", "x", path(&out)]);
    assert_eq!(code, 2);
}

#[test]
fn text_output_leads_with_the_verdict() {
    let out = cwfkit(&["check", "category", path(&fixture("broken.category.json"))]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("invalid: check category"));
    assert!(text.contains("category: left identity fails at arrow 0"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cwfkit(&["convert", "sideways", "a", "b"]).status.code(), Some(2));
    assert_eq!(cwfkit(&[]).status.code(), Some(2));
}

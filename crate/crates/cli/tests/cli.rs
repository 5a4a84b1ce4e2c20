use std::process::{Command, Output};

use serde_json::Value;

fn upfam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upfam"))
        .args(args)
        .env_remove("UPFAM_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn enumerate_counts() {
    for (carrier, space, want) in [
        ("chain:3", "lambda", "4"),
        ("chain:4", "lambda", "12"),
        ("chain:5", "upsilon", "7579"),
        ("vee", "n2", "11"),
    ] {
        let o = upfam(&["enumerate", "--carrier", carrier, "--space", space, "--count-only"]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).trim(), want, "{carrier} {space}");
    }
}

#[test]
fn enumerate_writes_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fams.jsonl");
    let o = upfam(&["enumerate", "--carrier", "chain:2", "--space", "upsilon", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["[[0]]", "[[0],[1]]", "[[1]]", "[[0,1]]"]);
}

#[test]
fn check_reports_witnesses() {
    let o = upfam(&["check", "--carrier", "vee", "--space", "n2", "--property", "commutative"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);

    let o = upfam(&["check", "--carrier", "chain:2", "--space", "upsilon", "--property", "lattice"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], true);

    let o = upfam(&["check", "--carrier", "chain:3", "--space", "lambda", "--property", "lattice"]);
    assert_eq!(code(&o), 1);

    let o = upfam(&["check", "--carrier", "chain:3", "--space", "phi", "--property", "clifford:1,2"]);
    assert_eq!(code(&o), 0);

    let o = upfam(&["check", "--carrier", "vee", "--space", "upsilon", "--property", "clifford:1,2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn bad_input_exits_two() {
    for args in [
        vec!["check", "--carrier", "vee", "--space", "n2", "--property", "shiny"],
        vec!["enumerate", "--carrier", "pentagon", "--space", "phi"],
        vec!["enumerate", "--carrier", "chain:3", "--space", "omega"],
        vec!["enumerate", "--carrier", "chain:6", "--space", "upsilon", "--count-only"],
        vec!["verify", "--theorem", "9.9"],
        vec!["product", "--carrier", "vee", "--a", "[[5]]", "--b", "[[0]]"],
        vec!["frobnicate"],
    ] {
        assert_eq!(code(&upfam(&args)), 2, "{args:?}");
    }
}

#[test]
fn product_inline_and_from_files() {
    let o = upfam(&["product", "--carrier", "vee", "--a", "[[1,2]]", "--b", "[[1,2]]"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "[[0,1,2]]");

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let carrier = dir.path().join("vee.json");
    std::fs::write(&a, "[[0,1],[0,2],[1,2]]").unwrap();
    std::fs::write(&carrier, r#"{"order":3,"table":[[0,0,0],[0,1,0],[0,0,2]]}"#).unwrap();
    let (a, carrier) = (a.to_str().unwrap(), carrier.to_str().unwrap());
    let o = upfam(&["product", "--carrier", carrier, "--a", a, "--b", a]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "[[0]]");
}

#[test]
fn hasse_outputs() {
    let o = upfam(&["hasse", "--carrier", "chain:2", "--space", "upsilon", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);

    let o = upfam(&["hasse", "--carrier", "chain:4", "--space", "lambda", "--format", "dot"]);
    assert_eq!(code(&o), 0);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph hasse {") && dot.trim_end().ends_with('}'));
    let v: Value = serde_json::from_str(&stdout(&upfam(&[
        "hasse", "--carrier", "chain:4", "--space", "lambda", "--format", "json",
    ])))
    .unwrap();
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(dot.matches(" -> ").count(), edges.len());
    for e in edges {
        assert!(dot.contains(&format!("n{} -> n{};", e[0], e[1])));
    }
    assert!(dot.contains("label=\"Δ_3\"") && dot.contains("label=\"□_0\""));

    let o = upfam(&["hasse", "--carrier", "vee", "--space", "upsilon"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a semilattice"));
}

#[test]
fn verify_and_report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = upfam(&["verify", "--theorem", "all", "--max-order", "2", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["success"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 12);
    let report: upfam::harness::AggregateReport = serde_json::from_value(v).unwrap();
    assert!(report.reports.iter().all(|r| r.verified()));

    let o = upfam(&["verify", "--theorem", "4.3"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "verified");
}

#[test]
fn cap_override_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_upfam"))
        .args(["enumerate", "--carrier", "chain:4", "--space", "lambda", "--count-only"])
        .env("UPFAM_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_upfam"))
        .args(["verify", "--theorem", "2.6"])
        .env("UPFAM_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn catalog_lists_names() {
    let o = upfam(&["catalog"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for name in ["chain:n", "leftzero:n", "rightzero:n", "vee", "bush:", "Δ_2", "□_3", "⟨0⟩"] {
        assert!(text.contains(name), "{name}");
    }
}

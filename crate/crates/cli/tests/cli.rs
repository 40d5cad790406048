use std::path::PathBuf;
use std::process::{Command, Output};

fn chiforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chiforge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalog(n: usize) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../catalogs/graphs_n{n}.g6"));
    format!("file:{}", p.display())
}

#[test]
fn colours_c5() {
    let o = chiforge(&["color", "--graph", "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chi=3\n"));
}

#[test]
fn expanded_c5_needs_five_colours() {
    let o = chiforge(&["expand", "--base", "C5", "--weights", "2,2,2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let g6 = stdout(&o).trim().to_string();
    let o = chiforge(&["color", "--graph", &g6]);
    assert!(stdout(&o).starts_with("chi=5\n"));
    // same answer as the weighted route on C5 itself
    let o = chiforge(&["color", "--graph", "Dhc", "--weights", "2,2,2,2,2"]);
    assert!(stdout(&o).starts_with("chi_q=5\n"));
}

#[test]
fn color_json_has_valid_certificate_shape() {
    let o = chiforge(&["--json", "color", "--graph", "Dhc"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chi"], 3);
    assert_eq!(v["certificate"]["colours"].as_array().unwrap().len(), 5);
}

#[test]
fn detect_reports_witness_or_free() {
    assert_eq!(stdout(&chiforge(&["detect", "--graph", "Dhc", "--pattern", "C4"])).trim(), "free");
    assert!(stdout(&chiforge(&["detect", "--graph", "Dhc", "--pattern", "P4"])).starts_with("witness="));
}

#[test]
fn critical_c5() {
    let o = chiforge(&["critical", "--graph", "Dhc"]);
    assert_eq!(stdout(&o).trim(), "critical=true chi=3 deletion_chi=2,2,2,2,2");
}

#[test]
fn decompose_emits_json() {
    let o = chiforge(&["--json", "decompose", "--graph", "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["parts"].as_array().unwrap().len(), 1);
    assert_eq!(v["parts"][0]["quotient"], "Dhc");
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(chiforge(&["color", "--graph", "D?"]).status.code(), Some(2));
    assert_eq!(chiforge(&["detect", "--graph", "Dhc", "--pattern", "P9"]).status.code(), Some(2));
    assert_eq!(chiforge(&["color", "--graph", "Dhc", "--weights", "1,2"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(chiforge(&["bogus"]).status.code(), Some(1));
    assert_eq!(chiforge(&["color"]).status.code(), Some(1));
    assert_eq!(chiforge(&["color", "--graph", "Dhc", "--nope"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(chiforge(&["verify", "--theorem", "no-such", "--source", "builtin:3", "--out", out]).status.code(), Some(1));
}

#[test]
fn budget_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = chiforge(&["verify", "--theorem", "p5c4-bound", "--source", "builtin:8", "--out", out]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_writes_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = chiforge(&["verify", "--theorem", "p5c4-bound", "--source", "builtin:6", "--out", out]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let first = std::fs::read(dir.path().join("p5c4-bound.json")).unwrap();
    let csv = std::fs::read_to_string(dir.path().join("p5c4-bound.csv")).unwrap();
    assert!(csv.starts_with("omega,max_chi,witness_graph6\n1,1,"));
    assert!(csv.contains("\n2,3,"));
    assert!(csv.contains("\n3,4,"));
    chiforge(&["verify", "--theorem", "p5c4-bound", "--source", "builtin:6", "--out", out]);
    assert_eq!(first, std::fs::read(dir.path().join("p5c4-bound.json")).unwrap());
}

#[test]
fn verify_superadditivity_and_critical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let src = catalog(6);
    let o = chiforge(&[
        "--json", "verify", "--theorem", "superadditivity", "--class", "3K1", "--omega1", "2", "--omega2", "2",
        "--source", &catalog(5), "--source", &src, "--out", out,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let o = chiforge(&["verify", "--theorem", "critical-p5c4", "--source", "builtin:5", "--out", out]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn survey_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = chiforge(&["survey", "--source", &catalog(5), "--class", "P5-C4", "--out", out]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(dir.path().join("survey-P5-C4.csv")).unwrap();
    assert!(csv.contains("\n2,3,"));
}

#[test]
fn decompose_rejects_forbidden_input() {
    let g6 = chiforge_core::write_graph6(chiforge_core::patterns::q_p4());
    let o = chiforge(&["decompose", "--graph", &g6]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Q{P4}"));
}

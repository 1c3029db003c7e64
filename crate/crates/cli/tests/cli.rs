//! End-to-end runs of the binary on the bundled fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn brauerkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauerkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = brauerkit(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("brauerkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn validate_reports_gentleness() {
    let (code, out, _) = run(&["validate", &path("F1.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("2 vertices, 1 arrows"), "{out}");
    assert!(out.contains("gentle: true"), "{out}");
    let (code, out, _) = run(&["validate", &path("F4.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("special biserial: true"), "{out}");
    assert!(out.contains("gentle: false"), "{out}");
}

#[test]
fn malformed_input_is_a_parse_error_with_a_line_number() {
    let bad = scratch("bad.txt", "vertices: 1 2\narrow: a 1\n");
    let (code, _, err) = run(&["validate", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = run(&["validate", "/nonexistent/input.txt"]);
    assert_eq!(code, 1);
}

#[test]
fn trivext_builds_the_expected_graphs() {
    let (code, out, _) = run(&["trivext", &path("F2.txt")]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.matches("bedge:").count(), 3, "{out}");
    assert!(out.contains("C + C^T: ok"), "{out}");
    let (code, out, _) = run(&["classify", &path("F3.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("class: Line"), "{out}");
}

#[test]
fn trivext_writes_dot() {
    let dot = std::env::temp_dir().join(format!("brauerkit-gamma-{}.dot", std::process::id()));
    let (code, _, _) = run(&["trivext", &path("F1.txt"), "--dot", &dot.display().to_string()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));
}

#[test]
fn self_folded_input_is_unsupported() {
    let (code, _, err) = run(&["trivext", &path("F6.txt")]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn classify_graph_files() {
    let (code, out, _) = run(&["classify", &path("line3.brauer")]);
    assert_eq!(code, 0);
    assert!(out.contains("class: Line"), "{out}");
    assert!(out.contains("τ-tilting finite: true"), "{out}");
    assert!(out.contains("predicted count: 20"), "{out}");
    let (_, out, _) = run(&["classify", &path("cycle4.brauer")]);
    assert!(out.contains("τ-tilting finite: false"), "{out}");
    let (_, out, _) = run(&["classify", &path("triangle_pendant.brauer")]);
    assert!(out.contains("τ-tilting finite: true"), "{out}");
    assert!(out.contains("predicted count: unknown"), "{out}");
}

fn count_of(out: &str) -> u64 {
    let v: serde_json::Value = serde_json::from_str(out.trim()).expect("count is JSON");
    v["count"].as_u64().expect("count field")
}

#[test]
fn stt_counts() {
    let (code, out, err) = run(&["stt", "count", &path("F4.txt")]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(count_of(&out), 6);
    let (code, out, _) = run(&["stt", "count", "--trivext", &path("F5.txt")]);
    assert_eq!(code, 0);
    assert_eq!(count_of(&out), 32);
    let (code, out, _) = run(&["stt", "count", "--trivext", &path("F2.txt")]);
    assert_eq!(code, 0);
    assert_eq!(count_of(&out), 20);
    let (code, out, _) = run(&["stt", "count", &path("star2_m2.brauer")]);
    assert_eq!(code, 0);
    assert_eq!(count_of(&out), 6);
}

#[test]
fn stt_on_an_even_cycle_is_infinite() {
    let (code, _, err) = run(&["stt", "count", &path("cycle4.brauer")]);
    assert_eq!(code, 4, "{err}");
    assert!(err.contains("band"), "{err}");
}

#[test]
fn stt_list_numbers_every_pair() {
    let (code, out, _) = run(&["stt", "list", &path("F1.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5, "{out}");
}

#[test]
fn hasse_writes_dot() {
    let dot = std::env::temp_dir().join(format!("brauerkit-hasse-{}.dot", std::process::id()));
    let (code, out, _) = run(&["stt", "hasse", &path("line3.brauer"), "--dot", &dot.display().to_string()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("nodes: 20"), "{out}");
    assert!(out.contains("3-regular: true"), "{out}");
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"), "{text}");
    assert_eq!(text.matches("->").count(), 30);
}

#[test]
fn json_report_carries_the_input_digest() {
    let (code, out, _) = run(&["--json", "stt", "count", &path("F1.txt")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "stt");
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    assert_eq!(v["outcome"]["count"]["count"], 5);
    let (_, again, _) = run(&["--json", "stt", "count", &path("F1.txt")]);
    let w: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(v["input_digest"], w["input_digest"]);
}

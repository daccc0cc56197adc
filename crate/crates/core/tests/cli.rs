use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fqstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqstab")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FIVE: &str = r#"{"field": {"p": 2}, "n": 5, "construction": "circulant", "first_row": [0, 0, 1, 1, 0]}"#;

#[test]
fn distance_of_five_qubit_code() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "five.code.json", FIVE);
    let out = fqstab(&["distance", "--code", s(&code)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("d=3\n"), "{text}");
    assert!(text.contains("pure=true\n"));
    assert!(text.contains("status=complete\n"));
}

#[test]
fn early_exit_reports_failure() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "five.code.json", FIVE);
    let out = fqstab(&["distance", "--code", s(&code), "--early-exit", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("status=lower-bound-failed"));
}

#[test]
fn knill_laflamme_pass_and_fail() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "five.code.json", FIVE);
    assert_eq!(fqstab(&["verify-kl", "--code", s(&code), "--t", "1"]).status.code(), Some(0));
    assert_eq!(fqstab(&["verify-kl", "--code", s(&code), "--t", "2"]).status.code(), Some(1));
}

#[test]
fn odd_diagonal_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"field": {"p": 2}, "n": 3, "construction": "circulant", "first_row": [1, 1, 1]}"#);
    let out = fqstab(&["build", "--spec", s(&bad), "--out", s(&dir.path().join("o.json"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn unknown_flag_and_missing_file() {
    assert_eq!(fqstab(&["distance", "--bogus"]).status.code(), Some(2));
    assert_eq!(fqstab(&["report", "--code", "/nonexistent/x.json"]).status.code(), Some(2));
}

#[test]
fn tiny_budget_exits_three() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "five.code.json", FIVE);
    assert_eq!(fqstab(&["distance", "--code", s(&code), "--budget", "1"]).status.code(), Some(3));
}

#[test]
fn build_then_report() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "five.json", FIVE);
    let out = dir.path().join("built.code.json");
    assert_eq!(fqstab(&["build", "--spec", s(&spec), "--out", s(&out)]).status.code(), Some(0));
    let built: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(built["k"], 1);
    let rep = fqstab(&["report", "--code", s(&out)]);
    assert_eq!(stdout(&rep), "n=5\nk=1\n");
}

#[test]
fn sample_then_block_code() {
    let dir = TempDir::new().unwrap();
    let r = dir.path().join("r.fqm");
    let out = fqstab(&["sample-good", "--n", "8", "--alpha", "1/4", "--seed", "2024", "--max-tries", "100000", "--out", s(&r)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("found=true"));
    let side: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.fqm.json")).unwrap()).unwrap();
    assert_eq!(side["seed"], 2024);
    assert_eq!(side["alpha"], "1/4");

    let code = dir.path().join("block.code.json");
    let out = fqstab(&["block-code", "--R", s(&r), "--alpha", "1/4", "--out", s(&code)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n=16\nk=1\ngood=true\nguaranteed_d=2\n"));
    let dist = fqstab(&["distance", "--code", s(&code), "--pure"]);
    assert_eq!(dist.status.code(), Some(0));
}

#[test]
fn block_code_flags_bad_matrix() {
    let dir = TempDir::new().unwrap();
    let r = write(&dir, "zero.fqm", "2 1 3 3\n0 0 0\n0 0 0\n0 0 0\n");
    let out = fqstab(&["block-code", "--R", s(&r), "--alpha", "1/3", "--out", s(&dir.path().join("b.json"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("good=false"));
    assert!(dir.path().join("b.json").exists());
}

#[test]
fn puncture_and_report() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "five.code.json", FIVE);
    let out = dir.path().join("p.code.json");
    let run = fqstab(&["puncture", "--code", s(&code), "--coord", "2", "--out", s(&out)]);
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(stdout(&fqstab(&["report", "--code", s(&out)])), "n=4\nk=2\n");
    let dist = stdout(&fqstab(&["distance", "--code", s(&out), "--pure"]));
    assert!(dist.contains("d=2\n"), "{dist}");
    assert_eq!(fqstab(&["puncture", "--code", s(&code), "--coord", "5", "--out", s(&out)]).status.code(), Some(2));
}

#[test]
fn codeword_dump() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "five.code.json", FIVE);
    let out = dir.path().join("words.txt");
    let run = fqstab(&["codewords", "--code", s(&code), "--out", s(&out)]);
    assert_eq!(stdout(&run), "codewords=2\n");
    let text = std::fs::read_to_string(&out).unwrap();
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    for block in blocks {
        let mut lines = block.lines();
        assert!(lines.next().unwrap().starts_with("2 1 5 1 "));
        let norm: f64 = lines
            .map(|l| {
                let v: Vec<f64> = l.split_whitespace().skip(1).map(|t| t.parse().unwrap()).collect();
                v[0] * v[0] + v[1] * v[1]
            })
            .sum();
        assert!((norm - 1.0).abs() < 1e-9);
    }
}

#[test]
fn circulant_search_finds_five_qubit_code() {
    let out = fqstab(&["search-circulant", "--n", "5", "--p", "2", "--min-d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("00110, 3, true")), "{text}");
}

use std::process::{Command, Output};

use zassenhaus_core::{ClassSizeTable, DivisibilityGraph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zassenhaus"))
        .args(args)
        .env_remove("ZASSENHAUS_ALLOW_SZ32")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn classes_sz8_json() {
    let out = run(&["classes", "sz", "--q", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["order"], 29120);
    assert_eq!(value["family"], "sz");
    assert_eq!(value["entries"].as_array().unwrap().len(), 6);
    let table = ClassSizeTable::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(table, zassenhaus_core::sz_table(8).unwrap());
}

#[test]
fn classes_psl2_7_table() {
    let out = run(&["classes", "psl2", "--q", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<(u64, u64)> = text
        .lines()
        .skip(2)
        .map(|l| {
            let cols: Vec<&str> = l.split('|').map(str::trim).collect();
            (cols[0].parse().unwrap(), cols[1].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows.iter().map(|(s, m)| s * m).sum::<u64>(), 168);
}

#[test]
fn p_power_syntax_matches_literal() {
    let a = run(&["classes", "psl2", "--q", "3^2", "--format", "json"]);
    let b = run(&["classes", "psl2", "--q", "9", "--format", "json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn invalid_q_is_a_usage_error() {
    let out = run(&["classes", "psl2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("q must exceed 3"));
    let out = run(&["classes", "sz", "--q", "16"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("m odd"));
    let out = run(&["classes", "psl2", "--q", "six"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn divgraph_outputs() {
    let out = run(&["divgraph", "--family", "sz", "--q", "8", "--format", "shape"]);
    assert_eq!(stdout(&out).trim(), "K2+3K1");
    let out = run(&["divgraph", "--sizes", "2,4,8", "--format", "shape"]);
    assert_eq!(stdout(&out).trim(), "K3");
    let out = run(&["divgraph", "--family", "psl2", "--q", "9", "--format", "dot"]);
    assert!(stdout(&out).lines().any(|l| l.trim() == "45 -- 90;"));
    let out = run(&["divgraph", "--family", "psl2", "--q", "7", "--format", "json"]);
    assert_eq!(stdout(&out).trim(), r#"{"vertices":[21,24,42,56],"edges":[[21,42]]}"#);
    let graph = DivisibilityGraph::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(graph.edges(), &[(21, 42)]);
}

#[test]
fn divgraph_usage_errors() {
    assert_eq!(run(&["divgraph", "--format", "json"]).status.code(), Some(2));
    assert_eq!(run(&["divgraph", "--sizes", "2,x"]).status.code(), Some(2));
    assert_eq!(
        run(&["divgraph", "--family", "sz", "--q", "8", "--format", "svg"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_psl2_brute_force() {
    let out = run(&["verify", "--family", "psl2", "--q", "7", "--checks", "brute-force"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS brute-force"));
    assert!(text.contains("closed form: {1, 21, 24, 24, 42, 56}"));
    assert!(text.contains("brute force: {1, 21, 24, 24, 42, 56}"));
}

#[test]
fn verify_sz8_ti_lemma() {
    let out = run(&["verify", "--family", "sz", "--q", "8", "--checks", "ti-lemma"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["A0", "A1", "A2", "K"] {
        assert!(text.contains(&format!("PASS ti-lemma {name}:")), "{text}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_gates_large_q() {
    let out = run(&["verify", "--family", "sz", "--q", "8192", "--checks", "brute-force"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("brute force unsupported for q=8192"));
    let out = run(&["verify", "--family", "sz", "--q", "32", "--checks", "centralizers"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_checks_psl2_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let fresh = run(&["verify", "--family", "psl2", "--q", "11"]);
    let first = run(&["verify", "--family", "psl2", "--q", "11", "--cache", cache]);
    let cached = run(&["verify", "--family", "psl2", "--q", "11", "--cache", cache]);
    assert!(dir.path().join("psl2-11.bin").exists());
    for out in [&fresh, &first, &cached] {
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(stdout(&fresh), stdout(&cached));
    assert_eq!(stdout(&first), stdout(&cached));
    assert_eq!(stdout(&fresh).matches("PASS").count(), 6);
}

#[test]
fn verify_with_corrupt_cache_fails() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("psl2-5.bin"), b"ZGRP\x01\x00garbage").unwrap();
    let out = run(&[
        "verify",
        "--family",
        "psl2",
        "--q",
        "5",
        "--checks",
        "brute-force",
        "--cache",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_psl2_small() {
    let out = run(&["sweep", "psl2", "4", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 7 + 1);
    assert_eq!(
        text.lines().last().unwrap(),
        "summary: shapes 3K1 (q=4,5,8), K2+2K1 (q=7,9,11,13)"
    );
    assert!(text.contains("\n9 | 4 | 360 | 4 | K2+2K1\n"));
}

#[test]
fn sweep_sz_and_empty_range() {
    let out = run(&["sweep", "sz", "8", "8192"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).filter(|l| !l.starts_with("summary")).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.ends_with("| K2+3K1")));
    let out = run(&["sweep", "psl2", "5", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().last().unwrap(), "summary: no valid q");
}

#[test]
fn output_is_deterministic() {
    let args = ["sweep", "psl2", "4", "200"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

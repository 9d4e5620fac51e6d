// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn grover_dfs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grover-dfs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_to(dir: &Path, file: &str, args: &[&str]) -> (Output, String) {
    let path = dir.join(file);
    let mut full = args.to_vec();
    full.extend(["--out", path.to_str().unwrap()]);
    let out = grover_dfs(&full);
    let text = fs::read_to_string(&path).unwrap_or_default();
    (out, text)
}

#[test]
fn fig5_table_layout() {
    let dir = tempfile::tempdir().unwrap();
    let (out, csv) = run_to(dir.path(), "fig5.csv", &["run", "fig5", "--m-max", "20"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "m,exact_l,floor_l,hamming_l");
    assert_eq!(lines.len(), 11);
    let row8: Vec<&str> = lines[4].split(',').collect();
    assert_eq!(row8[0], "8");
    assert!((row8[1].parse::<f64>().unwrap() - 6.129).abs() < 1e-3);
    assert_eq!(row8[2], "6");
    assert!((row8[3].parse::<f64>().unwrap() - 3.356).abs() < 1e-3);
    assert!(dir.path().join("fig5.json").exists());
}

#[test]
fn fig6_three_series_with_summary() {
    let dir = tempfile::tempdir().unwrap();
    let (out, csv) = run_to(dir.path(), "fig6.csv", &["run", "fig6", "--grid-points", "301"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "t,ideal-6q,detuned-8q,encoded-8q");
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 301);
    assert!(rows
        .iter()
        .flat_map(|r| &r[1..])
        .all(|p| (0.0..=1.0 + 1e-9).contains(p)));

    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("fig6.json")).unwrap()).unwrap();
    assert_eq!(summary["config"]["seed"], 42);
    assert_eq!(summary["config"]["detunings"][1], 1.1436);
    assert_eq!(summary["summary"]["peaks"].as_array().unwrap().len(), 3);
}

#[test]
fn fig2_json_output() {
    let dir = tempfile::tempdir().unwrap();
    let (out, text) = run_to(dir.path(), "fig2.json", &["run", "fig2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["config"]["scenario"], "fig2");
    let p = v["summary"]["values"]["final_probability_x0"].as_f64().unwrap();
    assert!((p - 0.78125).abs() < 1e-12);
    assert_eq!(v["series"].as_array().unwrap().len(), 6);
}

#[test]
fn csv_to_stdout_without_out() {
    let out = grover_dfs(&["run", "fig5", "--m-max", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("m,exact_l,floor_l,hamming_l\n2,"));
}

#[test]
fn seeded_sweeps_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "run",
        "fig7",
        "--m",
        "4",
        "--trials",
        "5",
        "--sigma-grid",
        "0:0.4:0.2",
        "--seed",
        "9",
    ];
    let (_, a) = run_to(dir.path(), "a.csv", &args);
    let (_, b) = run_to(dir.path(), "b.csv", &args);
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(
        lines[0],
        "sigma,encoded_mean,encoded_se,unencoded_mean,unencoded_se,trials,seed"
    );
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.ends_with(",5,9")));
    let mut other = args.to_vec();
    other[9] = "10";
    let (_, c) = run_to(dir.path(), "c.csv", &other);
    assert_ne!(a, c);
}

#[test]
fn configuration_errors_exit_with_2() {
    for args in [
        vec!["run", "fig9"],
        vec!["run", "fig7", "--trials", "many"],
        vec!["run", "fig6", "--m", "7"],
        vec!["run", "fig4", "--detunings", "0.1,0.2"],
        vec!["run", "fig7", "--sigma-grid", "1:0:0.1"],
        vec!["frobnicate"],
    ] {
        let out = grover_dfs(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unwritable_output_exits_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let out = grover_dfs(&["run", "fig5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn negative_detunings_are_accepted() {
    let out = grover_dfs(&["run", "fig4", "--detunings", "-0.5,0.3,0.2", "--grid-points", "11"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 12);
}

//! End-to-end tests of the `distmat` binary: output formats, exit codes, and
//! reproducibility flags.

use std::path::PathBuf;
use std::process::{Command, Output};

fn distmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distmat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_path_edge_list() {
    let out = distmat(&["gen", "--family", "path", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5 4\n0 1\n1 2\n2 3\n3 4\n");
}

#[test]
fn solve_p3_reports_exact_solution() {
    let dir = std::env::temp_dir().join("distmat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("p3.txt");
    let gen = distmat(&["gen", "--family", "path", "--n", "3"]);
    std::fs::write(&path, stdout(&gen)).unwrap();

    let out = distmat(&["solve", "--graph", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["consistent"], serde_json::json!(true));
    assert_eq!(value["rank_D"], serde_json::json!(3));
    assert_eq!(value["solution"], serde_json::json!(["1/2", "0", "1/2"]));
}

#[test]
fn asymptotics_prints_constants() {
    let out = distmat(&["asymptotics", "--path-limit"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0.98261"), "missing limit in {text}");
    assert!(text.contains("1.19967"), "missing c in {text}");

    let json = distmat(&["asymptotics", "--n", "50", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert!((value["c"].as_f64().unwrap() - 1.19967864).abs() < 1e-6);
    assert!((value["limit_constant"].as_f64().unwrap() - 0.98261897).abs() < 1e-6);
    assert!((value["sun_limit"].as_f64().unwrap() - 0.97324899).abs() < 1e-6);
    assert!(value["theta"].as_f64().unwrap() > 0.0);
}

#[test]
fn verify_passes_on_graphs() {
    let out = distmat(&["verify", "--family", "complete", "--n", "12"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));

    let json = distmat(&["verify", "--family", "sun", "--hub", "9", "--json"]);
    assert!(json.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["passes"], serde_json::json!(true));
    assert!(value["summary"]["lambda2"].as_f64().unwrap() < 0.0);
}

#[test]
fn spectrum_json_schema() {
    let out = distmat(&["spectrum", "--family", "star", "--leaves", "7", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in [
        "n",
        "lambda1",
        "lambda2",
        "min_entry",
        "alignment",
        "residual",
        "iterations",
    ] {
        assert!(value.get(key).is_some(), "missing {key} in {text}");
    }
    // declared field order survives serialization
    assert!(text.find("\"n\"").unwrap() < text.find("\"lambda1\"").unwrap());
    assert!(text.find("\"lambda1\"").unwrap() < text.find("\"lambda2\"").unwrap());
}

#[test]
fn distmat_table_output() {
    let out = distmat(&["distmat", "--family", "path", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n0 1 2\n1 0 1\n2 1 0\n");
}

#[test]
fn mc_is_reproducible_and_threads_invariant() {
    let args = [
        "mc", "--n", "16", "--p", "0.5", "--trials", "15", "--seed", "11", "--json",
    ];
    let a = distmat(&args);
    let b = distmat(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));

    let mut with_threads: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    with_threads.extend(["--threads".to_string(), "2".to_string()]);
    let c = Command::new(env!("CARGO_BIN_EXE_distmat"))
        .args(&with_threads)
        .output()
        .unwrap();
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vc: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(va["cells"], vc["cells"]);
}

#[test]
fn scan_csv_is_threads_invariant() {
    let a = distmat(&["scan", "--family", "broom", "--n", "14", "--threads", "1"]);
    let b = distmat(&["scan", "--family", "broom", "--n", "14", "--threads", "2"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("family,params,n,lambda1,lambda2,"));
}

#[test]
fn exit_codes() {
    // domain error: P_1 has no distance matrix
    let out = distmat(&["spectrum", "--family", "path", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));

    // domain error: disconnected graph file
    let dir = std::env::temp_dir().join("distmat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("disconnected.txt");
    std::fs::write(&path, "4 2\n0 1\n2 3\n").unwrap();
    let out = distmat(&["solve", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("disconnected"), "unhelpful message: {err}");

    // usage errors: missing input, conflicting inputs, unknown flag,
    // unknown family, unknown subcommand
    assert_eq!(distmat(&["spectrum"]).status.code(), Some(2));
    let conflict = distmat(&["spectrum", "--family", "path", "--n", "4", "--cluster", "3"]);
    assert_eq!(conflict.status.code(), Some(2));
    assert_eq!(
        distmat(&["gen", "--family", "path", "--n", "4", "--frobnicate"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        distmat(&["gen", "--family", "tesseract", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(distmat(&["transmogrify"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("distmat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.txt");
    let out = distmat(&[
        "gen",
        "--family",
        "complete",
        "--n",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("4 6"));
}

#[test]
fn cluster_metric_source() {
    let out = distmat(&["spectrum", "--cluster", "50", "--eps", "0.001", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["n"], serde_json::json!(51));
    // lambda1 is near sqrt(50)
    assert!((value["lambda1"].as_f64().unwrap() - 50f64.sqrt()).abs() < 0.1);
}

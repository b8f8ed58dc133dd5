use std::path::PathBuf;
use std::process::{Command, Output};

fn mvverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("mvverify-{}-{name}", std::process::id()))
}

#[test]
fn default_report_matches_golden() {
    let out = mvverify(&["check"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/default_report.json");
    assert_eq!(stdout(&out), golden);
}

#[test]
fn reports_are_reproducible() {
    let args = [
        "check",
        "--max-degree",
        "3",
        "--q-order",
        "1",
        "--seed",
        "7",
        "--format",
        "text",
    ];
    let a = mvverify(&args);
    let b = mvverify(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).ends_with("22/22 checks passed\n"));
}

#[test]
fn config_file_and_flag_precedence() {
    let cfg = temp_path("run.conf");
    let out = temp_path("report.json");
    std::fs::write(
        &cfg,
        "max_degree = 2\nq_order = 1\nframings = -1, 1\nsuites = wick, prop31\n",
    )
    .unwrap();
    let o = mvverify(&[
        "check",
        "--config",
        cfg.to_str().unwrap(),
        "--framing",
        "-3",
        "--out",
        out.to_str().unwrap(),
        "--timings",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["config"]["max_degree"], 2);
    assert_eq!(report["config"]["framings"], serde_json::json!([-3]));
    let checks = report["checks"].as_array().unwrap();
    let ids: Vec<_> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["wick", "prop31"]);
    assert!(checks
        .iter()
        .all(|c| c["millis"].is_u64() && c["status"] == "pass"));
    let _ = std::fs::remove_file(cfg);
    let _ = std::fs::remove_file(out);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        mvverify(&["check", "--suite", "nonexistent"]).status.code(),
        Some(2)
    );
    assert_eq!(
        mvverify(&["check", "--max-degree", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        mvverify(&["check", "--format", "yaml"]).status.code(),
        Some(2)
    );
}

#[test]
fn tables() {
    let o = mvverify(&["table", "characters", "--n", "2"]);
    assert_eq!(stdout(&o), "nu,[2],\"[1,1]\"\n[2],1,1\n\"[1,1]\",-1,1\n");
    let o = mvverify(&["table", "qdim", "--max-size", "0", "--format", "json"]);
    let t: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(t["rows"], serde_json::json!([["[]", "1"]]));
    let o = mvverify(&[
        "free-energy",
        "--framing",
        "-1",
        "--variant",
        "b",
        "--max-degree",
        "1",
        "--q-order",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("mu,k,genus,lambda_power,value\n[1],0,0,-1,"));
}

use std::process::{Command, Output};

use serde_json::Value;

fn so2m(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_so2m")).args(args).env_remove("SO2M_FORMAT").output().expect("spawn so2m")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = so2m(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const COMMANDS: &[&[&str]] = &[
    &["tables", "--m", "7", "--table", "1"],
    &["tables", "--m", "8", "--table", "5"],
    &["involutions", "--m", "6"],
    &["orientation", "--m", "5"],
    &["aq", "--m", "6"],
    &["cycles", "--m", "7"],
    &["automorphic", "--m", "8"],
    &["verify", "--m", "4", "--all"],
];

#[test]
fn output_is_byte_identical_across_runs() {
    for args in COMMANDS {
        for format in ["text", "json", "csv"] {
            let mut full = vec!["--format", format];
            full.extend_from_slice(args);
            let (a, b) = (so2m(&full), so2m(&full));
            assert_eq!(a.status.code(), Some(0), "{full:?}");
            assert_eq!(a.stdout, b.stdout, "{full:?}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(so2m(&["verify", "--m", "5", "--suite", "aq"]).status.code(), Some(0));
    assert_eq!(so2m(&["aq", "--m", "9", "--bound", "1"]).status.code(), Some(1));
    assert_eq!(so2m(&["tables", "--m", "7", "--table", "99"]).status.code(), Some(2));
    assert_eq!(so2m(&["tables", "--m", "6", "--table", "4"]).status.code(), Some(2));
    assert_eq!(so2m(&["tables", "--m", "7", "--table", "2"]).status.code(), Some(2));
    assert_eq!(so2m(&["aq", "--m", "5", "--bound", "0"]).status.code(), Some(2));
    assert_eq!(so2m(&["cycles", "--m", "1"]).status.code(), Some(2));
    assert_eq!(so2m(&["verify", "--m", "5"]).status.code(), Some(2));
}

#[test]
fn dimension_table_json() {
    let doc = json(&["tables", "--m", "5", "--table", "3"]);
    assert_eq!(doc["m"], 5);
    assert_eq!(doc["family"], "B");
    let rows: Vec<(String, i64, i64)> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["involution"].as_str().unwrap().to_string(),
                r["d_sigma"].as_i64().unwrap(),
                r["d_sigma_theta"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(rows, vec![("sigma_2".into(), 4, 6), ("sigma_3".into(), 8, 2)]);
}

#[test]
fn automorphic_json_lists_one_candidate() {
    for (m, id) in [(7, "sigma_4"), (8, "tauprime_1")] {
        let doc = json(&["automorphic", "--m", &m.to_string()]);
        let rows = doc["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 1, "m = {m}");
        let r = &rows[0];
        assert_eq!(r["involution"], id);
        assert_eq!(r["r_minus"], 1);
        assert_eq!(r["r_plus"], 1);
        let text = so2m(&["--format", "csv", "automorphic", "--m", &m.to_string()]);
        let s = String::from_utf8(text.stdout).unwrap();
        assert!(s.contains("{-e1+e2},{e1+e2}"), "{s}");
    }
}

#[test]
fn csv_and_environment_format_agree() {
    let flag = so2m(&["--format", "csv", "cycles", "--m", "6"]);
    let env = Command::new(env!("CARGO_BIN_EXE_so2m"))
        .args(["cycles", "--m", "6"])
        .env("SO2M_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
    let mut rdr = csv::Reader::from_reader(flag.stdout.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[0], "involution");
    let records: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r.len() == header.len()));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("so2m-cli-test-{}.json", std::process::id()));
    let out = so2m(&["--format", "json", "--output", path.to_str().unwrap(), "involutions", "--m", "5"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, so2m(&["--format", "json", "involutions", "--m", "5"]).stdout);
}

#[test]
fn verify_all_reports_every_suite() {
    let doc = json(&["verify", "--m", "6", "--all"]);
    let rows = doc["rows"].as_array().unwrap();
    for suite in ["liealg", "chevalley", "involutions", "orientation", "aq", "cycles"] {
        assert!(rows.iter().any(|r| r["suite"] == suite), "{suite}");
    }
    assert!(rows.iter().all(|r| r["passed"] == true));
}

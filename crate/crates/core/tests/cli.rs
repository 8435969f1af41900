use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cxqt(args: &[&str]) -> Output {
    cxqt_env(args, &[])
}

fn cxqt_env(args: &[&str], env: &[(&str, &Path)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cxqt"));
    cmd.args(args)
        .env_remove("CXQT_CACHE_DIR")
        .env_remove("CXQT_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("run cxqt")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_h3_json() {
    let v = json(&cxqt(&["count", "H3", "--format", "json"]));
    assert_eq!(v["type"], "H3");
    assert_eq!(v["rank"], 3);
    assert_eq!(v["group_order"], 120);
    assert_eq!(v["num_classes"], 10);
    assert_eq!(v["q"], 4);
    assert_eq!(v["method"], "brute");
    assert_eq!(v["classes"].as_array().unwrap().len(), 10);
    assert_eq!(v["cross_check"]["match"], true);
}

#[test]
fn count_with_separate_rank_and_closed_method() {
    let out = cxqt(&["count", "A", "4", "--method", "closed"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("q=3"), "{}", stdout(&out));

    let v = json(&cxqt(&[
        "count", "D", "10", "--method", "closed", "--format", "json",
    ]));
    assert_eq!(v["q"], 22);
    assert!(v["num_classes"].is_null());

    let v = json(&cxqt(&["count", "I2", "7", "--format", "json"]));
    assert_eq!(v["q"], 4);
}

#[test]
fn large_closed_values_stay_exact() {
    let out = cxqt(&["count", "B", "400", "--method", "closed", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    // p(400)
    assert!(row.contains("6727090051741041926"), "{row}");
}

#[test]
fn exit_codes() {
    assert_eq!(
        cxqt(&["count", "E8", "--method", "brute"]).status.code(),
        Some(3)
    );
    assert_eq!(
        cxqt(&["count", "E7", "--method", "brute"]).status.code(),
        Some(3)
    );
    assert_eq!(cxqt(&["count", "Q7"]).status.code(), Some(2));
    assert_eq!(cxqt(&["count", "A0"]).status.code(), Some(2));
    assert_eq!(
        cxqt(&["count", "B", "3", "--method", "nonsense"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cxqt(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );

    let out = cxqt(&["count", "E8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("q=30"));
}

#[test]
fn table_csv() {
    let out = cxqt(&["table", "--format", "csv", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("type,rank,q_closed,q_brute,match"));
    let rows: Vec<&str> = lines.collect();
    for expected in [
        "A6,6,5,5,true",
        "B5,5,7,7,true",
        "BC6,6,11,11,true",
        "D4,4,3,3,true",
        "E6,6,9,9,true",
        "F4,4,9,9,true",
        "G2,2,3,3,true",
        "H3,3,4,4,true",
        "H4,4,20,20,true",
        "E8,8,30,,",
    ] {
        assert!(rows.contains(&expected), "missing {expected}");
    }
    assert!(!rows.iter().any(|r| r.ends_with(",false")));
}

#[test]
fn classes_e_grade_counts() {
    for (ty, classes, q) in [("H3", 10, 4), ("F4", 25, 9), ("E6", 25, 9)] {
        let v = json(&cxqt(&["classes", ty, "--format", "json"]));
        let records = v["classes"].as_array().unwrap();
        assert_eq!(records.len(), classes, "{ty}");
        let zero = records.iter().filter(|c| c["e_grade"] == 0).count();
        assert_eq!(zero, q, "{ty}");
        let sizes: u64 = records.iter().map(|c| c["size"].as_u64().unwrap()).sum();
        assert_eq!(Some(sizes), v["group_order"].as_u64());
    }
}

#[test]
fn classes_csv_has_one_row_per_class() {
    let out = cxqt(&["classes", "G2", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("class,size,order,det,trace,charpoly,e_grade,rep_word")
    );
    assert_eq!(lines.count(), 6);
}

#[test]
fn verify_appendix_suite() {
    let out = cxqt(&["verify", "--suite", "appendix"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text
        .lines()
        .filter(|l| l.starts_with('['))
        .all(|l| l.contains("] appendix: ")));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn thread_count_does_not_change_output() {
    let runs: Vec<Vec<u8>> = ["1", "4", "8"]
        .iter()
        .map(|t| {
            let out = cxqt(&["--threads", t, "classes", "F4", "--format", "json"]);
            assert_eq!(out.status.code(), Some(0));
            out.stdout
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[1], runs[2]);
}

#[test]
fn cache_directory_is_used_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let env = [("CXQT_CACHE_DIR", dir.path())];
    let first = cxqt_env(&["classes", "H3", "--format", "json"], &env);
    assert_eq!(first.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 1);
    let second = cxqt_env(&["classes", "H3", "--format", "json"], &env);
    assert_eq!(first.stdout, second.stdout);

    let mut bytes = std::fs::read(&files[0]).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0xff;
    std::fs::write(&files[0], bytes).unwrap();
    let third = cxqt_env(&["classes", "H3", "--format", "json"], &env);
    assert_eq!(third.status.code(), Some(0));
    assert_eq!(first.stdout, third.stdout);
    assert!(!third.stderr.is_empty());

    // the flag wins over the environment
    let other = tempfile::tempdir().unwrap();
    let out = cxqt_env(
        &[
            "--cache-dir",
            other.path().to_str().unwrap(),
            "count",
            "B3",
            "--method",
            "brute",
        ],
        &env,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(other.path()).unwrap().count(), 1);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h3.json");
    let out = cxqt(&[
        "--out",
        path.to_str().unwrap(),
        "--format",
        "json",
        "count",
        "H3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["q"], 4);
}

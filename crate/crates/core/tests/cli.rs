use std::fs;
use std::process::{Command, Output};

use gradrec::cli::Table;

fn gradrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradrec"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = [
        "recover",
        "--mesh",
        "perturbed:16,0.3,7",
        "--func",
        "sin:1,2",
        "--method",
        "both",
    ];
    let a = gradrec(&args);
    let b = gradrec(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let study = [
        "study",
        "--func",
        "exp:1",
        "--mesh",
        "graded:0.1",
        "--levels",
        "8,16,32",
    ];
    assert_eq!(gradrec(&study).stdout, gradrec(&study).stdout);
}

#[test]
fn recover_csv_round_trips() {
    let out = gradrec(&[
        "recover",
        "--mesh",
        "graded:8,0.2",
        "--func",
        "poly:1,-2,0.5",
        "--method",
        "both",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let table = Table::from_csv(&text).unwrap();
    assert_eq!(
        table.header,
        [
            "i",
            "x",
            "u",
            "g_oblique",
            "g_orthogonal",
            "du_exact",
            "err_oblique",
            "err_orthogonal"
        ]
    );
    assert_eq!(table.rows.len(), 9);
    assert_eq!(table.to_csv(), text);
}

#[test]
fn sampled_input_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.csv");
    fs::write(&path, "0,0\n0.25,0.0625\n0.5,0.25\n0.75,0.5625\n1,1\n").unwrap();
    let func = format!("file:{}", path.display());
    let out = gradrec(&["recover", "--mesh", "uniform:4", "--func", &func]);
    assert!(out.status.success(), "{}", stderr(&out));
    let g: Vec<f64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(g, [0.25, 0.5, 1.0, 1.5, 1.75]);

    let out = gradrec(&["recover", "--mesh", "uniform:5", "--func", &func]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn errors_use_code_and_message_on_one_line() {
    let out = gradrec(&["recover", "--mesh", "uniform:1", "--func", "poly:1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error: too-coarse: "), "{err}");

    let out = gradrec(&["recover", "--mesh", "uniform:4", "--func", "poly:1,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: parse-error: "));

    let out = gradrec(&[
        "study", "--func", "sin:1,1", "--mesh", "uniform", "--levels", "16,8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: not-increasing: "));

    let out = gradrec(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: usage: "));
}

#[test]
fn out_flag_writes_file_and_nothing_on_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let p = path.to_str().unwrap();
    let out = gradrec(&[
        "recover",
        "--mesh",
        "uniform:4",
        "--func",
        "poly:0,0,1",
        "--out",
        p,
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let direct = gradrec(&["recover", "--mesh", "uniform:4", "--func", "poly:0,0,1"]);
    assert_eq!(fs::read(&path).unwrap(), direct.stdout);

    let bad = dir.path().join("bad.csv");
    let out = gradrec(&[
        "recover",
        "--mesh",
        "uniform:0",
        "--func",
        "poly:1",
        "--out",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!bad.exists());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn json_study_output() {
    let out = gradrec(&[
        "study",
        "--func",
        "sin:1,1",
        "--mesh",
        "uniform",
        "--levels",
        "16,32,64,128",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 4);
    assert_eq!(records[0]["n"], 16);
    assert!(records[0]["rate"].is_null());
    let slope = v["slope"].as_f64().unwrap();
    assert!((1.9..=2.1).contains(&slope), "{slope}");
}

#[test]
fn orthogonal_study_is_first_order_at_best() {
    let out = gradrec(&[
        "study",
        "--func",
        "sin:1,1",
        "--mesh",
        "uniform",
        "--levels",
        "16,32,64,128",
        "--method",
        "orthogonal",
        "--norm",
        "l2",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["slope"].as_f64().unwrap() > 0.9);
}

#[test]
fn infsup_table() {
    let out = gradrec(&["infsup", "--mesh", "graded:0.2", "--levels", "8,16"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let t = Table::from_csv(&stdout(&out)).unwrap();
    assert_eq!(t.header, ["n", "beta"]);
    assert_eq!(t.rows.len(), 2);
}

#[test]
fn verify_failure_exit_code() {
    let ok = gradrec(&["verify", "--suite", "biorthogonality"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).ends_with("ALL PASS\n"));
    let bad = gradrec(&["verify", "--suite", "cubic", "--tol-scale", "1e-30"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).ends_with("FAILED\n"));
}

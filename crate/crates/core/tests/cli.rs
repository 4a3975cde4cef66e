use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-g5"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text}"));
    (value, out.status.code().unwrap())
}

fn stdout(args: &[&str]) -> (String, i32) {
    let out = run(args);
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn reduce_golden() {
    let (v, code) = run_json(&["reduce", "2*L-1", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "hecke-g5/reduce/1");
    assert_eq!(v["e"], 6);
    assert_eq!(v["reduced"], json!(["18*L+11", "96*L+60"]));
    assert_eq!(v["factored"], json!(["(2*L-1)*L^6", "12*L^6"]));
    assert_eq!(v["witness"][0], json!(["18*L+11", "14*L+6"]));
    assert_eq!(v["witness"][1][0], "96*L+60");
}

#[test]
fn reduce_text_golden() {
    let (text, code) = stdout(&["reduce", "3", "L"]);
    assert_eq!(code, 0);
    assert_eq!(
        text,
        "e = 3\nreduced: (6*L+3) / (3*L+2)\nfactored: 3*L^3 / L*L^3\nwitness: [[6*L+3, 3*L+4], [3*L+2, 3*L]]\nword: TStttStS\n"
    );
}

#[test]
fn normalizer_golden() {
    let (v, code) = run_json(&["normalizer", "16"]);
    assert_eq!(code, 0);
    assert_eq!(
        v,
        json!({"schema": "hecke-g5/normalizer/1", "modulus": "4", "h": 4, "quotient": "Z4xZ4"})
    );
    let (v, code) = run_json(&["normalizer", "9", "--matrix", "1", "0", "3*L", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["normalizes"], false);
    let (v, code) = run_json(&[
        "normalizer",
        "4",
        "--matrix",
        "1",
        "0",
        "2*L",
        "1",
        "--samples",
        "20",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["normalizes"], true);
    assert_eq!(v["sampled"]["refuted"], false);
}

#[test]
fn index_golden() {
    assert_eq!(stdout(&["index", "3"]), ("10\n".to_string(), 0));
    let (v, _) = run_json(&["index", "16"]);
    assert_eq!(v["index"], "320");
}

#[test]
fn factor_golden() {
    let (text, code) = stdout(&["factor", "30"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("30 = 2 * (2*L-1)^2 * 3\n"), "{text}");
    let (v, _) = run_json(&["factor", "12*L+7"]);
    assert_eq!(v["factorization"]["factors"][0]["p"], 11);
    assert_eq!(v["factorization"]["factors"][0]["splitting"], "split");
}

#[test]
fn member_exit_codes() {
    let (v, code) = run_json(&["member", "3*L-1", "L", "2*L", "L"]);
    assert_eq!(code, 2);
    assert_eq!(v["in_g5"], false);
    let (v, code) = run_json(&["member", "L", "L", "1", "L"]);
    assert_eq!(code, 0);
    assert_eq!(v["word"], "TST");
    let (v, code) = run_json(&["member", "2*L+1", "-L", "2*L", "-1", "--level", "2"]);
    assert_eq!((code, v["member"].clone()), (0, json!(true)));
    let (_, code) = run_json(&["member", "1", "L", "0", "1", "--level", "2", "--principal"]);
    assert_eq!(code, 2);
    let (v, code) = run_json(&["member", "1", "1", "1", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "bad_determinant");
}

#[test]
fn syntax_errors_report_position() {
    let out = run(&["factor", "2*L+x"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.starts_with("error[syntax_error]: syntax error at position 4"),
        "{err}"
    );
}

#[test]
fn cosets_golden() {
    let (v, code) = run_json(&["cosets", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["size"], 5);
    assert_eq!(v["action"]["S"].as_array().unwrap().len(), 5);
    let (v, code) = run_json(&["cosets", "16", "--bound", "100"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "bound_exceeded");
}

#[test]
fn explain_and_quotient() {
    let (v, code) = run_json(&["explain", "48"]);
    assert_eq!(code, 0);
    assert_eq!(v["final_bound"], "12");
    assert_eq!(v["agrees"], true);
    let (v, code) = run_json(&["quotient", "16"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 16);
    assert_eq!(v["order_profile"], json!({"1": 1, "2": 3, "4": 12}));
    assert_eq!(v["classification"], "Z4xZ4");
}

#[test]
fn elementary_golden() {
    let (v, code) = run_json(&["elementary", "12*L+7"]);
    assert_eq!(code, 2);
    assert_eq!(v["witness"], json!(["6*L+3", "3*L-2"]));
    let (v, code) = run_json(&["elementary", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "NoCounterexampleUpTo");
    let (v, code) = run_json(&["elementary", "8", "--strong"]);
    assert_eq!(code, 2);
    assert_eq!(v["failing"]["r"], "8");
    assert_eq!(run_json(&["elementary", "L"]).1, 0);
}

#[test]
fn selftest_runs() {
    let (text, code) = stdout(&["selftest", "--only", "reduced,nine"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("PASS reduced-factors"));
    assert!(text.contains("PASS nine-conjugation"));
    assert!(text.ends_with("3 of 3 items passed\n"));
    let (text, code) = stdout(&[
        "selftest",
        "--only",
        "reduced-factors",
        "--inject-tie-fault",
    ]);
    assert_eq!(code, 1);
    assert!(text.contains("FAIL reduced-factors"));
    assert_eq!(stdout(&["selftest", "--only", "nothing"]).1, 1);
}

#[test]
fn batch_is_ordered_and_deterministic() {
    let dir = std::env::temp_dir().join(format!("hecke-g5-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("commands.txt");
    std::fs::write(
        &path,
        "index 3\n\n# skipped\nnormalizer 16\nmember 1 1 1 1\nreduce 2*L-1 12\nnormalizer 4 --matrix 1 0 2*L 1 --samples 10 --seed 3\n",
    )
    .unwrap();
    let args = ["--json", "--batch", path.to_str().unwrap()];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(1));
    let lines: Vec<Value> = String::from_utf8(first.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let schemas: Vec<&str> = lines
        .iter()
        .map(|v| v["schema"].as_str().unwrap())
        .collect();
    assert_eq!(
        schemas,
        [
            "hecke-g5/index/1",
            "hecke-g5/normalizer/1",
            "hecke-g5/error/1",
            "hecke-g5/reduce/1",
            "hecke-g5/normalizer/1"
        ]
    );
    assert_eq!(lines[4]["sampled"]["seed"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_automimic"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

#[test]
fn documented_examples() {
    let (code, v) = run_json(&[
        "perm",
        "sign",
        "--field",
        "2^1",
        "--n",
        "3",
        "--map",
        "(x1+x2,x2,x3)",
    ]);
    assert_eq!((code, v), (0, json!({"sign": 1})));
    let (code, v) = run_json(&[
        "construct",
        "vandermonde",
        "--p",
        "2",
        "--k",
        "1",
        "--l",
        "2",
    ]);
    assert_eq!((code, v), (0, json!({"alpha": [1, 1]})));
    assert_eq!(run(&["bogus"]).0, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["perm", "sign", "--field", "4", "--map", "(x1,x2)"]).0,
        2
    );
    assert_eq!(run(&["map", "show", "--map", "(x1+,x2)"]).0, 2);
    assert_eq!(
        run(&["experiment", "tlin", "--field", "2", "--alpha", "1,1"]).0,
        2
    );
    assert_eq!(run(&["group", "order", "--gens", "nonsense"]).0, 2);
    assert_eq!(
        run(&[
            "perm",
            "sign",
            "--field",
            "2",
            "--n",
            "3",
            "--m",
            "3",
            "--map",
            "(x1,x2,x3)",
            "--bound",
            "100"
        ])
        .0,
        2
    );
}

#[test]
fn verification_failures_exit_one() {
    let args = |m: &'static str| {
        [
            "perm",
            "compare",
            "--field",
            "2",
            "--m",
            m,
            "--map",
            "(x1+x2^2,x2)",
            "--with",
            "(x1+x2,x2)",
        ]
    };
    let (code, v) = run_json(&args("1"));
    assert_eq!((code, v["equal"].clone()), (0, json!(true)));
    let (code, v) = run_json(&args("2"));
    assert_eq!((code, v["equal"].clone()), (1, json!(false)));
    assert_eq!(v["points_differing"], json!(8));
}

#[test]
fn experiments_report_and_pass() {
    let (code, v) = run_json(&["experiment", "glin-index"]);
    assert_eq!(code, 0);
    assert_eq!(v["quantities"]["index"], json!("2"));
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["provenance"].is_string()));
    let (code, v) = run_json(&[
        "experiment",
        "parity",
        "--field",
        "2",
        "--n",
        "3",
        "--gens",
        "tame",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["quantities"]["all_even"], json!(false));
    let (code, v) = run_json(&["mimic", "nagata", "--field", "3", "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_pass"], json!(true));
}

#[test]
fn deterministic_modulo_timing() {
    let strip = |mut v: Value| {
        v["seconds"] = Value::Null;
        v
    };
    let a = strip(run_json(&["experiment", "order", "--field", "2", "--n", "3"]).1);
    let b = strip(run_json(&["experiment", "order", "--field", "2", "--n", "3"]).1);
    assert_eq!(a, b);
}

#[test]
fn text_format() {
    let (code, out) = run(&["--format", "text", "field", "info", "--field", "3^2"]);
    assert_eq!(code, 0);
    assert!(out.contains("q: 9"));
    let (code, out) = run(&[
        "field", "op", "--field", "3^2", "--op", "mul", "--a", "12", "--b", "21", "--format",
        "text",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("result: "));
}

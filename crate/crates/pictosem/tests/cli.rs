mod common;

use std::process::{Command, Output};

use common::data;

fn pictosem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pictosem")).args(args).env_remove("PICTOSEM_LEXICON").output().unwrap()
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn transfer_prints_sentence() {
    let o = pictosem(&[
        "transfer",
        &path("demo.lex"),
        &path("dict.json"),
        &path("templates.json"),
        "i",
        "eat",
        "meat",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Je mange la viande\n");
}

#[test]
fn analyze_formats() {
    let o = pictosem(&["analyze", &path("demo.lex"), "i", "eat", "meat", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["arcs"].as_array().unwrap().len(), 2);
    let o = pictosem(&["analyze", &path("demo.lex"), "i", "eat", "meat"]);
    assert!(stdout(&o).starts_with("digraph"));
    let o = pictosem(&[
        "analyze",
        &path("demo.lex"),
        "i",
        "eat",
        "meat",
        "--threshold",
        "1.01",
        "--format",
        "json",
    ]);
    assert!(stdout(&o).contains(r#""arcs":[]"#));
}

#[test]
fn validate_reports() {
    let o = pictosem(&["validate", &path("demo.lex")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 errors, 0 warnings"));

    let dir = std::env::temp_dir().join(format!("pictosem-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.lex");
    std::fs::write(&broken, r#"{"symbols": {"x": {"taxeme": "XYZ"}}}"#).unwrap();
    let o = pictosem(&["validate", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("XYZ"));

    let empty_case = dir.join("empty_case.lex");
    std::fs::write(
        &empty_case,
        r#"{"domains": {"D": {}}, "taxemes": {"T": {"domain": "D"}},
            "symbols": {"p": {"taxeme": "T", "cases": {"agent": {"features": {}}}}, "q": {"taxeme": "T"}}}"#,
    )
    .unwrap();
    let o = pictosem(&["validate", empty_case.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("error: symbol `p`: case `agent` has no selectional features"));

    let o = Command::new(env!("CARGO_BIN_EXE_pictosem"))
        .arg("validate")
        .env("PICTOSEM_LEXICON", data("demo.lex"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn domain_and_usage_errors() {
    let o = pictosem(&["analyze", &path("demo.lex"), "unicorn"]);
    assert_eq!(o.status.code(), Some(1));
    let o = pictosem(&["analyze", &path("demo.lex"), "i", "--locality", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = pictosem(&["analyze", &path("demo.lex")]);
    assert_eq!(o.status.code(), Some(2));
    let o = pictosem(&["analyze", &path("demo.lex"), "i", "--format", "yaml"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pictosem(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pictosem(&["validate", "/nonexistent/lexicon.lex"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bench_writes_json_and_table() {
    let o = pictosem(&[
        "bench",
        &path("demo.lex"),
        &path("dict.json"),
        &path("templates.json"),
        &path("six.jsonl"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["I"], 6);
    assert_eq!(v["acceptability_rate"], 1.0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("acceptability 100.0%"));
}

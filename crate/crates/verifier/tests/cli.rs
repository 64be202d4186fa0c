use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn setfam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setfam")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

const MAJ3: &str = r#"{"universe":["a","b","c"],"members":[["a","b"],["a","c"],["b","c"],["a","b","c"]]}"#;

#[test]
fn classify_majority() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "maj.json", MAJ3);
    let v = json_of(&setfam(&["classify", &path]));
    assert_eq!(v["self_aso"], true);
    assert_eq!(v["filter"], false);
    assert_eq!(v["condition_i"], true);
}

#[test]
fn aso_of_majority_is_itself() {
    let v = json_of(&setfam(&["aso", MAJ3]));
    let back: Value = serde_json::from_str(MAJ3).unwrap();
    assert_eq!(v, back);
}

#[test]
fn hulls_of_nonempty_indicator() {
    let mf = r#"{"universe":["a","b"],"values":[
        {"set":["a"],"value":1},{"set":["b"],"value":1},{"set":["a","b"],"value":1}]}"#;
    let inn = json_of(&setfam(&["inn-hull", mf]));
    let top = inn["values"].as_array().unwrap().iter().find(|e| e["set"].as_array().unwrap().len() == 2).unwrap();
    assert_eq!(top["value"], 2);
    let out = json_of(&setfam(&["out-core", mf]));
    assert_eq!(out["values"].as_array().unwrap().len(), 3);
}

#[test]
fn limit_in_sierpinski_space() {
    let dir = tempfile::tempdir().unwrap();
    let mf = write(
        dir.path(),
        "m.json",
        r#"{"universe":["a","b"],"values":[{"set":["a"],"value":1},{"set":["a","b"],"value":"inf"}]}"#,
    );
    let top = write(dir.path(), "t.json", r#"{"universe":["a","b"],"opens":[[],["a"],["a","b"]]}"#);
    let v = json_of(&setfam(&["limit", &mf, &top]));
    assert_eq!(v["values"], serde_json::json!([{"element":"a","value":1},{"element":"b","value":"inf"}]));
}

#[test]
fn sequence_limits() {
    let alt = r#"{"universe":["a","b"],"prefix":[],"pattern":["a","b"]}"#;
    let v = json_of(&setfam(&["seq-limit", alt, "--family", "cogap"]));
    assert_eq!(v["values"], serde_json::json!([{"element":"a","value":1},{"element":"b","value":1}]));
    let v = json_of(&setfam(&["seq-limit", alt, "--family", "H"]));
    assert_eq!(v["values"], serde_json::json!([]));
    let constant = r#"{"universe":["a","b"],"pattern":["a"]}"#;
    let v = json_of(&setfam(&["seq-limit", constant, "--family", "cogap"]));
    assert_eq!(v["values"], serde_json::json!([{"element":"a","value":"inf"}]));
}

#[test]
fn cogap_inline_forms() {
    let v = json_of(&setfam(&["cogap", "(110)"]));
    assert_eq!(v["cogap"], 2);
    assert_eq!(v["out_cogap"], 2);
    let v = json_of(&setfam(&["cogap", r#"{"prefix":"0110","pattern":"10"}"#]));
    assert_eq!(v["gap"], 1);
    assert_eq!(v["set"]["prefix"], "01");
}

#[test]
fn census_and_verify() {
    let v = json_of(&setfam(&["census", "--n", "2"]));
    assert_eq!(v["counts"]["ultrafilter"], 2);
    let v = json_of(&setfam(&["verify", "--sweep", "aso-involution", "--n", "3"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["instances"], 256);
    let out = setfam(&["verify", "--sweep", "prop-ia", "--samples", "5", "--pretty"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn usage_and_format_errors_exit_two() {
    assert_eq!(setfam(&["verify", "--sweep", "no-such-sweep"]).status.code(), Some(2));
    assert_eq!(setfam(&["classify", "{not json"]).status.code(), Some(2));
    assert_eq!(setfam(&["cogap", "01x(1)"]).status.code(), Some(2));
    assert_eq!(setfam(&["census", "--n", "5"]).status.code(), Some(2));
    assert_eq!(setfam(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(setfam(&["classify", "/no/such/file.json"]).status.code(), Some(2));
    // a non-increasing table is rejected by the hull computations
    let dec = r#"{"universe":["a"],"values":[{"set":[],"value":1}]}"#;
    assert_eq!(setfam(&["out-core", dec]).status.code(), Some(2));
}

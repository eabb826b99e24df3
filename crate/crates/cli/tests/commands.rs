use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bilocal")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_of(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_n2_cutoff1() {
    let v = json_of(&["classify", "--N", "2", "--M", "1", "--P", "2", "--cutoff", "1"]);
    let mult: Vec<u64> = v["result"]["sectors"].as_array().unwrap().iter().map(|s| s["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(mult, vec![1, 2, 2]);
}

#[test]
fn classify_n0_is_trivial() {
    let v = json_of(&["classify", "--N", "0", "--M", "2", "--P", "2", "--cutoff", "2"]);
    assert_eq!(v["result"]["count"], json!(1));
}

#[test]
fn infeasible_cutoff_exits_one() {
    let (code, _, err) = run(&["classify", "--N", "1", "--M", "1", "--cutoff", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("increase M"));
}

#[test]
fn gram_of_vacuum() {
    let v = json_of(&["gram", "--N", "1", "--M", "1", "--P", "2"]);
    assert_eq!(v["result"]["matrix"], json!([[1]]));
    let v = json_of(&["gram", "--N", "2", "--M", "1", "--P", "2"]);
    assert_eq!(v["result"]["matrix"], json!([[2]]));
}

#[test]
fn out_of_bound_sector_is_rejected() {
    let (code, _, err) = run(&["gram", "--N", "2", "--plus", "1,1", "--minus", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("3 > N = 2"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--N", "-1"]).0, 2);
    assert_eq!(run(&["verify", "--P", "7"]).0, 2);
    assert_eq!(run(&["spectrum", "--D", "5"]).0, 2);
}

#[test]
fn spectrum_rows() {
    let v = json_of(&["spectrum", "--D", "4", "--count", "14"]);
    let h: Vec<u64> = v["result"]["rows"].as_array().unwrap().iter().map(|r| r["h"].as_u64().unwrap()).collect();
    assert_eq!(h, vec![1, 4, 9]);
}

#[test]
fn o3_map_has_signs() {
    let v = json_of(&["map-irreps", "--group", "O", "--N", "3", "--cap", "2"]);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["label"]["sign"].is_string()));
    let m = rows.iter().find(|r| r["sector"]["Y"] == json!([1, 1])).unwrap();
    assert_eq!(m["label"], json!({"Y": [1], "sign": "-"}));
}

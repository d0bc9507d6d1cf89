use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn domtab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domtab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn domtab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domtab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = domtab(&full);
    let v = serde_json::from_str(&stdout(&o)).expect("valid json");
    (v, o.status.code().unwrap())
}

#[test]
fn count_rectangle() {
    let o = domtab(&["count", "--rect", "2x5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"count\":\"10\"}\n");

    let (v, code) = json(&["count", "--rect", "6x5"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], "1051050");

    let (v, code) = json(&["count", "--lambda", "5,5,3,3,2", "--brute"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], v["brute"]);
    assert_eq!(v["match"], true);

    let (v, _) = json(&["count", "--lambda", "3,2,1"]);
    assert_eq!(v["count"], "0");
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["count", "--lambda", "2,3"][..],
        &["count", "--rect", "2by5"],
        &["count", "--rect", "2x2", "--lambda", "2,2"],
        &["count"],
        &["enumerate", "--lambda", "3"],
        &["orbits", "--n", "0"],
        &["verify-csp"],
        &["frobnicate"],
        &["count", "--rect", "2x2", "--unknown"],
    ] {
        let o = domtab(args);
        assert_eq!(o.status.code(), Some(2), "args {args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn enumerate_round_trips_through_json() {
    let (v, code) = json(&["enumerate", "--rect", "4x3"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], "30");
    let tableaux = v["tableaux"].as_array().unwrap();
    assert_eq!(tableaux.len(), 30);
    for t in tableaux {
        let parsed: domtab::tableaux::DominoTableau = serde_json::from_value(t.clone()).unwrap();
        assert!(parsed.is_valid());
    }

    let (v, _) = json(&["enumerate", "--rect", "2x12", "--limit", "3"]);
    assert_eq!(v["total"], "924");
    assert_eq!(v["shown"], 3);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 3);
}

#[test]
fn orbits_csv() {
    let o = domtab(&["orbits", "--n", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "size,representative");
    assert!(lines[1].starts_with("4,"));
    assert!(lines[2].starts_with("2,"));
    assert_eq!(lines.len(), 3);
}

#[test]
fn verify_csp_reports() {
    let (v, code) = json(&["verify-csp", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    let fixed: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["fixed"].as_str().unwrap())
        .collect();
    assert_eq!(fixed, ["0", "0", "0", "0", "10"]);

    let (v, code) = json(&["verify-csp", "--n-max", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 8);
}

#[test]
fn identities_text() {
    let o = domtab(&["identities", "--n-max", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let body: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(body.len(), 12);
    assert!(body.iter().all(|l| l.ends_with("OK")));
    assert!(body[11].contains("924"));
}

#[test]
fn gamma_by_index_and_stdin() {
    let (by_index, code) = json(&["gamma", "--lambda", "2,2", "--index", "1"]);
    assert_eq!(code, 0);
    assert!(by_index["type_i"]["rows"].is_array());

    let worked = r#"{"shape":[5,5,3,3,2],"dominoes":[
        {"label":1,"row":1,"col":1,"orient":"V"},
        {"label":2,"row":1,"col":2,"orient":"V"},
        {"label":3,"row":3,"col":1,"orient":"H"},
        {"label":4,"row":1,"col":3,"orient":"H"},
        {"label":5,"row":4,"col":1,"orient":"V"},
        {"label":6,"row":2,"col":3,"orient":"H"},
        {"label":7,"row":4,"col":2,"orient":"V"},
        {"label":8,"row":3,"col":3,"orient":"V"},
        {"label":9,"row":1,"col":5,"orient":"V"}]}"#;
    let o = domtab_stdin(&["gamma", "--format", "json"], worked);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type_i"]["rows"], serde_json::json!([[1, 6, 9], [7, 8]]));
    assert_eq!(v["type_ii"]["rows"], serde_json::json!([[2, 4], [3], [5]]));

    let o = domtab_stdin(&["gamma"], r#"{"shape":[2,2],"dominoes":[]}"#);
    assert_eq!(o.status.code(), Some(2));
    let o = domtab_stdin(&["gamma"], "not json");
    assert_eq!(o.status.code(), Some(2));
    let o = domtab(&["gamma", "--lambda", "2,2", "--index", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn conjecture_probe() {
    let (v, code) = json(&["conjecture", "--k", "2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["value_at_one"], "6");
    assert_eq!(v["default_order"]["verdict"], "Realizable");

    let (v, code) = json(&["conjecture", "--k", "1", "--n", "4", "--order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["requested_order"]["order"], 2);
}

#[test]
fn output_is_deterministic_and_file_output_matches() {
    let args = ["orbits", "--n", "8", "--format", "json"];
    let a = domtab(&args);
    let b = domtab(&args);
    assert_eq!(a.stdout, b.stdout);

    let dir = std::env::temp_dir().join(format!("domtab-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orbits.json");
    let o = domtab(&[
        "orbits",
        "--n",
        "8",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

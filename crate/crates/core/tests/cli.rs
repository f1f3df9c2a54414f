use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebknot")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn embed() {
    let v = json(&["embed", "3", "4", "5"]);
    assert_eq!(v["schema"], "chebknot.embed/1");
    assert_eq!(v["embedding"], true);
    assert_eq!(v["witness"]["verified"], true);
    assert_eq!((v["witness"]["a"].as_u64(), v["witness"]["c"].as_u64()), (Some(1), Some(3)));
    let v = json(&["embed", "2", "4", "6"]);
    assert_eq!((v["pgcd"].as_u64(), &v["embedding"]), (Some(2), &serde_json::Value::Bool(false)));
    let v = json(&["embed", "1", "9", "12"]);
    assert_eq!(v["embedding"], true);
    assert!(v["rectification"].as_array().is_some_and(|a| !a.is_empty()));
    let out = run(&["embed", "37", "39", "40"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("t = 2 T_601(T_39) T_586(T_40) - T_1267(T_37)"));
}

#[test]
fn reduce() {
    let v = json(&["reduce", "3", "5", "13"]);
    assert_eq!(v["schema"], "chebknot.reduce/1");
    assert_eq!(v["end"], serde_json::json!([3, 5, 7]));
    assert_eq!(v["replay_verified"], true);
    let step = &v["steps"][0];
    assert_eq!(step["form"], "(x,y,f(x,y)-z)");
    assert_eq!(step["triple"], serde_json::json!([3, 5, 7]));
    assert!(step["payload"].is_array());
    assert_eq!(json(&["reduce", "2", "5", "9"])["trivial"], true);
    assert_eq!(run(&["reduce", "2", "4", "6"]).status.code(), Some(2));
}

#[test]
fn table1() {
    let v = json(&["table1", "16"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 19);
    let r = rows.iter().find(|r| r["i"] == 4 && r["j"] == 7).unwrap();
    assert_eq!(r["remnant"], serde_json::json!([9, 13, 17]));
    assert!(stdout(&run(&["table1"])).contains("(5,9)"));
}

#[test]
fn knot() {
    let v = json(&["knot", "3", "4", "5"]);
    assert_eq!(v["schema"], "chebknot.knot/1");
    assert_eq!(v["identification"]["name"], "3_1");
    assert_eq!(v["nodes"], 3);
    assert_eq!(v["pd_code"].as_array().unwrap().len(), 3);
    let v = json(&["knot", "3", "5", "--alternating"]);
    assert_eq!(v["identification"]["name"], "4_1");
    assert_eq!(v["alternating"], true);
    let out = run(&["--format", "json", "knot", "9", "10", "11"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["nodes"].as_u64(), &v["cap_exceeded"]), (Some(36), &serde_json::Value::Bool(true)));
    assert_eq!(run(&["knot", "3", "4", "6"]).status.code(), Some(2));
    assert_eq!(run(&["knot", "3", "4"]).status.code(), Some(2));
    assert_eq!(run(&["--cap", "2", "knot", "3", "4", "5"]).status.code(), Some(3));
}

#[test]
fn param() {
    let v = json(&["param", "3", "11"]);
    assert_eq!(v["z_content"], "64");
    let text = stdout(&run(&["param", "3", "11"]));
    assert!(text.contains("327680t^19 - 1548288t^17"));
    assert!(text.contains("1090t^3 - 15t"));
    assert_eq!(run(&["param", "4", "6"]).status.code(), Some(2));
}

#[test]
fn svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.svg");
    let out = run(&["svg", "3", "8", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = std::fs::read_to_string(&path).unwrap();
    assert!(doc.starts_with("<svg") && doc.matches("<circle").count() == 7);
    let path = dir.path().join("knot.svg");
    let v = json(&["svg", "3", "4", "5", path.to_str().unwrap()]);
    assert_eq!(v["gapped_crossings"], 3);
    assert!(path.exists());
    let out = run(&["svg", "3", "4", "5"]);
    assert!(stdout(&out).starts_with("<svg"));
    let bad = dir.path().join("missing").join("x.svg");
    assert_eq!(run(&["svg", "3", "4", bad.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn conjecture2() {
    let v = json(&["conjecture2", "4", "7"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    assert_eq!(v["pairwise_distinct"], true);
    assert!(v["note"].as_str().unwrap().contains("evidence"));
    assert_eq!(run(&["conjecture2", "4", "6"]).status.code(), Some(2));
}

#[test]
fn output_file_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = run(&["--format", "json", "--out", path.to_str().unwrap(), "table1", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    let bad = dir.path().join("no").join("t.json");
    assert_eq!(run(&["--out", bad.to_str().unwrap(), "table1"]).status.code(), Some(4));
    assert_eq!(run(&["embed", "3", "x", "5"]).status.code(), Some(2));
    assert_eq!(run(&["embed", "0", "4", "5"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

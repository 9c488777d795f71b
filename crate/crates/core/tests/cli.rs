use std::process::{Command, Output};

use serde_json::Value;

fn grouptool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouptool"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (String, Value) {
    let out = grouptool(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap();
    (text, value)
}

fn ids(v: &Value) -> Vec<u64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect()
}

#[test]
fn dsub_on_s3() {
    let (_, v) = json(&[
        "dsub", "--group", "S3", "--m", "3", "--n", "2", "--format", "json",
    ]);
    let d = &v["result"]["d_mn"];
    assert_eq!(d["order"], 3);
    assert_eq!(d["is_subgroup"], true);
    assert_eq!(d["is_nilpotent"], true);
    assert_eq!(v["group"]["source"], "catalog:S3");
}

#[test]
fn eseries_with_prime_set() {
    let (_, v) = json(&["eseries", "--group", "S4", "--pi", "2", "--format", "json"]);
    assert_eq!(v["params"], serde_json::json!({"m": 8, "n": 3}));
    assert_eq!(ids(&v["result"]["orders"]), [1, 4, 12, 24]);
    assert_eq!(v["result"]["length"], 4);
    assert_eq!(v["result"]["classification"], "two-frobenius");
}

#[test]
fn top_level_keys_and_round_trip() {
    let (text, v) = json(&[
        "eseries", "--group", "S3", "--m", "3", "--n", "2", "--format", "json",
    ]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "group", "params", "result", "version"]);
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    let terms: Vec<usize> = v["result"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| ids(t).len())
        .collect();
    assert_eq!(terms, [1, 3, 6]);
}

#[test]
fn text_and_json_agree() {
    let args = ["dsub", "--group", "F20", "--m", "5", "--n", "4"];
    let text = String::from_utf8(grouptool(&args).stdout).unwrap();
    let (_, v) = json(&[&args[..], &["--format", "json"]].concat());
    for key in ["l_m", "d_m", "d_mn"] {
        let members = ids(&v["result"][key]["members"]);
        let rendered = format!("{members:?}");
        assert!(
            text.contains(&format!("ids    {rendered}")),
            "{key}: {rendered} not in\n{text}"
        );
        let verdict = format!("subgroup={}", v["result"][key]["is_subgroup"]);
        assert!(text.contains(&verdict));
    }
}

#[test]
fn usage_errors_exit_2() {
    let cases: [&[&str]; 5] = [
        &["dsub", "--group", "S3", "--m", "4", "--n", "2"],
        &["dsub", "--group", "S3", "--m", "3", "--n", "2", "--pi", "3"],
        &["dsub", "--m", "3", "--n", "2"],
        &["dsub", "--group", "S9", "--m", "3", "--n", "2"],
        &["verify", "--suite", "no-such-suite"],
    ];
    for args in cases {
        assert_eq!(grouptool(args).status.code(), Some(2), "{args:?}");
    }
    let out = grouptool(cases[0]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("m and n must be coprime"));
}

#[test]
fn generators_and_cayley_sources() {
    let (_, v) = json(&[
        "classify",
        "--gens",
        "(1 2 3), (1 2)",
        "--m",
        "3",
        "--n",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(v["group"]["order"], 6);
    assert_eq!(v["result"]["classification"], "frobenius");
    assert_eq!(
        v["result"]["frobenius"]["kernel"].as_array().unwrap().len(),
        3
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.csv");
    std::fs::write(&path, "0,1,2\n1,2,0\n2,0,1\n").unwrap();
    let (_, v) = json(&[
        "dsub",
        "--cayley",
        path.to_str().unwrap(),
        "--m",
        "3",
        "--n",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(v["result"]["d_m"]["order"], 3);

    std::fs::write(&path, "0,1\n1,1\n").unwrap();
    assert_eq!(
        grouptool(&[
            "dsub",
            "--cayley",
            path.to_str().unwrap(),
            "--m",
            "2",
            "--n",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["eseries", "--group", "A4", "--pi", "3", "--format", "json"];
    let (stdout, _) = json(&args);
    let out = grouptool(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn single_passing_suite_exits_0() {
    let (_, v) = json(&[
        "verify",
        "--suite",
        "prop-factor-i",
        "--max-order",
        "60",
        "--format",
        "json",
    ]);
    let suites = v["result"]["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["failed"], 0);
    assert_eq!(v["result"]["summary"]["all_pass"], true);
}

#[test]
fn catalog_listing() {
    let (_, v) = json(&["catalog", "--list", "--max-order", "12", "--format", "json"]);
    let names: Vec<&str> = v["result"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"A4") && names.contains(&"Q8") && names.contains(&"C12"));
}

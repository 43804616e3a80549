use std::process::{Command, Output};

use serde_json::Value;

fn quiddity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiddity"))
        .args(args)
        .env_remove("QUIDDITY_MODULUS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn check_examples() {
    let o = quiddity(&["check", "--modulus", "5", "2,2,2,2,2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("solution, sign=+1"));

    let o = quiddity(&["check", "--modulus", "5", "1,1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("not a solution"));

    let o = quiddity(&["-m", "7", "check", "-1,-1,-1", "-f", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["seq"], serde_json::json!([6, 6, 6]));
    assert_eq!(v["sign"], 1);
}

#[test]
fn usage_errors_exit_two() {
    let o = quiddity(&["check", "--modulus", "1", "1,1"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(code(&quiddity(&["check", "1,1,1"])), 2);
    assert_eq!(code(&quiddity(&["check", "-m", "3", "1,x"])), 2);
    assert_eq!(
        code(&quiddity(&["check", "-m", "3", "--bogus", "1,1,1"])),
        2
    );
    assert_eq!(code(&quiddity(&["reduce", "-m", "0", "1,1,1"])), 2);
    assert_eq!(
        code(&quiddity(&["check", "-m", "3", "-f", "svg", "1,1,1"])),
        2
    );
    assert_eq!(code(&quiddity(&["enumerate", "-m", "11", "12"])), 2);
    assert_eq!(code(&quiddity(&["dissect", "-m", "5", "2,2,2,2,2"])), 2);
    assert_eq!(code(&quiddity(&["triangulate", "-m", "4", "2,2,2,2"])), 2);
}

#[test]
fn modulus_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_quiddity"))
        .args(["check", "1,1,1"])
        .env("QUIDDITY_MODULUS", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn integer_mode() {
    let o = quiddity(&["-m", "0", "check", "2,0,-2,0", "-f", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["irreducible"], true);
    let o = quiddity(&["-m", "0", "check", "1,2,1,2", "-f", "json"]);
    assert_eq!(json(&o)["irreducible"], false);
    let o = quiddity(&["monomial", "--all-twos", "1000"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn sum_is_not_commutative() {
    let o = quiddity(&["-m", "7", "sum", "1,1,1", "2,1,2,1"]);
    assert!(stdout(&o).starts_with("(2,1,3,1,2)"));
    let o = quiddity(&["-m", "7", "sum", "2,1,2,1", "1,1,1"]);
    assert!(stdout(&o).starts_with("(3,1,2,2,1)"));
}

#[test]
fn verify_seven() {
    let o = quiddity(&["verify", "--modulus", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("pass"));
}

#[test]
fn verify_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("list.txt");
    std::fs::write(&path, "size-3 1,1,1\nsize-3 -1,-1,-1\n").unwrap();
    let o = quiddity(&[
        "verify",
        "-m",
        "5",
        "--list",
        path.to_str().unwrap(),
        "-f",
        "json",
    ]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["pass"], false);
    assert!(!v["extra"].as_array().unwrap().is_empty());
}

#[test]
fn reduce_example() {
    let o = quiddity(&["reduce", "--modulus", "9", "3,3,3,3,3,3", "-f", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["irreducible"], false);
    assert_eq!(v["witness"]["left"]["seq"], serde_json::json!([6, 3, 3, 6]));
    assert_eq!(
        v["witness"]["right"]["seq"],
        serde_json::json!([6, 3, 3, 6])
    );
    let o = quiddity(&["reduce", "-m", "7", "2,2,2,2,2,2,2"]);
    assert_eq!(stdout(&o).trim(), "irreducible");
}

#[test]
fn classify_round_trip_and_compare() {
    let o = quiddity(&["classify", "-m", "5", "3-6", "--witnesses", "-f", "json"]);
    assert_eq!(code(&o), 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let again = quiddity(&[
        "classify",
        "-m",
        "5",
        "3-6",
        "--witnesses",
        "-f",
        "json",
        "--compare",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&again), 0);
    assert_eq!(again.stdout, o.stdout);

    let other = quiddity(&[
        "classify",
        "-m",
        "5",
        "3-7",
        "--witnesses",
        "--compare",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&other), 1);
}

#[test]
fn parallel_matches_sequential() {
    let seq = quiddity(&["classify", "-m", "6", "3-7", "-f", "json"]);
    let par = quiddity(&["classify", "-m", "6", "3-7", "-f", "json", "-j", "4"]);
    assert_eq!(seq.stdout, par.stdout);
    let seq = quiddity(&["enumerate", "-m", "4", "6", "-f", "csv"]);
    let par = quiddity(&["enumerate", "-m", "4", "6", "-f", "csv", "-j", "3"]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn shards_partition_enumeration() {
    let full = json(&quiddity(&["enumerate", "-m", "5", "5", "-f", "json"]));
    let mut union = Vec::new();
    for i in 0..3 {
        let i = i.to_string();
        let part = json(&quiddity(&[
            "enumerate",
            "-m",
            "5",
            "5",
            "-f",
            "json",
            "--shard-index",
            &i,
            "--shard-count",
            "3",
        ]));
        union.extend(
            part["sizes"][0]["solutions"]
                .as_array()
                .unwrap()
                .iter()
                .cloned(),
        );
    }
    let mut all = full["sizes"][0]["solutions"].as_array().unwrap().clone();
    let key = |v: &Value| v["seq"].to_string();
    union.sort_by_key(key);
    all.sort_by_key(key);
    assert_eq!(union, all);
    assert_eq!(
        code(&quiddity(&[
            "enumerate",
            "-m",
            "5",
            "5",
            "--shard-index",
            "3",
            "--shard-count",
            "3"
        ])),
        2
    );
}

#[test]
fn work_bound_override_warns() {
    let o = quiddity(&["enumerate", "-m", "3", "5", "--work-bound", "1000"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert_eq!(
        code(&quiddity(&[
            "enumerate",
            "-m",
            "3",
            "5",
            "--work-bound",
            "10"
        ])),
        2
    );
}

#[test]
fn dissections() {
    let a = quiddity(&[
        "dissect", "-m", "3", "--random", "9", "--seed", "7", "-f", "json",
    ]);
    let b = quiddity(&[
        "dissect", "-m", "3", "--random", "9", "--seed", "7", "-f", "json",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["n"], 9);
    assert_eq!(v["kind"], "weighted-first");

    let o = quiddity(&["dissect", "-m", "2", "1,1,1", "-f", "json"]);
    assert_eq!(json(&o)["kind"], "plain-34");

    let o = quiddity(&["dissect", "-m", "4", "2,2,2,2,2,2,2,2", "-f", "svg"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("<svg"));

    let o = quiddity(&[
        "dissect",
        "-m",
        "3",
        "1,-1,1,1,0,1",
        "--rewrite",
        "-f",
        "json",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let cells = json(&o)["cells"].as_array().unwrap().clone();
    assert!(cells
        .iter()
        .all(|c| c["vertices"].as_array().unwrap().len() == 3));
}

#[test]
fn triangulations() {
    let o = quiddity(&["triangulate", "-m", "3", "0,0,-1,1,-1,1", "-f", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let cells = json(&o)["cells"].as_array().unwrap().clone();
    assert_eq!(cells.len(), 4);
    assert_eq!(code(&quiddity(&["triangulate", "-m", "3", "0,0,0,0"])), 2);

    let o = quiddity(&["triangulate", "-m", "5", "0,4,0,1", "-f", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["cells"].as_array().unwrap().len(), 2);
    assert_eq!(code(&quiddity(&["triangulate", "-m", "5", "2,2,2,2,2"])), 1);
}

#[test]
fn monomial_reports() {
    let o = quiddity(&["monomial", "-m", "10", "-k", "3", "-f", "json"]);
    let v = json(&o);
    assert_eq!(v["minimal_size"], 15);
    assert_eq!(v["irreducible"], false);
    let o = quiddity(&["monomial", "-m", "11"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains("FAIL"));
    let o = quiddity(&["monomial", "-m", "5", "-f", "csv"]);
    assert!(stdout(&o).starts_with("k,minimal_size,irreducible"));
}

#[test]
fn evidence_is_labelled() {
    let o = quiddity(&["evidence", "-m", "4", "-f", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert!(v["note"].as_str().unwrap().starts_with("evidence only"));
    assert_eq!(v["above_modulus"], false);
}

use std::path::Path;
use std::process::{Command, Output};

use minfaith::families::{construct_family, FamilySpec, FamilyTag};
use minfaith::group::is_isomorphic;
use minfaith::io::load_corpus;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minfaith"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn construct_emits_a_corpus_entry() {
    let out = run(&["construct", "--family", "c", "--p", "7", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["groups"][0]["degree"], 21);
    assert_eq!(v["groups"][0]["expected"]["order"], 21);
}

#[test]
fn construct_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = run(&[
        "construct",
        "--family",
        "h",
        "--q",
        "3",
        "--m",
        "1",
        "--p",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let entries = load_corpus(&path).unwrap();
    let g = entries[0].build().unwrap();
    let spec = FamilySpec::new(FamilyTag::H)
        .with("q", 3)
        .with("m", 1)
        .with("p", 5);
    assert!(is_isomorphic(&g, &construct_family(&spec).unwrap()));
}

#[test]
fn rdim_with_oracle() {
    let out = run(&["rdim", "--family", "j", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["certificate"]["value"], 3);
    assert_eq!(v[0]["oracle"]["agrees"], true);
}

#[test]
fn invariants_chartab_and_minimal() {
    let v = json(&run(&["invariants", "--family", "e"]));
    assert_eq!(v[0]["invariants"]["order"], 27);
    assert_eq!(v[0]["invariants"]["class_count"], 11);
    let v = json(&run(&["chartab", "--family", "deg2.Q8"]));
    assert_eq!(v[0]["table"]["irreducibles"].as_array().unwrap().len(), 5);
    let v = json(&run(&["minimal", "--family", "b", "--p", "2", "--k", "1"]));
    assert_eq!(v[0]["report"]["degree"], 3);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(run(&["rdim"]).status.code(), Some(2));
    assert_eq!(
        run(&["classify", "--corpus", "x.json", "--degree", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["construct", "--family", "b", "--p", "7", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["construct", "--family", "zz"]).status.code(), Some(2));
    // cap
    assert_eq!(
        run(&["rdim", "--family", "a", "--p", "13"]).status.code(),
        Some(3)
    );
    // I/O and parse
    assert_eq!(
        run(&["rdim", "--in", "/nonexistent/corpus.json"])
            .status
            .code(),
        Some(4)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"groups": [{"id": "dup", "degree": 2, "generators": [[0, 0]]}]}"#,
    )
    .unwrap();
    let out = run(&["rdim", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dup"));
}

#[test]
fn inconsistency_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    // C4 asserted to have rdim 2
    std::fs::write(
        &path,
        r#"{"groups": [{"id": "c4", "degree": 4, "generators": [[1, 2, 3, 0]], "expected": {"rdim": 2}}]}"#,
    )
    .unwrap();
    let out = run(&[
        "classify",
        "--corpus",
        path.to_str().unwrap(),
        "--degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bundled_classification_is_clean() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/bundled.json");
    for degree in ["2", "3"] {
        let out = run(&[
            "classify",
            "--corpus",
            corpus.to_str().unwrap(),
            "--degree",
            degree,
            "--jobs",
            "2",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let v = json(&out);
        assert_eq!(v["verdicts"].as_array().unwrap().len(), 74);
    }
}

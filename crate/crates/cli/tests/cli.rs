use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn flagpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagpoly")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).expect("schema json")
}

fn assert_valid(name: &str, doc: &Value) {
    let validator = jsonschema::validator_for(&schema(name)).expect("valid schema");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{doc}");
}

fn json_of(args: &[&str], expect_code: i32) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = flagpoly(&full);
    assert_eq!(code(&out), expect_code, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).expect("json on stdout")
}

#[test]
fn ehrhart_expands_to_cube() {
    let out = flagpoly(&["ehrhart", "--type", "A", "--rank", "2", "--levi", "", "--weight", "2,2", "--expand"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "8n^3+12n^2+6n+1");
    let out = flagpoly(&["ehrhart", "--type", "A", "--rank", "2", "--levi", "", "--weight", "2,2"]);
    assert_eq!(stdout(&out).trim(), "(2n+1)^3");
}

#[test]
fn grassmannian_polytope_is_not_reflexive() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.json");
    let q = q.to_str().unwrap();
    let word = "1,3,2,1,3,2,4,3,2,1,5,4,3,2,1";
    let args = ["string-polytope", "--type", "A", "--rank", "5", "--word", word, "--weight", "0,0,1,0,0"];
    let out = flagpoly(&[&args[..], &["--method", "cone", "--out", q]].concat());
    assert_eq!(code(&out), 0);
    assert_valid("polytope", &serde_json::from_str(&std::fs::read_to_string(q).unwrap()).unwrap());
    let out = flagpoly(&["analyze", q, "--reflexive"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not-lattice"));
    let doc = json_of(&["analyze", q, "--reflexive", "--count"], 1);
    assert_valid("analyze", &doc);
    assert_eq!(doc["lattice_points"], 20);
}

#[test]
fn reflexive_polytope_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("b2.json");
    let q = q.to_str().unwrap();
    let args = ["string-polytope", "--type", "B", "--rank", "2", "--word", "2,1,2,1", "--weight", "0,4", "--out", q];
    let doc = json_of(&args, 0);
    assert_valid("string-polytope", &doc);
    assert_eq!(doc["certificate"], 1);
    let doc = json_of(&["analyze", q, "--reflexive"], 0);
    assert_eq!(doc["reflexivity"]["translation"], serde_json::json!(["1", "2", "3", "0"]));
}

#[test]
fn g2_fixture_reports_the_interior_point() {
    let doc = json_of(&["reproduce", "g2-short"], 0);
    assert_valid("report", &doc);
    assert!(doc.to_string().contains("(1,2,5,3,4,1)"));
}

#[test]
fn exit_codes() {
    let bad_weight = flagpoly(&["dimension", "--type", "A", "--rank", "2", "--weight", "1"]);
    assert_eq!(code(&bad_weight), 2);
    let bad_flag = flagpoly(&["dimension", "--type", "Q", "--rank", "2", "--weight", "1,1"]);
    assert_eq!(code(&bad_flag), 2);
    let doc = json_of(&["string-polytope", "--type", "B", "--rank", "2", "--weight", "0,1", "--method", "cone"], 3);
    assert_valid("error", &doc);
    assert_eq!(doc["error"], "unsupported");
    let capped = Command::new(env!("CARGO_BIN_EXE_flagpoly"))
        .args(["string-polytope", "--type", "G", "--rank", "2", "--weight", "2,2"])
        .env("FLAGPOLY_CRYSTAL_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 4);
    let bound = flagpoly(&["string-polytope", "--type", "B", "--rank", "2", "--weight", "0,1", "--n-max", "1"]);
    assert_eq!(code(&bound), 4);
    let bad_cap = Command::new(env!("CARGO_BIN_EXE_flagpoly"))
        .args(["roots", "--type", "A", "--rank", "1"])
        .env("FLAGPOLY_CRYSTAL_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&bad_cap), 2);
    let reduced = flagpoly(&["string-polytope", "--type", "A", "--rank", "2", "--word", "1,1,2", "--weight", "1,1"]);
    assert_eq!(code(&reduced), 2);
}

#[test]
fn every_command_matches_its_schema() {
    let a2 = ["--type", "A", "--rank", "2"];
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("roots", vec!["roots", "--type", "G", "--rank", "2"]),
        ("parabolic", [&["parabolic"][..], &a2, &["--levi", "1"]].concat()),
        ("anticanonical", [&["anticanonical"][..], &a2, &["--levi", ""]].concat()),
        ("dimension", [&["dimension"][..], &a2, &["--weight", "1,1"]].concat()),
        ("ehrhart", vec!["ehrhart", "--type", "B", "--rank", "2", "--weight", "0,4"]),
        ("classify", [&["classify"][..], &a2, &["--weight", "2,2"]].concat()),
        ("string-polytope", [&["string-polytope"][..], &a2, &["--weight", "1,1"]].concat()),
        ("report", vec!["verify", "lemmas", "--families", "A,B,G", "--max-rank", "3"]),
        ("report", vec!["verify", "main-theorem", "--max-rank", "3", "--policy", "support"]),
        ("report", vec!["verify", "conjecture", "--families", "A", "--max-rank", "2"]),
        ("report", vec!["verify", "crosscheck", "--type", "A", "--rank", "2", "--weight", "2,2", "--n-max", "1"]),
        ("reproduce-all", vec!["reproduce", "all"]),
    ];
    for (name, args) in cases {
        let doc = json_of(&args, 0);
        assert_valid(name, &doc);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["string-polytope", "--type", "G", "--rank", "2", "--word", "2,1,2,1,2,1", "--weight", "1,1", "--json"];
    let one = flagpoly(&[&args[..], &["--threads", "1"]].concat());
    let many = flagpoly(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, flagpoly(&args).stdout);
}

#[test]
fn conjecture_with_explicit_words() {
    let doc = json_of(&["verify", "conjecture", "--word", "B2:2,1,2,1", "--coeff", "2"], 0);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 8);
    let unsupported = flagpoly(&["verify", "conjecture", "--word", "G2:1,2,1,2,1,2"]);
    assert_eq!(code(&unsupported), 3);
    let malformed = flagpoly(&["verify", "conjecture", "--word", "B2-2121"]);
    assert_eq!(code(&malformed), 2);
}

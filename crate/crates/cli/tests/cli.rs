use std::path::{Path, PathBuf};
use std::process::Command;

use mystic_core::json::{lines_to_json, scalar_from_json};
use mystic_core::rsb::random_lines;
use mystic_core::scalar::parse_scalar;
use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
    json: Value,
}

fn mystic(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_mystic")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Run { code: out.status.code().unwrap(), stdout, stderr: String::from_utf8(out.stderr).unwrap(), json }
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn validator(name: &str) -> jsonschema::Validator {
    let load = |f: &str| -> Value { serde_json::from_str(&std::fs::read_to_string(schema_dir().join(f)).unwrap()).unwrap() };
    let mut opts = jsonschema::options();
    for f in ["point.schema.json", "points.schema.json", "lines.schema.json", "constraints.schema.json"] {
        let doc = load(f);
        let id = doc["$id"].as_str().unwrap().to_string();
        opts = opts.with_resource(id, jsonschema::Resource::from_contents(doc).unwrap());
    }
    opts.build(&load(name)).unwrap()
}

fn assert_valid(schema: &str, doc: &Value) {
    let v = validator(schema);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}\n{doc:#}");
}

/// Checks the verdict schema and that every witness parses back exactly.
fn assert_verdict(run: &Run) {
    assert_valid("verdict.schema.json", &run.json);
    for (_, w) in run.json["witnesses"].as_object().unwrap() {
        let strings: Vec<&str> = match w {
            Value::String(s) => vec![s.as_str()],
            Value::Array(items) => items
                .iter()
                .flat_map(|x| match x {
                    Value::Array(row) => row.iter().map(|y| y.as_str().unwrap()).collect(),
                    other => vec![other.as_str().unwrap()],
                })
                .collect(),
            other => panic!("unexpected witness {other}"),
        };
        for s in strings {
            assert_eq!(parse_scalar(s).unwrap().to_string(), s);
        }
    }
}

fn write(dir: &tempfile::TempDir, name: &str, doc: &Value) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string(doc).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn pascal_identity_is_proved() {
    let r = mystic(&["pascal", "identity"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["proved"], json!(true));
    assert_eq!(r.json["degree"], json!(12));
    assert_verdict(&r);
}

#[test]
fn pascal_check_conic_and_degenerate() {
    let dir = tempfile::tempdir().unwrap();
    let conic = json!([[1, 0, 0], [1, 1, 1], [1, 2, 4], [1, 3, 9], [1, 4, 16], [0, 0, 1]]);
    let r = mystic(&["pascal", "check", "--input", &write(&dir, "conic.json", &conic)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["witnesses"]["F"], json!("0"));
    assert_verdict(&r);

    let off = json!([[1, 0, 0], [1, 1, 1], [1, 2, 4], [1, 3, 9], [1, 4, 16], [1, 5, 26]]);
    let r = mystic(&["pascal", "check", "--input", &write(&dir, "off.json", &off)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["witnesses"]["F"], r.json["witnesses"]["G"]);
    assert_verdict(&r);

    // sides 12 and 45 coincide
    let bad = json!([[1, 0, 0], [0, 1, 0], [1, 1, 1], [1, 2, 0], [2, 1, 0], [1, 5, 7]]);
    let r = mystic(&["pascal", "check", "--input", &write(&dir, "bad.json", &bad)]);
    assert_eq!(r.code, 2, "{}", r.stdout);
    assert!(!r.json["hypothesis_errors"].as_array().unwrap().is_empty());
    assert_verdict(&r);
}

#[test]
fn rnc_sample_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = mystic(&["rnc", "sample", "--d", "4", "--seed", "3"]);
    let b = mystic(&["rnc", "sample", "--d", "4", "--seed", "3"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_valid("points.schema.json", &a.json);
    let r = mystic(&["rnc", "check", "--d", "4", "--input", &write(&dir, "s.json", &a.json)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["member"], json!(true));
    assert_verdict(&r);

    let mut moved = a.json.clone();
    let x = scalar_from_json(&moved["points"][7][0]).unwrap() + parse_scalar("1").unwrap();
    moved["points"][7][0] = json!(x.to_string());
    let r = mystic(&["rnc", "check", "--d", "4", "--input", &write(&dir, "m.json", &moved)]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert_verdict(&r);
}

#[test]
fn rnc_jacobian_has_full_rank() {
    let r = mystic(&["rnc", "jacobian", "--d", "5", "--seed", "2"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["rank"], json!(4));
    assert_verdict(&r);
}

#[test]
fn rsb_random_lines_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let doc = lines_to_json(&random_lines(5));
    assert_valid("lines.schema.json", &doc);
    let r = mystic(&["rsb", "check", "--input", &write(&dir, "l.json", &doc)]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert_eq!(r.json["witnesses"]["F"], r.json["witnesses"]["G"]);
    assert_verdict(&r);
}

#[test]
fn rsb_sampled_lines_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let s = mystic(&["rsb", "sample", "--seed", "6"]);
    assert_eq!(s.code, 0);
    assert_valid("lines.schema.json", &s.json);
    assert_eq!(s.stdout, mystic(&["rsb", "sample", "--seed", "6"]).stdout);
    let r = mystic(&["rsb", "check", "--input", &write(&dir, "l.json", &s.json)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["witnesses"]["F"], json!("0"));
    assert_verdict(&r);
}

#[test]
fn rsb_identity_modes() {
    let r = mystic(&["rsb", "identity", "--mode", "pit", "--trials", "20", "--seed", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["trials"], json!(20));
    assert_verdict(&r);
    let r = mystic(&["rsb", "identity", "--mode", "symbolic"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["degree"], json!(15));
    let r = mystic(&["rsb", "identity", "--mode", "symbolic", "--term-ceiling", "50"]);
    assert_eq!(r.code, 3);
    let r = mystic(&["rsb", "identity", "--mode", "pit", "--trials", "0"]);
    assert_eq!(r.code, 3);
}

#[test]
fn quadric3_commands() {
    let dir = tempfile::tempdir().unwrap();
    let segre: Vec<Value> = [(1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1), (1, 2, 3, 4), (2, 1, 1, 3), (1, -1, 2, 1), (3, 1, 1, 2)]
        .iter()
        .map(|&(s, t, u, v)| json!({"point": [s * u, s * v, t * u, t * v]}))
        .chain([json!({"line": [[1, 0, 0, 0], [0, 1, 0, 0]]})])
        .collect();
    let doc = json!({ "constraints": segre });
    assert_valid("constraints.schema.json", &doc);
    let r = mystic(&["quadric3", "exists", "--input", &write(&dir, "c.json", &doc)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_verdict(&r);

    let r = mystic(&["quadric3", "p3l", "--input", &write(&dir, "p.json", &json!({"r": [[1, 5, 1, 1], [1, 1, 7, 1], [1, 2, 2, 9]]}))]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["concurrent"], json!(true));
    let r = mystic(&["quadric3", "p3l", "--input", &write(&dir, "q.json", &json!({"r": [[1, 1, 1, 2], [1, 2, 1, 1], [1, 1, 2, 1]]}))]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert_eq!(r.json["witnesses"]["concurrency_factor"], json!("-7"));
    assert_verdict(&r);

    let general = json!({"point": [1, 0, 0, 0], "lines": [[[0, 1, 0, 0], [1, 5, 1, 1]], [[0, 0, 1, 0], [1, 1, 7, 1]], [[0, 0, 0, 1], [1, 2, 2, 9]]]});
    let r = mystic(&["quadric3", "p3l", "--input", &write(&dir, "g.json", &general)]);
    assert_eq!(r.code, 0, "{}", r.stdout);

    let four_two = json!({
        "points": [[1, 0, 1, 0], [1, 1, 1, 1], [2, 3, 4, 6], [1, 2, 3, 6]],
        "lines": [[[1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 1, 0], [0, 0, 0, 1]]]
    });
    let r = mystic(&["quadric3", "reduce42", "--input", &write(&dir, "r.json", &four_two)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["reduced_exists"], json!(true));
    assert_verdict(&r);

    let r = mystic(&["quadric3", "identity-factorization"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["degree"], json!(9));
    assert_verdict(&r);
}

#[test]
fn malformed_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "[[1, 2, ").unwrap();
    let r = mystic(&["pascal", "check", "--input", path.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("parse error"));
    let r = mystic(&["rnc", "check", "--d", "3", "--input", &write(&dir, "f.json", &json!([[0.5, 1]]))]);
    assert_eq!(r.code, 3);
    let r = mystic(&["rnc", "check", "--d", "3", "--input", "/nonexistent/file.json"]);
    assert_eq!(r.code, 3);
}

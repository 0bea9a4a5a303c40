mod common;

use common::{harmonica, json, repo_path};
use jsonschema::{Resource, Validator};
use serde_json::Value;

fn load(name: &str) -> Value {
    let path = repo_path(&format!("schemas/{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn validator(name: &str) -> Validator {
    jsonschema::options()
        .with_resource("common.schema.json", Resource::from_contents(load("common")).unwrap())
        .build(&load(name))
        .unwrap()
}

fn assert_valid(schema: &str, doc: &Value) {
    let v = validator(schema);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{schema}: {}", errors.join("\n"));
}

#[test]
fn eval_explain_matches_schema() {
    let by_id = harmonica(&["eval", "--id", "lemSumHi2i1i2", "--n", "6", "--explain"]);
    assert_valid("eval", &json(&by_id));
    let g = harmonica(&[
        "eval", "--spec", "G", "--n", "5", "--p", "2", "--q", "1", "--r", "1", "--s", "3", "--m", "2", "--explain",
    ]);
    assert_valid("eval", &json(&g));
}

#[test]
fn index_matches_schema() {
    assert_valid("index", &json(&harmonica(&["index"])));
}

#[test]
fn verify_matches_schema() {
    assert_valid("verify", &json(&harmonica(&["verify", "--family", "MIXED"])));
    let failing = harmonica(&["verify", "--family", "LINEAR_H1", "--fixture", &common::fixture()]);
    assert_valid("verify", &json(&failing));
}

#[test]
fn limits_matches_schema() {
    let out = harmonica(&["limits", "--family", "QUADRATIC_H2", "--n", "2000", "--known-n", "2000"]);
    assert_valid("limits", &json(&out));
}

#[test]
fn bench_matches_schema() {
    let out = harmonica(&["bench", "--id", "lemSumHiii1", "--sizes", "1000", "--runs", "5"]);
    assert_valid("bench", &json(&out));
}

#[test]
fn schema_rejects_bad_rational() {
    let doc = serde_json::json!({ "value": "1.5", "decimal": "1.5", "trace": {} });
    assert!(!validator("eval").is_valid(&doc));
}

mod common;

use common::{fixture, harmonica, json, stderr, stdout};

fn first_line(out: &std::process::Output) -> String {
    stdout(out).lines().next().unwrap_or_default().to_string()
}

#[test]
fn eval_worked_examples() {
    let out = harmonica(&["eval", "--id", "lemSum0", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(first_line(&out), "3/4");
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("0.75"));

    let g = harmonica(&[
        "eval", "--spec", "G", "--n", "2", "--p", "1", "--q", "1", "--r", "1", "--s", "2", "--m", "1",
    ]);
    assert_eq!(first_line(&g), "7/24");

    assert_eq!(first_line(&harmonica(&["eval", "--id", "lemSumHi2sqisq", "--n", "1"])), "1");
}

#[test]
fn eval_policies_agree() {
    let base = ["eval", "--spec", "V", "--n", "9", "--p", "2", "--q", "2", "--r", "0", "--s", "3", "--m", "2"];
    let catalog = harmonica(&base);
    let oracle = harmonica(&[&base[..], &["--policy", "oracle"]].concat());
    assert!(catalog.status.success() && oracle.status.success());
    assert_eq!(stdout(&catalog), stdout(&oracle));
}

#[test]
fn eval_r_and_mixed() {
    let r = harmonica(&["eval", "--spec", "R", "--n", "3", "--p", "1", "--q", "1", "--r", "0", "--s", "1"]);
    assert_eq!(first_line(&r), "3/4");
    let mixed = harmonica(&["eval", "--spec", "MIXED", "--n", "0", "--r", "1"]);
    assert_eq!(first_line(&mixed), "0");
}

#[test]
fn explain_emits_trace() {
    let out = harmonica(&[
        "eval", "--spec", "G", "--n", "4", "--p", "2", "--q", "1", "--r", "0", "--s", "1", "--m", "1", "--explain",
    ]);
    let doc = json(&out);
    assert_eq!(doc["trace"]["value"], doc["value"]);
    assert_eq!(doc["trace"]["rule"], "PARTIAL_FRACTION_PGTQ");
    assert!(!doc["trace"]["children"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    let unknown = harmonica(&["eval", "--id", "noSuchSum", "--n", "3"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("noSuchSum"));

    let low_order = harmonica(&[
        "eval", "--spec", "G", "--n", "3", "--p", "1", "--q", "0", "--r", "0", "--s", "0", "--m", "1",
    ]);
    assert_eq!(low_order.status.code(), Some(3));

    let zero_m = harmonica(&[
        "eval", "--spec", "V", "--n", "3", "--p", "1", "--q", "1", "--r", "0", "--s", "1", "--m", "0",
    ]);
    assert_eq!(zero_m.status.code(), Some(3));

    let below_min = harmonica(&["eval", "--id", "lemSumHj1jm", "--n", "3", "--m", "0"]);
    assert_eq!(below_min.status.code(), Some(3));
}

#[test]
fn precision_from_environment() {
    let run = |bits: Option<&str>| {
        let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_harmonica"));
        cmd.args(["eval", "--id", "lemSum0", "--n", "3"]);
        match bits {
            Some(b) => cmd.env("HARMONICA_PRECISION_BITS", b),
            None => cmd.env_remove("HARMONICA_PRECISION_BITS"),
        };
        cmd.output().unwrap()
    };
    let decimals = |out: &std::process::Output| stdout(out).lines().nth(1).unwrap().len();
    let wide = run(None);
    let narrow = run(Some("64"));
    assert!(narrow.status.success());
    assert!(decimals(&narrow) < decimals(&wide));
    assert_eq!(run(Some("8")).status.code(), Some(2));
}

#[test]
fn index_lists_registry() {
    let doc = json(&harmonica(&["index"]));
    let entries = doc.as_array().unwrap();
    assert!(entries.len() >= 80);
    let mixed = json(&harmonica(&["index", "--family", "MIXED"]));
    assert_eq!(mixed.as_array().unwrap().len(), 3);
}

#[test]
fn verify_mixed_family() {
    let out = harmonica(&["verify", "--family", "MIXED"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc = json(&out);
    let map = doc.as_object().unwrap();
    assert_eq!(map.len(), 3);
    for (id, r) in map {
        assert_eq!(r["status"], "PASS", "{id}");
        assert!(r["first_failure_n"].is_null());
        assert_eq!(r["checked_range"][1], 100);
    }
}

#[test]
fn verify_deep_extends_range() {
    let out = harmonica(&["verify", "--family", "RATIONAL", "--deep", "--m-max", "2"]);
    assert!(out.status.success());
    assert!(json(&out).as_object().unwrap().values().all(|r| r["checked_range"][1] == 500));
}

#[test]
fn verify_catches_corrupted_registry() {
    let out = harmonica(&["verify", "--family", "LINEAR_H1", "--fixture", &fixture()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("lemSumHj1j2"));
    assert!(stderr(&out).contains("first failing n = 37"));
    let doc = json(&out);
    assert_eq!(doc["lemSumHj1j2"]["status"], "FAIL");
    assert_eq!(doc["lemSumHj1j2"]["first_failure_n"], 37);
    let failing = doc.as_object().unwrap().values().filter(|r| r["status"] == "FAIL").count();
    assert_eq!(failing, 1);
}

#[test]
fn limits_single_entry() {
    let out = harmonica(&["limits", "--id", "lemSumHisqi1i2"]);
    assert!(out.status.success());
    let doc = json(&out);
    let reports = doc["convergence"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["verdict"], "PASS");
    assert!(reports[0]["limit_value"].as_str().unwrap().starts_with("2.6449"));
    assert!(doc.get("known_limits").is_none());
}

#[test]
fn bench_reports_medians() {
    let out = harmonica(&["bench", "--id", "lemSumHiii1", "--sizes", "1000,2000", "--runs", "5"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc = json(&out);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert!(row["closed_form_median_ns"].as_u64().unwrap() > 0);
        assert!(row["discrepancy"].as_str().unwrap().trim_start_matches(['0', '.']).is_empty());
    }
    assert_eq!(harmonica(&["bench", "--runs", "3"]).status.code(), Some(2));
}

//! One line per acceptance criterion. Runs without the libtest harness so
//! the verdicts always reach the output.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{fixture, harmonica, json, stderr};
use harmonica::catalog::registry;
use harmonica::{BasePolicy, Evaluator, HarmonicTable, Rational, SumKind, SumSpec};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use serde_json::Value;

type Verdict = Result<String, String>;

const CATALOG_BUDGET: Duration = Duration::from_secs(60);
const PRINTED: [(&str, &str); 7] = [
    ("lemSumHi2i1sqi2", "0.167"),
    ("lemSumHi2i1i2sq", "0.123"),
    ("lemSumHi2i1sqi2sq", "0.044"),
    ("lemSumHisqi1i2", "2.645"),
    ("lemSumHi2sqi1i2", "0.859"),
    ("lemSumHi2sqisq", "2.250"),
    ("lemSumHi2i1i2", "0.645"),
];
const KNOWN_CONSTANTS: [u64; 5] = [1, 1, 1, 2, 1];
const PROPERTY_CASES: u32 = 10_000;

fn failures(doc: &Value) -> Vec<String> {
    doc.as_object()
        .map(|m| {
            m.iter()
                .filter(|(_, r)| r["status"] != "PASS")
                .map(|(id, r)| format!("{id} at n={}", r["first_failure_n"]))
                .collect()
        })
        .unwrap_or_else(|| vec!["verify output is not an object".into()])
}

fn closed_forms() -> Verdict {
    let start = Instant::now();
    let out = harmonica(&["verify", "--suite", "catalog", "--m-max", "8"]);
    let elapsed = start.elapsed();
    let doc = json(&out);
    let map = doc.as_object().ok_or("no report")?;
    let bad = failures(&doc);
    if !bad.is_empty() {
        return Err(format!("{} failing: {}", bad.len(), bad.join(", ")));
    }
    if map.len() < 80 || map.len() != registry().len() {
        return Err(format!("only {} ids checked", map.len()));
    }
    if let Some((id, _)) = map.iter().find(|(_, r)| r["checked_range"][1] != 100) {
        return Err(format!("{id} not checked to n=100"));
    }
    if elapsed > CATALOG_BUDGET {
        return Err(format!("took {:.1}s", elapsed.as_secs_f64()));
    }
    let instances: u64 = map.values().map(|r| r["instances"].as_u64().unwrap_or(0)).sum();
    Ok(format!(
        "{} ids, {instances} parameter instances, n<=100, {:.1}s",
        map.len(),
        elapsed.as_secs_f64()
    ))
}

fn reductions() -> Verdict {
    let out = harmonica(&["verify", "--suite", "recursion", "--suite", "policy"]);
    let doc = json(&out);
    let bad = failures(&doc);
    if !bad.is_empty() || !out.status.success() {
        return Err(format!("{} failing: {}", bad.len(), bad.join(", ")));
    }
    let map = doc.as_object().ok_or("no report")?;
    let count = |prefix: &str| map.keys().filter(|k| k.starts_with(prefix)).count();
    // p+q in [2,4] gives 12 (p, q) pairs; times 16 shifts, 2 orders, G and V
    let expected = 12 * 16 * 2 * 2;
    if count("recursion/") != expected || count("policy/") != expected {
        return Err(format!("expected {expected} shapes per suite"));
    }
    Ok(format!("{expected} G/V shapes, n<=50, catalog-first and oracle-only"))
}

fn limits_report() -> Result<Value, String> {
    let out = harmonica(&["limits"]);
    if !out.status.success() {
        return Err(format!("limits exited {:?}: {}", out.status.code(), stderr(&out)));
    }
    Ok(json(&out))
}

fn convergence(doc: &Value) -> Verdict {
    if doc["precision_bits"] != 256 || doc["n"] != 10_000 {
        return Err("report not at N=10^4, 256 bits".into());
    }
    let reports = doc["convergence"].as_array().ok_or("no reports")?;
    if let Some(r) = reports.iter().find(|r| r["verdict"] != "PASS") {
        return Err(format!("{} {} did not converge within its bound", r["id"], r["params"]));
    }
    for (id, printed) in PRINTED {
        let r = reports.iter().find(|r| r["id"] == id).ok_or(format!("{id} missing"))?;
        if r["printed_value"] != printed || r["printed_matches"] != true {
            return Err(format!("{id}: limit {} does not print as {printed}", r["limit_value"]));
        }
    }
    Ok(format!("{} instances converge; 7 printed decimals reproduced", reports.len()))
}

fn known_limits(doc: &Value) -> Verdict {
    let table = &doc["known_limits"];
    let rows = table["rows"].as_array().ok_or("no known-limit table")?;
    if table["n"] != 100_000 || rows.len() != KNOWN_CONSTANTS.len() {
        return Err("table not at N=10^5 with five rows".into());
    }
    for (row, c) in rows.iter().zip(KNOWN_CONSTANTS) {
        if row["bound_constant"] != c || row["verdict"] != "PASS" {
            return Err(format!("{}: gap {} bound {}", row["sum"], row["gap"], row["bound"]));
        }
    }
    let z = &doc["zeta6_identity"];
    if z["precision_bits"] != 200 || z["verdict"] != "PASS" {
        return Err(format!("zeta(6) identity off by {}", z["difference"]));
    }
    Ok("5 sums within C ln^2 N / N at N=10^5; zeta(6) identity at 200 bits".into())
}

fn theorem_spec() -> impl Strategy<Value = SumSpec> {
    (any::<bool>(), 0u64..=40, 0u32..=4, 0u32..=4, 0u64..=3, 0u64..=3, 1u32..=2)
        .prop_filter("p + q in [2, 4]", |&(_, _, p, q, ..)| (2..=4).contains(&(p + q)))
        .prop_map(|(v, n, p, q, r, s, m)| if v { SumSpec::v(n, p, q, r, s, m) } else { SumSpec::g(n, p, q, r, s, m) })
}

fn entry_choice() -> impl Strategy<Value = (usize, usize, u64, u64)> {
    (0..registry().len(), 0usize..64, 0u64..=50, 0u64..=50)
}

fn partial(spec: &SumSpec, from: u64, to: u64, table: &HarmonicTable) -> Rational {
    (from + 1..=to).map(|j| spec.summand(j, table).unwrap()).sum()
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what()))
    }
}

fn properties() -> Verdict {
    let table = HarmonicTable::build(120, 8).map_err(|e| e.to_string())?;
    let catalog = Evaluator::new(&table, BasePolicy::CatalogFirst);
    let oracle = Evaluator::new(&table, BasePolicy::OracleOnly);
    let mut runner = TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    let reduce = |ev: &Evaluator, spec: &SumSpec| ev.eval(spec).map_err(|e| TestCaseError::fail(e.to_string()));
    let pick = |idx: usize, choice: usize| {
        let entry = &registry().entries()[idx];
        let grid = entry.domain.grid(6);
        (entry, grid[choice % grid.len()])
    };

    let mut names = Vec::new();
    let mut run = |name: &str, result: Result<(), String>| {
        names.push(name.to_string());
        result.map_err(|e| format!("{name}: {e}"))
    };

    run(
        "additivity",
        runner
            .run(&entry_choice(), |(idx, choice, a, b)| {
                let (entry, params) = pick(idx, choice);
                let a = a.max(entry.n_min);
                let whole: Rational = entry.evaluate(a + b, params, &table).unwrap();
                let head: Rational = entry.evaluate(a, params, &table).unwrap();
                let tail = partial(&entry.spec(a + b, params), a, a + b, &table);
                check(whole - head == tail, || format!("{} at a={a}, b={b}", entry.id))
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "telescoping",
        runner
            .run(&entry_choice(), |(idx, choice, n, _)| {
                let (entry, params) = pick(idx, choice);
                let n = n.max(entry.n_min + 1);
                let here: Rational = entry.evaluate(n, params, &table).unwrap();
                let before: Rational = entry.evaluate(n - 1, params, &table).unwrap();
                let term = entry.spec(n, params).summand(n, &table).unwrap();
                check(here - before == term, || format!("{} at n={n}", entry.id))
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "shift symmetry",
        runner
            .run(&theorem_spec(), |spec| {
                let (p, q, r, s) = (spec.p(), spec.q(), spec.r(), spec.s());
                let swapped = match spec.kind {
                    SumKind::V => SumSpec::v(spec.n, q, p, s, r, spec.order),
                    _ => SumSpec::g(spec.n, q, p, s, r, spec.order),
                };
                let value = reduce(&catalog, &spec)?.value;
                check(value == reduce(&catalog, &swapped)?.value, || format!("{spec} vs {swapped}"))?;
                check(value == partial(&spec, 0, spec.n, &table), || format!("{spec} vs direct sum"))
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "trace replay",
        runner
            .run(&theorem_spec(), |spec| {
                let trace = reduce(&catalog, &spec)?;
                check(trace.is_consistent() && trace.replay() == trace.value, || spec.to_string())
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "base-policy independence",
        runner
            .run(&theorem_spec(), |spec| {
                let a = reduce(&catalog, &spec)?.value;
                check(a == reduce(&oracle, &spec)?.value, || spec.to_string())
            })
            .map_err(|e| e.to_string()),
    )?;
    Ok(format!("{} at {PROPERTY_CASES} cases each", names.join(", ")))
}

fn negative_control() -> Verdict {
    let out = harmonica(&["verify", "--suite", "catalog", "--fixture", &fixture()]);
    let notes = stderr(&out);
    if out.status.code() != Some(1) {
        return Err(format!("verify exited {:?}", out.status.code()));
    }
    let doc = json(&out);
    let failing = failures(&doc);
    if failing != ["lemSumHj1j2 at n=37"] {
        return Err(format!("unexpected failures: {failing:?}"));
    }
    if !notes.contains("lemSumHj1j2") || !notes.contains("first failing n = 37") {
        return Err(format!("diagnostic does not name the id and n: {notes}"));
    }
    Ok("corrupted lemSumHj1j2 reported at n=37, exit 1".into())
}

fn main() -> ExitCode {
    let limits = limits_report();
    let from_limits = |f: fn(&Value) -> Verdict| limits.as_ref().map_err(Clone::clone).and_then(f);
    let criteria: [(&str, Box<dyn FnOnce() -> Verdict>); 6] = [
        ("closed forms match direct summation", Box::new(closed_forms)),
        ("G/V reductions match the oracle", Box::new(reductions)),
        ("convergence at N=10^4", Box::new(move || from_limits(convergence))),
        ("known limits at N=10^5", Box::new(move || from_limits(known_limits))),
        ("property suites", Box::new(properties)),
        ("corrupted registry is caught", Box::new(negative_control)),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                all = false;
                ("FAIL", d)
            }
        };
        println!("criterion {}: {tag}  {name}: {detail}", i + 1);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

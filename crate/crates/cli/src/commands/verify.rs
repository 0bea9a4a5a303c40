use std::collections::BTreeMap;

use harmonica::catalog::{registry, Registry};
use harmonica::{BasePolicy, Evaluator, FormulaEntry, HarmonicTable, Rational, SumSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::{Suite, VerifyArgs};
use crate::exit::{json, CliError, CliResult, ExitCode, Output};

const N_MAX: u64 = 100;
const DEEP_N_MAX: u64 = 500;
const THEOREM_N_MAX: u64 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    /// Inclusive `[n_lo, n_hi]`.
    pub checked_range: [u64; 2],
    pub status: Status,
    pub first_failure_n: Option<u64>,
    /// Parameter instances swept (1 for fixed entries).
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A registry with one closed form knocked off from some `n` on; used to
/// show that `verify` notices.
#[derive(Debug, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub from_n: u64,
}

fn check_entry(entry: &FormulaEntry, n_max: u64, m_max: u64, table: &HarmonicTable) -> CheckResult {
    let grid = entry.domain.grid(m_max);
    let mut first_failure: Option<(u64, String)> = None;
    for &params in &grid {
        let spec_at = |n| entry.spec(n, params);
        let mut expected = Rational::zero();
        for n in 1..entry.n_min {
            expected += spec_at(n).summand(n, table).expect("table covers sweep");
        }
        for n in entry.n_min..=n_max {
            if n > 0 {
                expected += spec_at(n).summand(n, table).expect("table covers sweep");
            }
            let got: Result<Rational, _> = entry.evaluate(n, params, table);
            let bad = match got {
                Ok(v) if v == expected => None,
                Ok(v) => Some(format!("{params:?}: closed form {v}, direct sum {expected}")),
                Err(e) => Some(format!("{params:?}: {e}")),
            };
            if let Some(why) = bad {
                if first_failure.as_ref().is_none_or(|(f, _)| n < *f) {
                    first_failure = Some((n, why));
                }
                break;
            }
        }
    }
    CheckResult {
        checked_range: [entry.n_min, n_max],
        status: if first_failure.is_some() { Status::Fail } else { Status::Pass },
        first_failure_n: first_failure.as_ref().map(|(n, _)| *n),
        instances: grid.len(),
        detail: first_failure.map(|(_, why)| why),
    }
}

#[derive(Debug, Clone, Copy)]
struct Shape {
    v: bool,
    p: u32,
    q: u32,
    r: u64,
    s: u64,
    m: u32,
}

impl Shape {
    fn all() -> Vec<Shape> {
        let mut out = Vec::new();
        for v in [false, true] {
            for p in 0..=4 {
                for q in 0..=4 {
                    if !(2..=4).contains(&(p + q)) {
                        continue;
                    }
                    for r in 0..=3 {
                        for s in 0..=3 {
                            for m in 1..=2 {
                                out.push(Shape { v, p, q, r, s, m });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn spec(&self, n: u64) -> SumSpec {
        if self.v {
            SumSpec::v(n, self.p, self.q, self.r, self.s, self.m)
        } else {
            SumSpec::g(n, self.p, self.q, self.r, self.s, self.m)
        }
    }

    fn key(&self, suite: &str) -> String {
        let kind = if self.v { "V" } else { "G" };
        let Shape { p, q, r, s, m, .. } = *self;
        format!("{suite}/{kind}(p={p},q={q},r={r},s={s},m={m})")
    }
}

fn result_from(first: Option<(u64, String)>, hi: u64) -> CheckResult {
    CheckResult {
        checked_range: [0, hi],
        status: if first.is_some() { Status::Fail } else { Status::Pass },
        first_failure_n: first.as_ref().map(|(n, _)| *n),
        instances: 1,
        detail: first.map(|(_, why)| why),
    }
}

/// Trace consistency costs as much as the reduction, so it is sampled.
const REPLAY_AT: [u64; 4] = [1, 2, 7, THEOREM_N_MAX];

/// Evaluators shared by one worker; their leaf memos carry across shapes.
struct Workers<'a> {
    catalog: Evaluator<'a>,
    oracle: Evaluator<'a>,
}

/// Catalog-first reduction against the running direct sum.
fn check_recursion(shape: Shape, table: &HarmonicTable, ev: &Evaluator) -> CheckResult {
    let mut expected = Rational::zero();
    let mut first = None;
    for n in 0..=THEOREM_N_MAX {
        let spec = shape.spec(n);
        if n > 0 {
            expected += spec.summand(n, table).expect("table covers sweep");
        }
        let bad = match ev.eval(&spec) {
            Ok(t) if t.value != expected => Some(format!("reduction {}, direct sum {expected}", t.value)),
            Ok(t) if REPLAY_AT.contains(&n) && !t.is_consistent() => Some("inconsistent trace".into()),
            Ok(_) => None,
            Err(e) => Some(e.to_string()),
        };
        if let Some(why) = bad {
            first = Some((n, why));
            break;
        }
    }
    result_from(first, THEOREM_N_MAX)
}

/// Catalog-first against oracle-only reduction.
fn check_policy(shape: Shape, w: &Workers) -> CheckResult {
    let mut first = None;
    for n in 0..=THEOREM_N_MAX {
        let spec = shape.spec(n);
        let bad = match (w.catalog.eval(&spec), w.oracle.eval(&spec)) {
            (Ok(a), Ok(b)) if a.value == b.value => None,
            (Ok(a), Ok(b)) => Some(format!("catalog-first {}, oracle-only {}", a.value, b.value)),
            (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        };
        if let Some(why) = bad {
            first = Some((n, why));
            break;
        }
    }
    result_from(first, THEOREM_N_MAX)
}

fn load_registry(args: &VerifyArgs) -> Result<Option<Registry>, CliError> {
    let Some(path) = &args.fixture else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let fixture: Fixture = serde_json::from_str(&text)?;
    Ok(Some(Registry::with_perturbed(&fixture.id, fixture.from_n)?))
}

pub fn run(args: &VerifyArgs) -> CliResult {
    let owned = load_registry(args)?;
    let reg = owned.as_ref().unwrap_or_else(|| registry());
    let n_max = args
        .n_max
        .unwrap_or(if args.deep { DEEP_N_MAX } else { N_MAX });
    let suites: Vec<Suite> = match (&args.suite[..], args.family) {
        ([], Some(_)) => vec![Suite::Catalog],
        ([], None) => vec![Suite::Catalog, Suite::Recursion, Suite::Policy],
        (s, _) => s.to_vec(),
    };

    let mut results: BTreeMap<String, CheckResult> = BTreeMap::new();
    if suites.contains(&Suite::Catalog) {
        let table = HarmonicTable::build(n_max + 3 * args.m_max + 8, 6)?;
        let entries = reg.list(args.family);
        let checked: Vec<(String, CheckResult)> = entries
            .par_iter()
            .map(|e| (e.id.to_string(), check_entry(e, n_max, args.m_max, &table)))
            .collect();
        results.extend(checked);
    }
    let theorem = [Suite::Recursion, Suite::Policy];
    if suites.iter().any(|s| theorem.contains(s)) {
        let table = HarmonicTable::build(THEOREM_N_MAX + 16, 10)?;
        let shapes = Shape::all();
        for suite in theorem.into_iter().filter(|s| suites.contains(s)) {
            let checked: Vec<(String, CheckResult)> = shapes
                .par_iter()
                .map_init(
                    || Workers {
                        catalog: Evaluator::new(&table, BasePolicy::CatalogFirst),
                        oracle: Evaluator::new(&table, BasePolicy::OracleOnly),
                    },
                    |w, &shape| match suite {
                        Suite::Recursion => (shape.key("recursion"), check_recursion(shape, &table, &w.catalog)),
                        _ => (shape.key("policy"), check_policy(shape, w)),
                    },
                )
                .collect();
            results.extend(checked);
        }
    }

    let notes: Vec<String> = results
        .iter()
        .filter(|(_, r)| r.status == Status::Fail)
        .map(|(id, r)| {
            format!(
                "FAIL {id}: first failing n = {}",
                r.first_failure_n.map_or("?".into(), |n| n.to_string())
            )
        })
        .collect();
    let code = if notes.is_empty() { ExitCode::Ok } else { ExitCode::CheckFailed };
    Ok(Output {
        stdout: json(&results)?,
        notes,
        code,
    })
}

use harmonica::catalog::registry;
use harmonica::recursion::{rational_sum, Rule};
use harmonica::{
    direct_eval, BasePolicy, Error, Evaluator, HarmonicTable, Params, Rational, SumSpec, TraceNode,
};
use serde::Serialize;

use super::digits_for;
use crate::args::{EvalArgs, SpecKind};
use crate::exit::{json, CliResult, Output};

#[derive(Serialize)]
struct Explained<'a> {
    value: &'a Rational,
    decimal: String,
    trace: &'a TraceNode,
}

fn need<T>(value: Option<T>, name: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this sum")))
}

fn small(value: u64, name: &str) -> Result<u32, Error> {
    u32::try_from(value).map_err(|_| Error::InvalidParameter(format!("--{name} is too large")))
}

fn spec_from(args: &EvalArgs, kind: SpecKind) -> Result<SumSpec, Error> {
    let n = args.n;
    Ok(match kind {
        SpecKind::G | SpecKind::V => {
            let p = need(args.p, "p")?;
            let q = args.q.unwrap_or(0);
            let r = args.r.unwrap_or(0);
            let s = args.s.unwrap_or(0);
            let m = small(need(args.m, "m")?, "m")?;
            if kind == SpecKind::G {
                SumSpec::g(n, p, q, r, s, m)
            } else {
                SumSpec::v(n, p, q, r, s, m)
            }
        }
        SpecKind::R => {
            let p = need(args.p, "p")?;
            let q = args.q.unwrap_or(0);
            if p + q == 0 {
                return Err(Error::InvalidParameter("R needs p + q >= 1".into()));
            }
            SumSpec::r2(n, p, q, args.r.unwrap_or(0), args.s.unwrap_or(0))
        }
        SpecKind::Mixed => SumSpec::mixed(n, args.r.unwrap_or(0)),
    })
}

/// Table wide enough for the sum and for every base closed form a
/// reduction might reach.
fn table_for(spec: &SumSpec) -> Result<HarmonicTable, Error> {
    let reach = spec.factors.iter().map(|f| f.shift).max().unwrap_or(0) + spec.h_shift;
    let degree = spec.degree();
    HarmonicTable::build(spec.n + reach + 8, (degree + 2 * spec.order + 2).max(6))
}

fn leaf(spec: SumSpec, rule: Rule, source: Option<String>, value: Rational) -> TraceNode {
    TraceNode {
        spec,
        rule,
        source,
        value,
        children: Vec::new(),
    }
}

fn eval_spec(args: &EvalArgs, kind: SpecKind) -> Result<TraceNode, Error> {
    let spec = spec_from(args, kind)?;
    let table = table_for(&spec)?;
    let policy = BasePolicy::from(args.policy);
    match kind {
        SpecKind::G | SpecKind::V => Evaluator::new(&table, policy).eval(&spec),
        SpecKind::R => {
            let value = match policy {
                BasePolicy::CatalogFirst => rational_sum(&spec, &table),
                BasePolicy::OracleOnly => direct_eval(&spec, &table)?,
            };
            let rule = match policy {
                BasePolicy::CatalogFirst => Rule::BaseCatalog,
                BasePolicy::OracleOnly => Rule::BaseOracle,
            };
            let source = (rule == Rule::BaseCatalog).then(|| "partial fractions".to_string());
            Ok(leaf(spec, rule, source, value))
        }
        SpecKind::Mixed => {
            if policy == BasePolicy::CatalogFirst {
                if let Some(entry) = registry().find_by_spec(&spec) {
                    let value = entry.evaluate(spec.n, Params::NONE, &table)?;
                    return Ok(leaf(spec, Rule::BaseCatalog, Some(entry.id.to_string()), value));
                }
            }
            let value = direct_eval(&spec, &table)?;
            Ok(leaf(spec, Rule::BaseOracle, None, value))
        }
    }
}

fn eval_id(args: &EvalArgs, id: &str) -> Result<TraceNode, Error> {
    let entry = registry().get(id)?;
    let params = entry.check_params(Params {
        m: args.m,
        r: args.r,
    })?;
    let spec = entry.spec(args.n, params);
    let reach = args.n + 2 * params.m.unwrap_or(0) + params.r.unwrap_or(0) + 8;
    let table = HarmonicTable::build(reach, 6)?;
    let value = entry.evaluate(args.n, params, &table)?;
    Ok(leaf(spec, Rule::BaseCatalog, Some(entry.id.to_string()), value))
}

pub fn run(args: &EvalArgs, bits: u32) -> CliResult {
    let trace = match (&args.id, args.spec) {
        (Some(id), _) => eval_id(args, id)?,
        (None, Some(kind)) => eval_spec(args, kind)?,
        (None, None) => unreachable!("clap requires --id or --spec"),
    };
    let decimal = trace.value.to_decimal_string(digits_for(bits));
    if args.explain {
        return Ok(Output::ok(json(&Explained {
            value: &trace.value,
            decimal,
            trace: &trace,
        })?));
    }
    Ok(Output::ok(format!("{}\n{decimal}\n", trace.value)))
}

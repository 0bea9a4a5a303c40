use harmonica::catalog::registry;
use harmonica::limits::{
    check_convergence, known_limit_table, zeta6_identity, ConvergenceReport, KnownLimitRow, Verdict,
};
use harmonica::{FormulaEntry, Limit, Params, Real};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::LimitsArgs;
use crate::exit::{json, CliResult, ExitCode, Output};

const IDENTITY_BITS: u32 = 200;

#[derive(Serialize)]
struct IdentityCheck {
    identity: &'static str,
    precision_bits: u32,
    difference: String,
    tolerance: String,
    verdict: Verdict,
}

#[derive(Serialize)]
struct KnownLimits {
    n: u64,
    bound: &'static str,
    rows: Vec<KnownLimitRow>,
}

#[derive(Serialize)]
struct LimitsReport {
    precision_bits: u32,
    n: u64,
    convergence: Vec<ConvergenceReport>,
    /// Entries whose printed decimal does not round from their limit.
    printed_mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    known_limits: Option<KnownLimits>,
    #[serde(skip_serializing_if = "Option::is_none")]
    zeta6_identity: Option<IdentityCheck>,
}

fn instances(args: &LimitsArgs) -> harmonica::Result<Vec<(&'static FormulaEntry, Params)>> {
    if let Some(id) = &args.id {
        let entry = registry().get(id)?;
        let given = Params {
            m: args.m,
            r: args.r,
        };
        let params = if entry.is_parametric() && given == Params::NONE {
            entry.domain.grid(args.m_max)
        } else {
            vec![entry.check_params(given)?]
        };
        return Ok(params.into_iter().map(|p| (entry, p)).collect());
    }
    Ok(registry()
        .list(args.family)
        .into_iter()
        .flat_map(|e| e.domain.grid(args.m_max).into_iter().map(move |p| (e, p)))
        .filter(|(e, p)| matches!(e.limit(*p), Limit::Finite(_)))
        .collect())
}

pub fn run(args: &LimitsArgs, bits: u32) -> CliResult {
    let todo = instances(args)?;
    let convergence: Vec<ConvergenceReport> = todo
        .par_iter()
        .map(|(e, p)| check_convergence(e, *p, args.n, bits))
        .collect::<harmonica::Result<_>>()?;
    let printed_mismatches = convergence
        .iter()
        .filter(|r| r.printed_matches == Some(false))
        .map(|r| r.id.clone())
        .collect();

    // The table and identity belong to the full report only.
    let full = args.id.is_none() && args.family.is_none();
    let known_limits = if full {
        Some(KnownLimits {
            n: args.known_n,
            bound: "C·ln²N/N",
            rows: known_limit_table(args.known_n, bits)?,
        })
    } else {
        None
    };
    let zeta6 = full.then(|| {
        let diff = zeta6_identity(IDENTITY_BITS);
        let tol = Real::ulp(IDENTITY_BITS - 8);
        IdentityCheck {
            identity: "ζ(3)² − 4π⁶/2835 + ζ(6) = ζ(3)² − π⁶/2835",
            precision_bits: IDENTITY_BITS,
            verdict: Verdict::from_bool(diff <= tol),
            difference: diff.to_decimal_string(70),
            tolerance: tol.to_decimal_string(70),
        }
    });

    let failed = convergence.iter().any(|r| r.verdict == Verdict::Fail)
        || known_limits
            .as_ref()
            .is_some_and(|k| k.rows.iter().any(|r| r.verdict == Verdict::Fail))
        || zeta6.as_ref().is_some_and(|z| z.verdict == Verdict::Fail);
    let report = LimitsReport {
        precision_bits: bits,
        n: args.n,
        convergence,
        printed_mismatches,
        known_limits,
        zeta6_identity: zeta6,
    };
    let mut out = Output::ok(json(&report)?);
    if failed {
        out.code = ExitCode::CheckFailed;
        out.notes.push("some limit checks failed".into());
    }
    Ok(out)
}

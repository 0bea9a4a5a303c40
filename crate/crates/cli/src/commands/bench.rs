use std::time::Instant;

use harmonica::catalog::registry;
use harmonica::{direct_eval, Error, HarmonicTable, Params, Real};
use serde::Serialize;

use crate::args::BenchArgs;
use crate::exit::{json, CliResult, Output};

const DEFAULT_IDS: [&str; 3] = ["lemSumHiii1", "lemSumHi2i1i2", "lemSumHisqi1i2"];

#[derive(Serialize)]
struct Timing {
    id: String,
    n: u64,
    closed_form_median_ns: u128,
    direct_median_ns: u128,
    speedup: f64,
    /// `|closed form - direct sum|` in the fixed-point arithmetic.
    discrepancy: String,
}

#[derive(Serialize)]
struct TableBuild {
    n: u64,
    orders: u32,
    ms: u128,
}

#[derive(Serialize)]
struct BenchReport {
    precision_bits: u32,
    runs: u32,
    table_builds: Vec<TableBuild>,
    results: Vec<Timing>,
}

fn median(mut samples: Vec<u128>) -> u128 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn time<T>(runs: u32, mut f: impl FnMut() -> T) -> (u128, T) {
    let mut out = f();
    let samples = (0..runs)
        .map(|_| {
            let start = Instant::now();
            out = f();
            start.elapsed().as_nanos()
        })
        .collect();
    (median(samples), out)
}

pub fn run(args: &BenchArgs, bits: u32) -> CliResult {
    let ids: Vec<&str> = if args.ids.is_empty() {
        DEFAULT_IDS.to_vec()
    } else {
        args.ids.iter().map(String::as_str).collect()
    };
    let entries = ids
        .iter()
        .map(|id| registry().get(id))
        .collect::<harmonica::Result<Vec<_>>>()?;
    if let Some(e) = entries.iter().find(|e| e.is_parametric()) {
        return Err(Error::OutsideDomain {
            id: e.id.to_string(),
            reason: "bench takes fixed entries only".into(),
        }
        .into());
    }

    let mut results = Vec::new();
    let mut builds = Vec::new();
    for &n in &args.sizes {
        // Orders beyond the second are only built when an entry asks.
        let mut m_max = 2;
        let table = loop {
            let start = Instant::now();
            let table = HarmonicTable::<Real>::build_real(n + 8, m_max, bits)?;
            let needs_more = entries.iter().find_map(|e| {
                match e.evaluate::<Real>(n.min(4), Params::NONE, &table) {
                    Err(Error::TableCapacity { m, .. }) => Some(m),
                    _ => None,
                }
            });
            match needs_more {
                Some(m) if m > m_max => m_max = m,
                _ => {
                    builds.push(TableBuild {
                        n,
                        orders: m_max,
                        ms: start.elapsed().as_millis(),
                    });
                    break table;
                }
            }
        };
        for e in &entries {
            let spec = e.spec(n, Params::NONE);
            let (closed_ns, closed) = time(args.runs, || e.evaluate::<Real>(n, Params::NONE, &table));
            let (direct_ns, direct) = time(args.runs, || direct_eval(&spec, &table));
            let gap = (closed? - direct?).abs();
            results.push(Timing {
                id: e.id.to_string(),
                n,
                closed_form_median_ns: closed_ns,
                direct_median_ns: direct_ns,
                speedup: direct_ns as f64 / closed_ns.max(1) as f64,
                discrepancy: gap.to_decimal_string(30),
            });
        }
    }
    Ok(Output::ok(json(&BenchReport {
        precision_bits: bits,
        runs: args.runs,
        table_builds: builds,
        results,
    })?))
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use harmonica::{BasePolicy, Family};

#[derive(Debug, Parser)]
#[command(name = "harmonica", version, about = "Exact harmonic and quadratic harmonic sums")]
pub struct Cli {
    /// Working precision in bits for decimals and limits.
    #[arg(
        long,
        global = true,
        env = "HARMONICA_PRECISION_BITS",
        default_value_t = 256,
        value_parser = clap::value_parser!(u32).range(32..=16384)
    )]
    pub precision_bits: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one catalog entry or one G/V/R/MIXED sum exactly.
    Eval(EvalArgs),
    /// Check closed forms and reductions against direct summation.
    Verify(VerifyArgs),
    /// Convergence reports and the known-limit table.
    Limits(LimitsArgs),
    /// Time closed forms against direct summation.
    Bench(BenchArgs),
    /// Print the formula registry.
    Index(IndexArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpecKind {
    #[value(name = "G")]
    G,
    #[value(name = "V")]
    V,
    #[value(name = "R")]
    R,
    #[value(name = "MIXED")]
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Catalog,
    Oracle,
}

impl From<PolicyArg> for BasePolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Catalog => BasePolicy::CatalogFirst,
            PolicyArg::Oracle => BasePolicy::OracleOnly,
        }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Catalog id or alias.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    pub id: Option<String>,
    /// Sum shape, with --p --q --r --s --m.
    #[arg(long, value_enum)]
    pub spec: Option<SpecKind>,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    /// First shift, or the entry parameter r; the index shift for MIXED.
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    /// Harmonic order for G/V, or the entry parameter m.
    #[arg(long)]
    pub m: Option<u64>,
    /// Print the value with its reduction trace as JSON.
    #[arg(long)]
    pub explain: bool,
    /// Base-sum policy for G/V reductions.
    #[arg(long, value_enum, default_value = "catalog")]
    pub policy: PolicyArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Restrict to one catalog family (catalog suite only).
    #[arg(long)]
    pub family: Option<Family>,
    /// Extend the catalog sweep to n = 500.
    #[arg(long)]
    pub deep: bool,
    /// Largest n for the catalog sweep (overrides --deep).
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Largest entry parameter m (and r) to sweep.
    #[arg(long, default_value_t = 8)]
    pub m_max: u64,
    /// Which suites to run; defaults to all, or catalog with --family.
    #[arg(long, value_enum)]
    pub suite: Vec<Suite>,
    /// JSON file describing a corrupted registry to verify instead.
    #[arg(long)]
    pub fixture: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Catalog,
    Recursion,
    Policy,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    /// Only this entry.
    #[arg(long)]
    pub id: Option<String>,
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    /// Final N of the convergence walk.
    #[arg(long, default_value_t = 10_000)]
    pub n: u64,
    /// N for the known-limit table.
    #[arg(long, default_value_t = 100_000)]
    pub known_n: u64,
    /// Largest parameter for parametric entries.
    #[arg(long, default_value_t = 4)]
    pub m_max: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Entries to time (repeatable).
    #[arg(long = "id")]
    pub ids: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000,1000000")]
    pub sizes: Vec<u64>,
    /// Timed runs per measurement; the median is reported.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(5..))]
    pub runs: u32,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long)]
    pub family: Option<Family>,
}

//! Closed forms keyed by stable identifiers.
//!
//! Every entry pairs a closed form with the literal sum it claims to
//! equal (a [`SumSpec`] the oracle can evaluate), the limit as `n → ∞`,
//! and the decimal approximation printed next to it, if any. Closed forms
//! are written once against [`Ctx`] and instantiated twice, for exact
//! rationals and for fixed-point reals.

mod context;
mod linear_h1;
mod linear_h2;
mod mixed;
mod quadratic_h1;
mod quadratic_h2;
mod rational;

use std::collections::HashMap;
use std::fmt;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

pub use context::{Ctx, Params};

use crate::arith::{HarmonicTable, Rational, Real, Scalar};
use crate::error::{Error, Result};
use crate::limits::{GapBound, GrowthClass, Limit, LimitExpr};
use crate::oracle::SumSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Rational,
    RecursiveInM,
    LinearH1,
    LinearH2,
    QuadraticH1,
    QuadraticH2,
    Mixed,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Rational,
        Family::RecursiveInM,
        Family::LinearH1,
        Family::LinearH2,
        Family::QuadraticH1,
        Family::QuadraticH2,
        Family::Mixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rational => "RATIONAL",
            Family::RecursiveInM => "RECURSIVE_IN_M",
            Family::LinearH1 => "LINEAR_H1",
            Family::LinearH2 => "LINEAR_H2",
            Family::QuadraticH1 => "QUADRATIC_H1",
            Family::QuadraticH2 => "QUADRATIC_H2",
            Family::Mixed => "MIXED",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                input: s.into(),
                reason: "unknown family".into(),
            })
    }
}

/// Which extra parameters an entry takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamDomain {
    None,
    /// `m >= min`
    M { min: u64 },
    /// `0 <= m < r`
    MR,
}

impl ParamDomain {
    /// Parameter grid used by the sweeps, with `m`, `r` up to `m_max`.
    pub fn grid(self, m_max: u64) -> Vec<Params> {
        match self {
            ParamDomain::None => vec![Params::NONE],
            ParamDomain::M { min } => (min..=m_max.max(min)).map(Params::m).collect(),
            ParamDomain::MR => (0..m_max)
                .flat_map(|m| (m + 1..=m_max).map(move |r| Params::mr(m, r)))
                .collect(),
        }
    }
}

pub type ExactForm = for<'a, 'b> fn(&'a Ctx<'b, Rational>) -> Rational;
pub type ApproxForm = for<'a, 'b> fn(&'a Ctx<'b, Real>) -> Real;

/// One closed form, instantiated for both scalar types.
#[derive(Clone, Copy)]
pub struct ClosedForm {
    pub exact: ExactForm,
    pub approx: ApproxForm,
}

/// Writes a closed form once and instantiates it for both scalars.
macro_rules! form {
    (|$c:ident| $body:expr) => {
        $crate::catalog::ClosedForm {
            exact: |$c: &$crate::catalog::Ctx<'_, $crate::arith::Rational>| -> $crate::arith::Rational {
                $body
            },
            approx: |$c: &$crate::catalog::Ctx<'_, $crate::arith::Real>| -> $crate::arith::Real {
                $body
            },
        }
    };
}
pub(crate) use form;

/// Scalars a closed form can be evaluated in.
pub trait FormScalar: Scalar {
    fn select(form: &ClosedForm) -> for<'a, 'b> fn(&'a Ctx<'b, Self>) -> Self;
}

impl FormScalar for Rational {
    fn select(form: &ClosedForm) -> ExactForm {
        form.exact
    }
}

impl FormScalar for Real {
    fn select(form: &ClosedForm) -> ApproxForm {
        form.approx
    }
}

#[derive(Clone)]
enum LimitRule {
    Fixed(Limit),
    Param(fn(Params) -> Limit),
}

pub struct FormulaEntry {
    pub id: &'static str,
    pub aliases: Vec<&'static str>,
    pub family: Family,
    pub domain: ParamDomain,
    /// Smallest `n` the closed form is valid for.
    pub n_min: u64,
    spec: fn(u64, Params) -> SumSpec,
    form: ClosedForm,
    limit: LimitRule,
    /// Decimal approximation of the limit as printed (finite limits only).
    pub printed: Option<&'static str>,
    /// Why the stored form differs from the printed statement, if it does.
    pub erratum: Option<&'static str>,
    perturb_from: Option<u64>,
}

/// `LimitExpr` from `(constant, numerator, denominator)` triples.
pub(crate) fn lim(terms: &[(crate::limits::BasisConstant, i64, i64)]) -> LimitExpr {
    LimitExpr::from_terms(terms)
}

pub(crate) fn entry(
    id: &'static str,
    family: Family,
    spec: fn(u64, Params) -> SumSpec,
    form: ClosedForm,
) -> FormulaEntry {
    FormulaEntry {
        id,
        aliases: Vec::new(),
        family,
        domain: ParamDomain::None,
        n_min: 0,
        spec,
        form,
        limit: LimitRule::Fixed(Limit::Unstated),
        printed: None,
        erratum: None,
        perturb_from: None,
    }
}

impl FormulaEntry {
    pub(crate) fn alias(mut self, alias: &'static str) -> Self {
        self.aliases.push(alias);
        self
    }

    pub(crate) fn params(mut self, domain: ParamDomain) -> Self {
        self.domain = domain;
        self
    }


    pub(crate) fn tends_to(mut self, expr: LimitExpr, printed: &'static str) -> Self {
        self.limit = LimitRule::Fixed(Limit::Finite(expr));
        self.printed = Some(printed);
        self
    }

    pub(crate) fn tends_to_unprinted(mut self, expr: LimitExpr) -> Self {
        self.limit = LimitRule::Fixed(Limit::Finite(expr));
        self
    }

    pub(crate) fn limit_by(mut self, rule: fn(Params) -> Limit) -> Self {
        self.limit = LimitRule::Param(rule);
        self
    }

    pub(crate) fn grows(mut self, growth: &str) -> Self {
        self.limit = LimitRule::Fixed(Limit::Divergent(GrowthClass::new(growth)));
        self
    }

    pub(crate) fn erratum(mut self, note: &'static str) -> Self {
        self.erratum = Some(note);
        self
    }

    /// Copy whose closed form is off by `1/1000` from `n = from_n` on.
    /// Only useful as a negative control for the verification sweep.
    pub fn perturbed(&self, from_n: u64) -> FormulaEntry {
        FormulaEntry {
            id: self.id,
            aliases: self.aliases.clone(),
            family: self.family,
            domain: self.domain,
            n_min: self.n_min,
            spec: self.spec,
            form: self.form,
            limit: self.limit.clone(),
            printed: self.printed,
            erratum: self.erratum,
            perturb_from: Some(from_n),
        }
    }

    /// The literal sum this entry claims to equal.
    pub fn spec(&self, n: u64, params: Params) -> SumSpec {
        (self.spec)(n, params)
    }

    pub fn summand_text(&self) -> String {
        let params = self.domain.grid(2).first().copied().unwrap_or_default();
        let text = self.spec(1, params).summand_text();
        match self.domain {
            ParamDomain::None => text,
            ParamDomain::M { .. } => format!("{text} with m = {}", params.m.unwrap_or(1)),
            ParamDomain::MR => format!("{text} with (m, r) = (0, 1)"),
        }
    }

    pub fn limit(&self, params: Params) -> Limit {
        match &self.limit {
            LimitRule::Fixed(l) => l.clone(),
            LimitRule::Param(rule) => rule(params),
        }
    }

    pub fn is_parametric(&self) -> bool {
        self.domain != ParamDomain::None
    }

    /// Tail bound used by the convergence checks; `None` for divergent or
    /// unstated limits.
    pub fn gap_bound(&self, params: Params) -> Option<GapBound> {
        match self.limit(params) {
            Limit::Finite(_) => GapBound::for_spec(&self.spec(1, params)),
            _ => None,
        }
    }

    /// Validates the parameters against the entry's domain.
    pub fn check_params(&self, params: Params) -> Result<Params> {
        let reject = |reason: String| Error::OutsideDomain {
            id: self.id.to_string(),
            reason,
        };
        match self.domain {
            ParamDomain::None => {
                if params.m.is_some() || params.r.is_some() {
                    return Err(reject("this entry takes no parameters".into()));
                }
                Ok(Params::NONE)
            }
            ParamDomain::M { min } => {
                if params.r.is_some() {
                    return Err(reject("this entry takes no r".into()));
                }
                let m = params.m.ok_or_else(|| reject("m is required".into()))?;
                if m < min {
                    return Err(reject(format!("need m >= {min}, got m = {m}")));
                }
                Ok(Params::m(m))
            }
            ParamDomain::MR => {
                let m = params.m.ok_or_else(|| reject("m is required".into()))?;
                let r = params.r.ok_or_else(|| reject("r is required".into()))?;
                if m >= r {
                    return Err(reject(format!("need 0 <= m < r, got m = {m}, r = {r}")));
                }
                Ok(Params::mr(m, r))
            }
        }
    }

    /// Evaluates the closed form at `n`.
    pub fn evaluate<T: FormScalar>(
        &self,
        n: u64,
        params: Params,
        table: &HarmonicTable<T>,
    ) -> Result<T> {
        let params = self.check_params(params)?;
        if n < self.n_min {
            return Err(Error::OutsideDomain {
                id: self.id.to_string(),
                reason: format!("closed form holds for n >= {}, got n = {n}", self.n_min),
            });
        }
        let ctx = Ctx::new(n, params, table);
        let value = T::select(&self.form)(&ctx);
        let value = match self.perturb_from {
            Some(from) if n >= from => value + T::from_ratio(1, 1000, table.precision()),
            _ => value,
        };
        ctx.finish(value)
    }
}

impl fmt::Debug for FormulaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FormulaEntry")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// The set of entries, sorted by id, with alias resolution.
pub struct Registry {
    entries: Vec<FormulaEntry>,
    index: HashMap<&'static str, usize>,
    // canonical summand at n = 1 -> entry, for the fixed, n >= 0 entries
    by_spec: HashMap<SumSpec, usize>,
}

impl Registry {
    pub fn new(mut entries: Vec<FormulaEntry>) -> Self {
        entries.sort_by(|a, b| a.id.cmp(b.id));
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            for key in std::iter::once(&e.id).chain(e.aliases.iter()) {
                let previous = index.insert(*key, i);
                assert!(previous.is_none(), "duplicate formula id {key}");
            }
        }
        let mut by_spec = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if e.domain == ParamDomain::None && e.n_min == 0 {
                by_spec.entry(e.spec(1, Params::NONE).canonical()).or_insert(i);
            }
        }
        Registry {
            entries,
            index,
            by_spec,
        }
    }

    pub fn standard() -> Self {
        let mut all = Vec::new();
        all.extend(rational::entries());
        all.extend(linear_h1::entries());
        all.extend(linear_h2::entries());
        all.extend(quadratic_h1::entries());
        all.extend(quadratic_h2::entries());
        all.extend(mixed::entries());
        Registry::new(all)
    }

    /// The standard registry with one entry perturbed from `from_n` on.
    pub fn with_perturbed(id: &str, from_n: u64) -> Result<Self> {
        let standard = registry();
        let target = standard.get(id)?.id;
        let entries = standard
            .entries
            .iter()
            .map(|e| {
                if e.id == target {
                    e.perturbed(from_n)
                } else {
                    e.perturbed(u64::MAX)
                }
            })
            .collect();
        Ok(Registry::new(entries))
    }

    /// Looks up an id or alias.
    pub fn get(&self, id: &str) -> Result<&FormulaEntry> {
        self.index
            .get(id)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownFormula(id.to_string()))
    }

    pub fn entries(&self) -> &[FormulaEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries of one family (all when `None`), sorted by id.
    pub fn list(&self, family: Option<Family>) -> Vec<&FormulaEntry> {
        self.entries
            .iter()
            .filter(|e| family.is_none_or(|f| e.family == f))
            .collect()
    }

    /// Non-parametric entry whose sum is exactly `spec` (ignoring `n`).
    pub fn find_by_spec(&self, spec: &SumSpec) -> Option<&FormulaEntry> {
        let wanted = spec.canonical().with_n(1);
        self.by_spec.get(&wanted).map(|&i| &self.entries[i])
    }

    pub fn index_json(&self) -> Vec<IndexEntry> {
        self.entries.iter().map(IndexEntry::from).collect()
    }
}

static REGISTRY: Lazy<Registry> = Lazy::new(Registry::standard);

pub fn registry() -> &'static Registry {
    &REGISTRY
}

/// Exact closed form of entry `id` at `n`.
pub fn closed_form(id: &str, n: u64, params: Params, table: &HarmonicTable) -> Result<Rational> {
    registry().get(id)?.evaluate(n, params, table)
}

/// Limit of entry `id` as `n → ∞`.
pub fn limit_of(id: &str, params: Params) -> Result<Limit> {
    let entry = registry().get(id)?;
    let params = entry.check_params(params)?;
    Ok(entry.limit(params))
}

pub fn list_formulas(family: Option<Family>) -> Vec<&'static FormulaEntry> {
    registry().list(family)
}

/// Serializable description of one entry.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IndexEntry {
    pub id: String,
    pub aliases: Vec<String>,
    pub family: Family,
    pub summand: String,
    pub params: ParamDomain,
    pub n_min: u64,
    pub limit: Limit,
    /// Parameters the limit above was instantiated at (parametric entries).
    pub limit_params: Option<Params>,
    pub printed_value: Option<String>,
    pub gap_bound: Option<String>,
    pub erratum: Option<String>,
}

impl From<&FormulaEntry> for IndexEntry {
    fn from(e: &FormulaEntry) -> Self {
        let sample = e.domain.grid(2).first().copied().unwrap_or_default();
        IndexEntry {
            id: e.id.to_string(),
            aliases: e.aliases.iter().map(|a| a.to_string()).collect(),
            family: e.family,
            summand: e.summand_text(),
            params: e.domain,
            n_min: e.n_min,
            limit: e.limit(sample),
            limit_params: e.is_parametric().then_some(sample),
            printed_value: e.printed.map(str::to_string),
            gap_bound: e.gap_bound(sample).map(|g| g.to_string()),
            erratum: e.erratum.map(str::to_string),
        }
    }
}

//! Partial-fraction reduction of `G_{n,p,q}^{r,s,m}` and `V_{n,p,q}^{r,s,m}`
//! down to base sums, and the recursions in the denominator offset `m`.
//!
//! Every reduction step is recorded in a [`TraceNode`] tree whose leaves are
//! base sums evaluated either by a catalog closed form (or, for purely
//! rational sums, by partial fractions) or by direct summation.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::arith::{harmonic_in, HarmonicTable, Rational, Scalar};
use crate::catalog::{registry, Ctx, FormScalar, Params};
use crate::error::{Error, Result};
use crate::oracle::{direct_eval, Factor, SumKind, SumSpec};

/// How base sums are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BasePolicy {
    /// Catalog closed forms where one exists, partial fractions for the
    /// rational sums, direct summation otherwise.
    CatalogFirst,
    /// Direct summation for every base sum.
    OracleOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rule {
    QZero,
    PartialFractionPgtq,
    PartialFractionPltq,
    SwapNormalize,
    MergeEqualShifts,
    BaseCatalog,
    BaseOracle,
}

impl Rule {
    pub fn is_leaf(self) -> bool {
        matches!(self, Rule::BaseCatalog | Rule::BaseOracle)
    }
}

/// One node of a reduction: `value = sum coefficient_i * child_i.value`
/// for inner nodes; leaves carry the value of a base sum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct TraceNode<T = Rational> {
    pub spec: SumSpec,
    pub rule: Rule,
    /// Which closed form evaluated a `BASE_CATALOG` leaf.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub value: T,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<(Rational, TraceNode<T>)>,
}

impl<T: Scalar> TraceNode<T> {
    fn leaf(spec: SumSpec, rule: Rule, source: Option<String>, value: T) -> Self {
        TraceNode {
            spec,
            rule,
            source,
            value,
            children: Vec::new(),
        }
    }

    fn inner(spec: SumSpec, rule: Rule, children: Vec<(Rational, TraceNode<T>)>) -> Self {
        let prec = children
            .first()
            .map(|(_, c)| c.value.precision())
            .expect("inner trace node without children");
        let value = combine(&children, prec);
        TraceNode {
            spec,
            rule,
            source: None,
            value,
            children,
        }
    }

    /// Longest root-to-leaf path, counting nodes.
    pub fn depth(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(|(_, c)| c.depth())
            .max()
            .unwrap_or(0)
    }

    pub fn leaves(&self) -> Vec<&TraceNode<T>> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(|(_, c)| c.leaves()).collect()
    }

    /// Recomputes the root value from the leaf values alone.
    pub fn replay(&self) -> T {
        if self.children.is_empty() {
            return self.value.clone();
        }
        let prec = self.value.precision();
        self.children
            .iter()
            .fold(T::zero(prec), |acc, (k, c)| acc + scale(c.replay(), k, prec))
    }

    /// Checks that every inner node equals the combination of its children
    /// and that leaves, and only leaves, are base evaluations.
    pub fn is_consistent(&self) -> bool {
        if self.children.is_empty() {
            return self.rule.is_leaf();
        }
        !self.rule.is_leaf()
            && combine(&self.children, self.value.precision()) == self.value
            && self.children.iter().all(|(_, c)| c.is_consistent())
    }
}

fn scale<T: Scalar>(value: T, k: &Rational, prec: T::Precision) -> T {
    value * T::from_big_ratio(k.numer(), k.denom(), prec)
}

fn combine<T: Scalar>(children: &[(Rational, TraceNode<T>)], prec: T::Precision) -> T {
    children.iter().fold(T::zero(prec), |acc, (k, c)| {
        acc + scale(c.value.clone(), k, prec)
    })
}

/// Upper bound on the trace depth of a theorem reduction: one level per
/// unit of partial-fraction degree, plus the shift, normalization and
/// leaf levels; for `V` the cross `G` terms reduce a further `p + m`.
pub fn depth_bound(spec: &SumSpec) -> usize {
    let d = spec.degree() as usize;
    match spec.kind {
        SumKind::V => 2 * d + spec.order as usize + 6,
        _ => d + 3,
    }
}

fn check_hypothesis(spec: &SumSpec, kind: SumKind) -> Result<()> {
    if spec.kind != kind {
        return Err(Error::Hypothesis(format!("expected a {kind:?} sum, got {spec}")));
    }
    if spec.order == 0 {
        return Err(Error::Hypothesis("m must be >= 1".into()));
    }
    if spec.factors.len() > 2 || spec.h_shift != 0 {
        return Err(Error::Hypothesis(format!(
            "{spec} is not of the form sum H_(j,m)^k / ((j+r)^p (j+s)^q)"
        )));
    }
    if spec.p() + spec.q() <= 1 {
        return Err(Error::Hypothesis(format!("p + q must exceed 1 in {spec}")));
    }
    Ok(())
}

fn g_spec(n: u64, p: u32, q: u32, r: u64, s: u64, m: u32) -> SumSpec {
    if q == 0 {
        SumSpec::new(SumKind::G, n, m, &[(r, p)])
    } else {
        SumSpec::g(n, p, q, r, s, m)
    }
}

fn with_kind(kind: SumKind, n: u64, m: u32, list: &[(u64, u32)]) -> SumSpec {
    SumSpec::new(kind, n, m, list)
}

/// Runs theorem reductions against one table and policy. Base-sum leaves
/// are kept between calls, since sweeps over `n` and the shift parameters
/// keep hitting the same few base sums.
pub struct Evaluator<'a, T: Scalar = Rational> {
    table: &'a HarmonicTable<T>,
    policy: BasePolicy,
    memo: RefCell<HashMap<SumSpec, TraceNode<T>>>,
}

impl<'a, T: FormScalar> Evaluator<'a, T> {
    pub fn new(table: &'a HarmonicTable<T>, policy: BasePolicy) -> Self {
        Evaluator {
            table,
            policy,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn policy(&self) -> BasePolicy {
        self.policy
    }

    /// Reduces a `G` or `V` sum, checking the theorem's hypotheses and the
    /// depth bound.
    pub fn eval(&self, spec: &SumSpec) -> Result<TraceNode<T>> {
        if !matches!(spec.kind, SumKind::G | SumKind::V) {
            return Err(Error::Hypothesis(format!("{spec} is neither a G nor a V sum")));
        }
        check_hypothesis(spec, spec.kind)?;
        let trace = self.reduce(spec.clone());
        self.memo.borrow_mut().retain(|_, node| node.children.is_empty());
        let trace = trace?;
        let bound = depth_bound(spec);
        assert!(
            trace.depth() <= bound,
            "reduction of {spec} exceeded depth bound {bound}"
        );
        Ok(trace)
    }

    fn prec(&self) -> T::Precision {
        self.table.precision()
    }

    fn reduce(&self, spec: SumSpec) -> Result<TraceNode<T>> {
        if let Some(hit) = self.memo.borrow().get(&spec) {
            return Ok(hit.clone());
        }
        let node = self.reduce_uncached(spec.clone())?;
        self.memo.borrow_mut().insert(spec, node.clone());
        Ok(node)
    }

    fn reduce_uncached(&self, spec: SumSpec) -> Result<TraceNode<T>> {
        if spec.n == 0 {
            return Ok(TraceNode::leaf(spec, Rule::BaseOracle, None, T::zero(self.prec())));
        }
        match spec.kind {
            SumKind::G | SumKind::V => self.reduce_gv(spec),
            SumKind::R => self.rational_leaf(spec),
            SumKind::Mixed => self.oracle_leaf(spec),
        }
    }

    fn reduce_gv(&self, spec: SumSpec) -> Result<TraceNode<T>> {
        let (kind, n, m) = (spec.kind, spec.n, spec.order);
        let (p, q, r, s) = (spec.p(), spec.q(), spec.r(), spec.s());
        let shifted = |p2: u32, q2: u32, r2: u64, s2: u64| {
            let mut next = g_spec(n, p2, q2, r2, s2, m);
            next.kind = kind;
            next
        };
        if p > 0 && q > 0 && r == s {
            let child = self.reduce(shifted(p + q, 0, r, 0))?;
            return Ok(TraceNode::inner(spec, Rule::MergeEqualShifts, vec![(Rational::one(), child)]));
        }
        if p == 0 {
            let child = self.reduce(shifted(q, 0, s, 0))?;
            return Ok(TraceNode::inner(spec, Rule::SwapNormalize, vec![(Rational::one(), child)]));
        }
        if q == 0 {
            if r == 0 {
                return self.base_leaf(spec);
            }
            return match kind {
                SumKind::G => self.g_q_zero(spec, p, r),
                _ => self.v_q_zero(spec, p, r),
            };
        }
        // Partial fractions, 1/((j+a)(j+b)) = (1/(b-a)) (1/(j+a) - 1/(j+b)),
        // applied to the smaller exponent. For p < q the factors are
        // swapped first, which gives the prefactor 1/(r-s)^p.
        let (rule, big, small, a, b) = if p >= q {
            (Rule::PartialFractionPgtq, p, q, r, s)
        } else {
            (Rule::PartialFractionPltq, q, p, s, r)
        };
        let gap = b as i64 - a as i64;
        let prefactor = Rational::ratio(1, gap).pow(small);
        let mut children = Vec::with_capacity(small as usize + 1);
        for i in 0..=small {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let c = Rational::from_integer(binomial(BigInt::from(small), BigInt::from(i)) * sign);
            let child = self.reduce(shifted(big - i, i, a, b))?;
            children.push((c * &prefactor, child));
        }
        Ok(TraceNode::inner(spec, rule, children))
    }

    /// `G_{n,p,0}^{r,0,m} = G_{n+r,p,0} - G_{r,p,0} - sum_i R_{n,m,p}^{i,r}`
    fn g_q_zero(&self, spec: SumSpec, p: u32, r: u64) -> Result<TraceNode<T>> {
        let (n, m) = (spec.n, spec.order);
        let mut children = vec![
            (Rational::one(), self.reduce(g_spec(n + r, p, 0, 0, 0, m))?),
            (-Rational::one(), self.reduce(g_spec(r, p, 0, 0, 0, m))?),
        ];
        for i in 1..=r {
            let rs = with_kind(SumKind::R, n, 0, &[(i, m), (r, p)]);
            children.push((-Rational::one(), self.reduce(rs)?));
        }
        Ok(TraceNode::inner(spec, Rule::QZero, children))
    }

    /// Expands `(H_{j+r,m} - sum_{i=1}^r (j+i)^-m)^2 / (j+r)^p`.
    fn v_q_zero(&self, spec: SumSpec, p: u32, r: u64) -> Result<TraceNode<T>> {
        let (n, m) = (spec.n, spec.order);
        let v0 = |upper: u64| with_kind(SumKind::V, upper, m, &[(0, p)]);
        let mut children = vec![
            (Rational::one(), self.reduce(v0(n + r))?),
            (-Rational::one(), self.reduce(v0(r))?),
        ];
        for i in 1..=r {
            let g = SumSpec::g(n, p, m, r, i, m);
            children.push((Rational::from_integer(-2), self.reduce(g)?));
        }
        for i in 1..=r {
            let rs = with_kind(SumKind::R, n, 0, &[(r, p), (i, 2 * m)]);
            children.push((Rational::one(), self.reduce(rs)?));
        }
        for i in 1..=r {
            for k in 1..=r {
                let rs = with_kind(SumKind::R, n, 0, &[(r, p), (i, m), (k, m)]);
                children.push((Rational::from_integer(-2), self.reduce(rs)?));
            }
        }
        for i1 in 1..=r {
            for i2 in i1 + 1..=r {
                let rs = with_kind(SumKind::R, n, 0, &[(r, p), (i1, m), (i2, m)]);
                children.push((Rational::from_integer(2), self.reduce(rs)?));
            }
        }
        Ok(TraceNode::inner(spec, Rule::QZero, children))
    }

    fn oracle_leaf(&self, spec: SumSpec) -> Result<TraceNode<T>> {
        let value = direct_eval(&spec, self.table)?;
        Ok(TraceNode::leaf(spec, Rule::BaseOracle, None, value))
    }

    fn base_leaf(&self, spec: SumSpec) -> Result<TraceNode<T>> {
        if self.policy == BasePolicy::CatalogFirst {
            if let Some(entry) = registry().find_by_spec(&spec) {
                match entry.evaluate(spec.n, Params::NONE, self.table) {
                    Ok(value) => {
                        return Ok(TraceNode::leaf(
                            spec,
                            Rule::BaseCatalog,
                            Some(entry.id.to_string()),
                            value,
                        ))
                    }
                    // The closed form may read orders the table lacks.
                    Err(Error::TableCapacity { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        self.oracle_leaf(spec)
    }

    fn rational_leaf(&self, spec: SumSpec) -> Result<TraceNode<T>> {
        match self.policy {
            BasePolicy::OracleOnly => self.oracle_leaf(spec),
            BasePolicy::CatalogFirst => {
                let value = rational_sum(&spec, self.table);
                Ok(TraceNode::leaf(
                    spec,
                    Rule::BaseCatalog,
                    Some("partial fractions".into()),
                    value,
                ))
            }
        }
    }
}

/// Partial-fraction coefficients of `1 / prod (x + shift)^power` over
/// distinct shifts: `(shift, k, c)` for each term `c / (x + shift)^k`.
pub fn partial_fractions(factors: &[Factor]) -> Vec<(u64, u32, Rational)> {
    let mut out = Vec::new();
    for (idx, f) in factors.iter().enumerate() {
        // Taylor coefficients of prod_{l != idx} (t + d_l)^(-e_l) around
        // t = 0, up to order power - 1; d_l = shift_l - shift.
        let order = f.power as usize;
        let mut series = vec![Rational::zero(); order];
        series[0] = Rational::one();
        for (l, g) in factors.iter().enumerate() {
            if l == idx {
                continue;
            }
            let d = Rational::from_integer(g.shift as i64 - f.shift as i64);
            let inv_d = d.recip().expect("distinct shifts");
            // (t + d)^-e = sum_k (-1)^k C(e+k-1, k) d^(-e-k) t^k
            let e = g.power as u64;
            let factor: Vec<Rational> = (0..order as u64)
                .map(|k| {
                    let c = binomial(BigInt::from(e + k - 1), BigInt::from(k));
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    Rational::from_integer(c * sign) * inv_d.pow((e + k) as u32)
                })
                .collect();
            let mut product = vec![Rational::zero(); order];
            for (i, a) in series.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, b) in factor.iter().enumerate().take(order - i) {
                    product[i + k] += a * b;
                }
            }
            series = product;
        }
        for (t, c) in series.into_iter().enumerate() {
            if !c.is_zero() {
                out.push((f.shift, f.power - t as u32, c));
            }
        }
    }
    out
}

/// `sum_{j=1}^n 1 / prod (j + shift)^power` through partial fractions and
/// `sum_{j=1}^n (j+a)^-k = H_{n+a,k} - H_{a,k}`.
pub fn rational_sum<T: Scalar>(spec: &SumSpec, table: &HarmonicTable<T>) -> T {
    let prec = table.precision();
    let h = |j: u64, k: u32| match table.get(j, k) {
        Ok(v) => v.clone(),
        Err(_) => harmonic_in::<T>(j, k, prec),
    };
    let canonical = spec.canonical();
    partial_fractions(&canonical.factors)
        .into_iter()
        .fold(T::zero(prec), |acc, (a, k, c)| {
            let block = h(spec.n + a, k) - h(a, k);
            acc + scale(block, &c, prec)
        })
}

fn evaluate<T: FormScalar>(
    spec: &SumSpec,
    kind: SumKind,
    table: &HarmonicTable<T>,
    policy: BasePolicy,
) -> Result<TraceNode<T>> {
    check_hypothesis(spec, kind)?;
    Evaluator::new(table, policy).eval(spec)
}

/// `G_{n,p,q}^{r,s,m}` by the partial-fraction recursion, with its trace.
pub fn eval_g(
    spec: &SumSpec,
    table: &HarmonicTable,
    policy: BasePolicy,
) -> Result<(Rational, TraceNode)> {
    let trace = evaluate(spec, SumKind::G, table, policy)?;
    Ok((trace.value.clone(), trace))
}

/// `V_{n,p,q}^{r,s,m}` by the partial-fraction recursion, with its trace.
pub fn eval_v(
    spec: &SumSpec,
    table: &HarmonicTable,
    policy: BasePolicy,
) -> Result<(Rational, TraceNode)> {
    let trace = evaluate(spec, SumKind::V, table, policy)?;
    Ok((trace.value.clone(), trace))
}

/// Either theorem, in any scalar type; the trace is dropped.
pub fn eval_theorem_in<T: FormScalar>(
    spec: &SumSpec,
    table: &HarmonicTable<T>,
    policy: BasePolicy,
) -> Result<T> {
    Ok(evaluate(spec, spec.kind, table, policy)?.value)
}

/// The sums with a recursion in the denominator offset `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ShiftFamily {
    /// `sum 1/((j+1)^2 (j+m))`
    RationalJm,
    /// `sum H_{j,1}/(j+m)`
    H1OverJm,
    /// `sum H_{j,2}/(j+m)`
    H2OverJm,
    /// `sum H_{j,1}^2/(j+m)`
    H1sqOverJm,
    /// `sum H_{j,1}^2/(j+m)^2`
    H1sqOverJmSq,
    /// `sum H_{j,2}^2/(j+m)`
    H2sqOverJm,
    /// `sum H_{j,2}^2/(j+m)^2`
    H2sqOverJmSq,
}

impl ShiftFamily {
    pub const ALL: [ShiftFamily; 7] = [
        ShiftFamily::RationalJm,
        ShiftFamily::H1OverJm,
        ShiftFamily::H2OverJm,
        ShiftFamily::H1sqOverJm,
        ShiftFamily::H1sqOverJmSq,
        ShiftFamily::H2sqOverJm,
        ShiftFamily::H2sqOverJmSq,
    ];

    /// The literal sum for this family.
    pub fn spec(self, n: u64, m: u64) -> SumSpec {
        use ShiftFamily::*;
        match self {
            RationalJm => SumSpec::rational(n, &[(1, 2), (m, 1)]),
            H1OverJm => SumSpec::linear(n, 1, &[(m, 1)]),
            H2OverJm => SumSpec::linear(n, 2, &[(m, 1)]),
            H1sqOverJm => SumSpec::quadratic(n, 1, &[(m, 1)]),
            H1sqOverJmSq => SumSpec::quadratic(n, 1, &[(m, 2)]),
            H2sqOverJm => SumSpec::quadratic(n, 2, &[(m, 1)]),
            H2sqOverJmSq => SumSpec::quadratic(n, 2, &[(m, 2)]),
        }
    }
}

impl fmt::Display for ShiftFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = serde_json::to_value(self).expect("unit variant");
        f.write_str(text.as_str().unwrap_or_default())
    }
}

/// Runs the `m → m-1` recursion of `family` down to its `m = 1` initial
/// condition, for the `n` and table of `c`.
pub fn shift_value<T: Scalar>(c: &Ctx<'_, T>, family: ShiftFamily, m: u64) -> T {
    use ShiftFamily::*;
    if m == 0 {
        c.fail(Error::InvalidParameter("shift recursions need m >= 1".into()));
        return c.int(0);
    }
    let k = m as i64;
    match family {
        RationalJm => {
            if m == 1 {
                return c.h(1, 3) - 1;
            }
            let d = k - 1;
            c.h(1, 2) / d - c.q(1, d) - c.hc(m, 1) / (d * d) + c.q(1, d * d) + c.tail(2, k, 1) / (d * d)
        }
        H1OverJm => {
            let mut acc = (c.h(1, 1) * c.h(1, 1) - c.h(1, 2)) / 2;
            for k in 2..=k {
                let d = k - 1;
                acc = acc + c.tail(2, k, 1) / d - c.hc(k as u64, 1) / d + c.q(1, k * d)
                    + c.h(1, 1) * c.inv(k, 1);
            }
            acc
        }
        H2OverJm => {
            let mut acc = c.h(1, 1) * c.h(1, 2) - c.sum_h(1, 1, 2);
            for k in 2..=k {
                let d = k - 1;
                acc = acc - c.q(1, k * d * d) - c.h(1, 2) / d + c.hc(k as u64, 1) / (d * d)
                    + c.h(1, 2) * c.inv(k, 1)
                    - c.tail(2, k, 1) / (d * d);
            }
            acc
        }
        H1sqOverJm => {
            let h = c.h(0, 1);
            let mut acc = h.clone() * h.clone() * h.clone() / 3 - c.sum_h(0, 1, 2) + c.h(0, 3) * 2 / 3
                + h.clone() * h * c.inv(1, 1);
            let h1 = c.h(1, 1);
            for k in 2..=k {
                let d = k - 1;
                let g = shift_value(c, H1OverJm, (k - 1) as u64);
                acc = acc + g * 2 / d - h1.clone() * h1.clone() / d + c.q(1, k * d * d)
                    - c.hc(k as u64, 1) / (d * d)
                    + c.tail(2, k, 1) / (d * d)
                    + h1.clone() * h1.clone() * c.inv(k, 1)
                    + h1.clone() * 2 * c.inv(k, 1) / d;
            }
            acc
        }
        H1sqOverJmSq => {
            let h = c.h(0, 1);
            let mut acc = c.sum_hsq(0, 1, 2) - c.sum_h(0, 1, 3) * 2 + c.h(0, 4)
                + h.clone() * h.clone() * c.inv(1, 2);
            for k in 2..=k {
                let d = k - 1;
                let (d2, d3) = (d * d, d * d * d);
                let g2 = c.open(&SumSpec::linear(c.n(), 1, &[(d as u64, 2)]));
                let g1 = shift_value(c, H1OverJm, d as u64);
                acc = acc + g2 * 2 / d + g1 * 2 / d2 - h.clone() * h.clone() / d2 + c.h(0, 2) / d2
                    - c.hc(d as u64, 2) / d2
                    - c.hc(d as u64, 1) * 2 / d3
                    + h.clone() * h.clone() * c.inv(k, 2)
                    + c.tail(1, d, 1) * 2 / d3
                    + c.tail(1, d, 2) / d2;
            }
            acc
        }
        H2sqOverJm => {
            let h2 = c.h(0, 2);
            let mut acc = c.sum_hsq(0, 2, 1) - c.sum_h(0, 2, 3) * 2 + c.h(0, 5)
                + h2.clone() * h2.clone() * c.inv(1, 1);
            for k in 2..=k {
                let d = k - 1;
                let (d2, d3, d4) = (d * d, d * d * d, d * d * d * d);
                let g = shift_value(c, H2OverJm, d as u64);
                acc = acc - g * 2 / d2 - h2.clone() * h2.clone() / d
                    + c.h(0, 1) * h2.clone() * 2 / d2
                    + h2.clone() / d3
                    + c.h(0, 3) / d2
                    - c.sum_h(0, 1, 2) * 2 / d2
                    - c.hc(d as u64, 1) / d4
                    + h2.clone() * h2.clone() * c.inv(k, 1)
                    + c.tail(1, d, 1) / d4;
            }
            acc
        }
        H2sqOverJmSq => {
            let h2 = c.h(0, 2);
            let mut acc = h2.clone() * h2.clone() * h2.clone() / 3 + c.h(0, 6) * 2 / 3
                - c.sum_h(0, 2, 4)
                + h2.clone() * h2.clone() * c.inv(1, 2);
            for k in 2..=k {
                let d = k - 1;
                let (d2, d3, d4, d5) = (d * d, d * d * d, d * d * d * d, d * d * d * d * d);
                let g22 = c.open(&SumSpec::linear(c.n(), 2, &[(d as u64, 2)]));
                let g21 = shift_value(c, H2OverJm, d as u64);
                acc = acc - g22 * 2 / d2 - g21 * 4 / d3 + c.h(0, 1) * h2.clone() * 4 / d3
                    - h2.clone() * h2.clone() / d2
                    + h2.clone() * 4 / d4
                    + c.h(0, 3) * 2 / d3
                    - c.sum_h(0, 1, 2) * 4 / d3
                    - c.hc(d as u64, 1) * 4 / d5
                    - c.hc(d as u64, 2) / d4
                    + c.tail(1, d, 1) * 4 / d5
                    + c.tail(1, d, 2) / d4
                    + h2.clone() * h2.clone() * c.inv(k, 2);
            }
            acc
        }
    }
}

/// `sum_{j=1}^n` of `family` at offset `m`, via the shift recursion.
pub fn eval_shift_recursion<T: Scalar>(
    family: ShiftFamily,
    n: u64,
    m: u64,
    table: &HarmonicTable<T>,
) -> Result<T> {
    if m == 0 {
        return Err(Error::InvalidParameter("shift recursions need m >= 1".into()));
    }
    let ctx = Ctx::new(n, Params::m(m), table);
    let value = shift_value(&ctx, family, m);
    ctx.finish(value)
}

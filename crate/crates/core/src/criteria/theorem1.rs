use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{
    compare, divisors_above_one, quotient, CoefficientValues, Comparison, CriterionError, Result,
    TraceEntry,
};
use crate::domains::{Poly, Ring};
use crate::valuations::Valuation;
use crate::values::{in_dg, scale, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexPair {
    pub j: usize,
    pub k: usize,
}

/// Result of testing `v(a_k) ∈ d·G` for one divisor `d` of `j - k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorCheck {
    pub d: u64,
    pub in_dg: bool,
}

/// How the reported pair was chosen among all qualifying pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairSelection {
    /// Smallest bound `n - j + k`, ties broken by smallest `j`.
    SmallestBoundThenSmallestJ,
}

/// Certificate that every factorization of `f` has a factor of degree at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub n: usize,
    pub j: usize,
    pub k: usize,
    pub bound: usize,
    pub irreducible: bool,
    pub v_aj: Value,
    pub v_ak: Value,
    /// `v(a_k) / (j - k)`, the reference every trace entry is compared with.
    pub reference: Value,
    /// One entry per index `i ≠ j, k`. Entries with `i < j` must read `less`,
    /// entries with `i > j` must read `greater`.
    pub trace: Vec<TraceEntry>,
    pub divisor_checks: Vec<DivisorCheck>,
    pub all_valid_pairs: Vec<IndexPair>,
    pub selection: PairSelection,
}

impl Theorem1Report {
    /// Slope `-v(a_k) / (j - k)` of the polygon edge from `k` to `j`.
    pub fn segment_slope(&self) -> Result<Value> {
        Ok(scale(&self.reference, &-<BigRational as One>::one())?)
    }

    /// Checks that the recorded trace and divisor checks support the stated pair.
    pub fn verify(&self) -> Result<bool> {
        for e in &self.trace {
            if e.replay()? != e.outcome {
                return Ok(false);
            }
            let expected = if e.index < self.j { Comparison::Less } else { Comparison::Greater };
            if e.outcome != expected || e.reference != self.reference {
                return Ok(false);
            }
        }
        let covered = self.trace.len() + 2 == self.n + 1;
        Ok(covered
            && self.bound == self.n - self.j + self.k
            && self.irreducible == (self.bound == 0)
            && self.v_aj.is_zero()
            && self.divisor_checks.iter().all(|c| !c.in_dg))
    }
}

/// Hypotheses (i) through (iii) for the pair `(j, k)`; the trace when they hold.
fn slope_conditions(cv: &CoefficientValues, j: usize, k: usize) -> Result<Option<(Value, Vec<TraceEntry>)>> {
    let values = &cv.values;
    if !values[j].is_zero() || values[k].is_infinite() {
        return Ok(None);
    }
    let reference = quotient(&values[k], (j - k) as i64)?.expect("finite numerator");
    let mut trace = Vec::with_capacity(values.len());
    for (i, vi) in values.iter().enumerate() {
        if i == j || i == k {
            continue;
        }
        let entry = compare(i, &reference, quotient(vi, j as i64 - i as i64)?)?;
        let wanted = if i < j { Comparison::Less } else { Comparison::Greater };
        if entry.outcome != wanted {
            return Ok(None);
        }
        trace.push(entry);
    }
    Ok(Some((reference, trace)))
}

fn divisor_checks(cv: &CoefficientValues, j: usize, k: usize) -> Result<Vec<DivisorCheck>> {
    divisors_above_one((j - k) as u64)
        .into_iter()
        .map(|d| Ok(DivisorCheck { d, in_dg: in_dg(&cv.values[k], d, &cv.group)? }))
        .collect()
}

fn candidate_pairs(n: usize) -> impl Iterator<Item = IndexPair> {
    (1..=n).flat_map(|j| (0..j).map(move |k| IndexPair { j, k }))
}

/// Every `(j, k)` satisfying the four hypotheses, ordered by `j` then `k`.
pub fn theorem1_pairs_values(cv: &CoefficientValues) -> Result<Vec<IndexPair>> {
    let mut out = Vec::new();
    for pair in candidate_pairs(cv.degree()) {
        if slope_conditions(cv, pair.j, pair.k)?.is_none() {
            continue;
        }
        if divisor_checks(cv, pair.j, pair.k)?.iter().all(|c| !c.in_dg) {
            out.push(pair);
        }
    }
    Ok(out)
}

pub fn theorem1_pairs<C: Ring, V: Valuation<C>>(f: &Poly<C>, v: &V) -> Result<Vec<IndexPair>> {
    theorem1_pairs_values(&CoefficientValues::of(f, v)?)
}

fn strongest(n: usize, pairs: &[IndexPair]) -> Option<IndexPair> {
    pairs.iter().copied().min_by_key(|p| (n - p.j + p.k, p.j))
}

fn build_report(cv: &CoefficientValues, pair: IndexPair, all: Vec<IndexPair>) -> Result<Theorem1Report> {
    let n = cv.degree();
    let (reference, trace) = slope_conditions(cv, pair.j, pair.k)?
        .ok_or_else(|| CriterionError::Internal(format!("pair {pair:?} no longer satisfies the slope conditions")))?;
    let bound = n - pair.j + pair.k;
    Ok(Theorem1Report {
        n,
        j: pair.j,
        k: pair.k,
        bound,
        irreducible: bound == 0,
        v_aj: cv.values[pair.j].clone(),
        v_ak: cv.values[pair.k].clone(),
        reference,
        trace,
        divisor_checks: divisor_checks(cv, pair.j, pair.k)?,
        all_valid_pairs: all,
        selection: PairSelection::SmallestBoundThenSmallestJ,
    })
}

pub fn theorem1_values(cv: &CoefficientValues) -> Result<Option<Theorem1Report>> {
    let pairs = theorem1_pairs_values(cv)?;
    match strongest(cv.degree(), &pairs) {
        None => Ok(None),
        Some(best) => build_report(cv, best, pairs).map(Some),
    }
}

pub fn theorem1<C: Ring, V: Valuation<C>>(f: &Poly<C>, v: &V) -> Result<Option<Theorem1Report>> {
    theorem1_values(&CoefficientValues::of(f, v)?)
}

/// The rank-1 form: divisor-wise membership is replaced by `gcd(v(a_k), j - k) = 1`.
pub fn corollary1_values(cv: &CoefficientValues) -> Result<Option<Theorem1Report>> {
    if cv.group.rank() != 1 {
        return Err(CriterionError::RankNotOne(cv.group.rank()));
    }
    let mut pairs = Vec::new();
    for pair in candidate_pairs(cv.degree()) {
        if slope_conditions(cv, pair.j, pair.k)?.is_none() {
            continue;
        }
        let c = &cv.values[pair.k].components().expect("finite by slope conditions")[0];
        if !c.is_integer() {
            return Err(CriterionError::Internal(format!("rank-1 value {c} outside the integers")));
        }
        let g = c.to_integer().abs().gcd(&BigInt::from(pair.j - pair.k));
        if g.is_one() {
            pairs.push(pair);
        }
    }
    let report = match strongest(cv.degree(), &pairs) {
        None => None,
        Some(best) => Some(build_report(cv, best, pairs)?),
    };
    debug_assert_eq!(report, theorem1_values(cv)?, "gcd form disagrees with divisor-wise form");
    Ok(report)
}

pub fn corollary1<C: Ring, V: Valuation<C>>(f: &Poly<C>, v: &V) -> Result<Option<Theorem1Report>> {
    if v.rank() != 1 {
        return Err(CriterionError::RankNotOne(v.rank()));
    }
    corollary1_values(&CoefficientValues::of(f, v)?)
}

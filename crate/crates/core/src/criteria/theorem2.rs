use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{compare, quotient, CoefficientValues, Comparison, CriterionError, Result, TraceEntry};
use crate::domains::{Poly, Ring};
use crate::valuations::Valuation;
use crate::values::{min_multiplier, scale_int, Value};

/// Certificate that every irreducible factor of `f` has degree at least `delta_f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Report {
    pub n: usize,
    pub j: usize,
    pub d1: u64,
    /// Absent when `j = n`.
    pub d2: Option<u64>,
    pub delta_f: u64,
    /// `v(a_0) / j`.
    pub left_reference: Value,
    /// `v(a_n) / (n - j)`, absent when `j = n`.
    pub right_reference: Option<Value>,
    /// Entries with `i < j` compare against `left_reference`, entries with
    /// `j < i < n` against `right_reference`; all must read `less` or `equal`.
    pub trace: Vec<TraceEntry>,
    /// When `j < n`: `v(a_0) / j` against `-v(a_n) / (n - j)`, which must read
    /// `greater` or `equal`. This makes the two edges meeting at `(j, 0)` convex,
    /// so they are edges of the Newton polygon.
    pub convexity_check: Option<TraceEntry>,
}

impl Theorem2Report {
    /// Checks the recorded comparisons and the arithmetic of `delta_f`.
    pub fn verify(&self) -> Result<bool> {
        for e in &self.trace {
            let reference = if e.index < self.j { Some(&self.left_reference) } else { self.right_reference.as_ref() };
            if e.replay()? != e.outcome || Some(&e.reference) != reference || e.outcome == Comparison::Greater {
                return Ok(false);
            }
        }
        if let Some(c) = &self.convexity_check {
            if c.replay()? != c.outcome || c.outcome == Comparison::Less {
                return Ok(false);
            }
        }
        let expected_delta = match self.d2 {
            Some(d2) => self.d1.min(d2),
            None => self.d1,
        };
        Ok(self.delta_f == expected_delta
            && self.trace.len() == if self.j < self.n { self.n - 1 } else { self.n }
            && self.d2.is_some() == (self.j < self.n)
            && self.convexity_check.is_some() == (self.j < self.n))
    }
}

fn small(d: BigInt, limit: usize, what: &str) -> Result<u64> {
    d.to_u64()
        .filter(|&d| d >= 1 && d as usize <= limit)
        .ok_or_else(|| CriterionError::Internal(format!("{what} = {d} outside 1..={limit}")))
}

fn check_index(cv: &CoefficientValues, j: usize) -> Result<Option<Theorem2Report>> {
    let values = &cv.values;
    let n = cv.degree();
    let left_reference = quotient(&values[0], j as i64)?.expect("positive denominator");
    let mut trace = Vec::new();
    for (i, vi) in values.iter().enumerate().take(j) {
        let e = compare(i, &left_reference, quotient(vi, (j - i) as i64)?)?;
        if e.outcome == Comparison::Greater {
            return Ok(None);
        }
        trace.push(e);
    }
    let (right_reference, convexity_check) = if j < n {
        let right = quotient(&values[n], (n - j) as i64)?.expect("positive denominator");
        for (i, vi) in values.iter().enumerate().take(n).skip(j + 1) {
            let e = compare(i, &right, quotient(vi, (i - j) as i64)?)?;
            if e.outcome == Comparison::Greater {
                return Ok(None);
            }
            trace.push(e);
        }
        let corner = compare(j, &left_reference, Some(scale_int(&right, -1)?))?;
        if corner.outcome == Comparison::Less {
            return Ok(None);
        }
        (Some(right), Some(corner))
    } else {
        (None, None)
    };
    let d1 = small(min_multiplier(&left_reference, &cv.group)?, j, "d1")?;
    let d2 = match &right_reference {
        Some(r) => Some(small(min_multiplier(r, &cv.group)?, n - j, "d2")?),
        None => None,
    };
    let delta_f = d2.map_or(d1, |d2| d1.min(d2));
    Ok(Some(Theorem2Report {
        n,
        j,
        d1,
        d2,
        delta_f,
        left_reference,
        right_reference,
        trace,
        convexity_check,
    }))
}

/// Scans `j` upward over indices with `v(a_j) = 0` and reports the first that qualifies.
pub fn theorem2_values(cv: &CoefficientValues) -> Result<Option<Theorem2Report>> {
    if cv.values[0].is_infinite() {
        return Err(CriterionError::Inapplicable("constant coefficient is zero".into()));
    }
    for j in 1..=cv.degree() {
        if !cv.values[j].is_zero() {
            continue;
        }
        if let Some(report) = check_index(cv, j)? {
            return Ok(Some(report));
        }
    }
    Ok(None)
}

pub fn theorem2<C: Ring, V: Valuation<C>>(f: &Poly<C>, v: &V) -> Result<Option<Theorem2Report>> {
    theorem2_values(&CoefficientValues::of(f, v)?)
}

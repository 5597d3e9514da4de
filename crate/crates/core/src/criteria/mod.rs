//! Hypothesis checking for the valuation-based irreducibility criteria, Newton polygons,
//! and certificate assembly.

mod analyze;
mod newton;
mod theorem1;
mod theorem2;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domains::{Poly, Ring};
use crate::valuations::{Valuation, ValuationError};
use crate::values::{lex_cmp, scale, Value, ValueError, ValueGroup};

pub use analyze::{analyze, analyze_any, valuate_any, AnalysisOptions, AnalysisReport, Theorem2Status, Verdict, SCHEMA_VERSION};
pub use newton::{newton_polygon, newton_polygon_points, newton_polygon_values, NewtonPolygon, Segment, Vertex};
pub use theorem1::{corollary1, corollary1_values, theorem1, theorem1_pairs, theorem1_pairs_values, theorem1_values, DivisorCheck, IndexPair, PairSelection, Theorem1Report};
pub use theorem2::{theorem2, theorem2_values, Theorem2Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("the zero polynomial is not a valid input")]
    ZeroPolynomial,
    #[error("the polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("this criterion needs a rank-1 valuation, got rank {0}")]
    RankNotOne(usize),
    #[error("criterion inapplicable: {0}")]
    Inapplicable(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
}

pub type Result<T> = std::result::Result<T, CriterionError>;

/// Outcome of `lex_cmp(reference, quotient)` as recorded in a trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

impl From<Comparison> for Ordering {
    fn from(c: Comparison) -> Self {
        match c {
            Comparison::Less => Ordering::Less,
            Comparison::Equal => Ordering::Equal,
            Comparison::Greater => Ordering::Greater,
        }
    }
}

/// One recorded comparison `reference ? quotient` for coefficient `index`.
///
/// `quotient` is absent when the coefficient is zero and its quotient has a
/// negative denominator, i.e. the quotient is minus infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub index: usize,
    pub reference: Value,
    pub quotient: Option<Value>,
    pub outcome: Comparison,
}

impl TraceEntry {
    /// Re-runs the comparison.
    pub fn replay(&self) -> Result<Comparison> {
        Ok(match &self.quotient {
            Some(q) => lex_cmp(&self.reference, q)?.into(),
            None => Comparison::Greater,
        })
    }
}

/// Valuations of the coefficients `a_0..a_n` of a nonzero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientValues {
    pub values: Vec<Value>,
    pub group: ValueGroup,
}

impl CoefficientValues {
    pub fn new(values: Vec<Value>, group: ValueGroup) -> Result<Self> {
        match values.last() {
            None => return Err(CriterionError::ZeroPolynomial),
            Some(Value::Infinity) => {
                return Err(CriterionError::Internal("leading coefficient has infinite value".into()))
            }
            Some(_) => {}
        }
        if values.len() < 2 {
            return Err(CriterionError::ConstantPolynomial);
        }
        for v in &values {
            if let Some(r) = v.rank() {
                if r != group.rank() {
                    return Err(ValueError::RankMismatch { left: r, right: group.rank() }.into());
                }
            }
        }
        Ok(CoefficientValues { values, group })
    }

    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn of<C: Ring, V: Valuation<C>>(f: &Poly<C>, v: &V) -> Result<Self> {
        let values = f.coeffs().iter().map(|c| v.value(c)).collect();
        CoefficientValues::new(values, v.value_group())
    }
}

/// `v / (num_idx - den_idx)` where the signed integer denominator is nonzero.
///
/// Returns `None` for an infinite value over a negative denominator.
fn quotient(v: &Value, denominator: i64) -> Result<Option<Value>> {
    debug_assert!(denominator != 0);
    if v.is_infinite() && denominator < 0 {
        return Ok(None);
    }
    let q = BigRational::new(BigInt::from(1), BigInt::from(denominator));
    Ok(Some(scale(v, &q)?))
}

fn compare(index: usize, reference: &Value, quotient: Option<Value>) -> Result<TraceEntry> {
    let outcome = match &quotient {
        Some(q) => lex_cmp(reference, q)?.into(),
        None => Comparison::Greater,
    };
    Ok(TraceEntry { index, reference: reference.clone(), quotient, outcome })
}

/// Divisors `d > 1` of `m`, ascending.
fn divisors_above_one(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.into_iter().chain(large.into_iter().rev()).filter(|&d| d > 1).collect()
}

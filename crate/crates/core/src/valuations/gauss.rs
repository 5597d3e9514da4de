use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Valuation, ValuationError};
use crate::domains::{Poly, Ring};
use crate::values::{lex_cmp, scale, value_add, Value};

/// Value of a polynomial under a Gauss extension, with the first index attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussValue {
    pub value: Value,
    pub index: usize,
}

/// `min_i { values[i] + i·gamma }` over finite entries.
pub fn gauss_extend_values(values: &[Value], gamma: &Value) -> Result<GaussValue, ValuationError> {
    let mut best: Option<GaussValue> = None;
    for (i, v) in values.iter().enumerate() {
        if v.is_infinite() {
            continue;
        }
        let shifted = scale(gamma, &BigRational::from_integer(BigInt::from(i)))?;
        let term = value_add(v, &shifted)?;
        let better = match &best {
            None => true,
            Some(b) => lex_cmp(&term, &b.value)? == Ordering::Less,
        };
        if better {
            best = Some(GaussValue { value: term, index: i });
        }
    }
    best.ok_or(ValuationError::ZeroInput)
}

/// `w(f) = min_i { v(a_i) + i·gamma }` and the smallest index attaining it.
pub fn gauss_extend<C: Ring, V: Valuation<C>>(
    v: &V,
    gamma: &Value,
    f: &Poly<C>,
) -> Result<GaussValue, ValuationError> {
    let values: Vec<Value> = f.coeffs().iter().map(|c| v.value(c)).collect();
    gauss_extend_values(&values, gamma)
}

/// A base valuation together with the weight given to the polynomial variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedValuation<V> {
    pub base: V,
    pub weight: Value,
}

impl<V> ExtendedValuation<V> {
    pub fn new(base: V, weight: Value) -> Self {
        ExtendedValuation { base, weight }
    }

    pub fn eval<C: Ring>(&self, f: &Poly<C>) -> Result<GaussValue, ValuationError>
    where
        V: Valuation<C>,
    {
        gauss_extend(&self.base, &self.weight, f)
    }
}

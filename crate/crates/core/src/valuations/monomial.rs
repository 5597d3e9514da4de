use super::{Valuation, ValuationSpec};
use crate::domains::{BiFrac, BiPoly, Field, Ring};
use crate::values::Value;

/// Lexicographic monomial valuation on `F(x, y)`: the least exponent pair
/// `(t, s)` of a polynomial, extended to fractions by subtraction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MonomialLex;

pub fn monomial_lex_poly<K: Field>(f: &BiPoly<K>) -> Value {
    match f.min_exponent() {
        None => Value::Infinity,
        Some((t, s)) => Value::from_ints(&[t as i64, s as i64]),
    }
}

pub fn monomial_lex<K: Field>(c: &BiFrac<K>) -> Value {
    if c.is_zero() {
        return Value::Infinity;
    }
    monomial_lex_poly(c.numer())
        .sub(&monomial_lex_poly(c.denom()))
        .expect("finite values of equal rank")
}

impl<K: Field> Valuation<BiFrac<K>> for MonomialLex {
    fn rank(&self) -> usize {
        2
    }

    fn value(&self, c: &BiFrac<K>) -> Value {
        monomial_lex(c)
    }

    fn spec(&self) -> ValuationSpec {
        ValuationSpec::MonomialLex
    }
}

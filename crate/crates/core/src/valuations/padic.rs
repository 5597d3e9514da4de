use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Valuation, ValuationError, ValuationSpec};
use crate::domains::{is_prime, Rational};
use crate::values::Value;

/// The `p`-adic valuation on `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PAdic {
    p: u64,
}

impl PAdic {
    pub fn new(p: u64) -> Result<Self, ValuationError> {
        if !is_prime(p) {
            return Err(ValuationError::NotPrime(p));
        }
        Ok(PAdic { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }
}

/// Exponent of `p` in a nonzero integer.
pub fn vp_int(p: u64, n: &BigInt) -> u64 {
    assert!(!n.is_zero(), "vp of zero is infinite");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}

/// `v_p(q)`, negative when `p` divides the denominator.
pub fn vp_rational(p: u64, q: &BigRational) -> Value {
    if q.is_zero() {
        return Value::Infinity;
    }
    let e = vp_int(p, q.numer()) as i64 - vp_int(p, q.denom()) as i64;
    Value::from_ints(&[e])
}

impl Valuation<Rational> for PAdic {
    fn rank(&self) -> usize {
        1
    }

    fn value(&self, c: &Rational) -> Value {
        vp_rational(self.p, c)
    }

    fn spec(&self) -> ValuationSpec {
        ValuationSpec::PAdic(self.p)
    }
}

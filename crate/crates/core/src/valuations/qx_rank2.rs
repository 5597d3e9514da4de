//! The rank-2 valuation on `Q(x)`: the Gauss extension of `v_p`, refined by
//! the degree valuation on the residue field `F_p(x)`.

use num_bigint::BigInt;

use super::padic::vp_int;
use super::{Valuation, ValuationError, ValuationSpec};
use crate::domains::{is_prime, Field, Fp, FpRatFunc, Poly, Rational, Ring, UniRatFunc};
use crate::values::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QxRank2 {
    p: u64,
}

impl QxRank2 {
    pub fn new(p: u64) -> Result<Self, ValuationError> {
        if !is_prime(p) {
            return Err(ValuationError::NotPrime(p));
        }
        Ok(QxRank2 { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }
}

/// Least `v_p` over the nonzero coefficients of `f`.
pub fn gauss_vp(p: u64, f: &Poly<Rational>) -> Result<i64, ValuationError> {
    f.coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| vp_int(p, c.numer()) as i64 - vp_int(p, c.denom()) as i64)
        .min()
        .ok_or(ValuationError::ZeroInput)
}

/// Reduction of `f / p^gauss_vp(f)` modulo `p`; never zero.
pub fn residue_mod_p(p: u64, f: &Poly<Rational>) -> Result<Poly<Fp>, ValuationError> {
    let e = gauss_vp(p, f)?;
    let shift = if e >= 0 {
        Rational::new(BigInt::from(1), BigInt::from(p).pow(e as u32))
    } else {
        Rational::from_integer(BigInt::from(p).pow((-e) as u32))
    };
    let scaled = f.scale(&shift);
    let reduced = scaled.map(p, |c| {
        Fp::from_rational(&p, c).expect("p-integral after normalization")
    });
    debug_assert!(!reduced.is_zero());
    Ok(reduced)
}

/// Degree valuation on `F_p(x)`: `deg(den) - deg(num)`, so `-deg g` for a polynomial `g`.
pub fn deg_val(g: &FpRatFunc) -> Result<i64, ValuationError> {
    let num = g.numer().degree().ok_or(ValuationError::ZeroInput)?;
    let den = g.denom().degree().expect("nonzero denominator");
    Ok(den as i64 - num as i64)
}

/// `(v_p(f), v_inf(residue of f))` for a nonzero polynomial.
pub fn rank2_poly(p: u64, f: &Poly<Rational>) -> Result<Value, ValuationError> {
    let first = gauss_vp(p, f)?;
    let second = -(residue_mod_p(p, f)?.degree().expect("nonzero residue") as i64);
    Ok(Value::from_ints(&[first, second]))
}

/// The rank-2 valuation of a rational function: numerator minus denominator.
pub fn rank2_qx(p: u64, c: &UniRatFunc) -> Value {
    if c.is_zero() {
        return Value::Infinity;
    }
    let num = rank2_poly(p, c.numer()).expect("nonzero numerator");
    let den = rank2_poly(p, c.denom()).expect("nonzero denominator");
    num.sub(&den).expect("finite values of equal rank")
}

impl Valuation<UniRatFunc> for QxRank2 {
    fn rank(&self) -> usize {
        2
    }

    fn value(&self, c: &UniRatFunc) -> Value {
        rank2_qx(self.p, c)
    }

    fn spec(&self) -> ValuationSpec {
        ValuationSpec::QxRank2(self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{parse_poly_in, Frac};

    fn qx(s: &str) -> Poly<Rational> {
        // Polynomials in x are written as z-free coefficients in Q(x).
        let f = parse_poly_in::<UniRatFunc>(s, &()).unwrap();
        let c = f.coeff(0);
        assert!(c.denom().is_one());
        c.numer().clone()
    }

    fn fp(p: u64, cs: &[i64]) -> Poly<Fp> {
        Poly::new(p, cs.iter().map(|&c| Fp::new(c, p)).collect())
    }

    #[test]
    fn gauss_vp_examples() {
        assert_eq!(gauss_vp(2, &qx("(1+4*x^4)*x")).unwrap(), 0);
        assert_eq!(gauss_vp(2, &qx("4*x")).unwrap(), 2);
        assert_eq!(gauss_vp(2, &qx("8*x")).unwrap(), 3);
        assert_eq!(gauss_vp(3, &qx("x/9 + 3")).unwrap(), -2);
        assert_eq!(gauss_vp(2, &qx("0")), Err(ValuationError::ZeroInput));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue_mod_p(2, &qx("(1+4*x^4)*x")).unwrap(), fp(2, &[0, 1]));
        assert_eq!(residue_mod_p(2, &qx("4")).unwrap(), fp(2, &[1]));
        assert_eq!(residue_mod_p(2, &qx("1+8*x^2+4*x^4")).unwrap(), fp(2, &[1]));
        assert_eq!(residue_mod_p(3, &qx("x/9 + 3")).unwrap(), fp(3, &[0, 1]));
    }

    #[test]
    fn deg_val_examples() {
        let x = Frac::from_numer(fp(5, &[0, 1]));
        assert_eq!(deg_val(&x).unwrap(), -1);
        assert_eq!(deg_val(&Frac::from_numer(fp(5, &[1]))).unwrap(), 0);
        assert_eq!(deg_val(&x.inverse().unwrap()).unwrap(), 1);
        assert_eq!(deg_val(&Frac::zero(&5)), Err(ValuationError::ZeroInput));
    }

    #[test]
    fn rank2_examples() {
        let v = |s: &str| rank2_qx(2, &Frac::from_numer(qx(s)));
        assert_eq!(v("(1+4*x^4)*x"), Value::from_ints(&[0, -1]));
        assert_eq!(v("4"), Value::from_ints(&[2, 0]));
        assert_eq!(v("1+8*x^2+4*x^4"), Value::from_ints(&[0, 0]));
        assert_eq!(v("0"), Value::Infinity);
        let f = parse_poly_in::<UniRatFunc>("(2*x)/(x^3+4)", &()).unwrap().coeff(0);
        assert_eq!(rank2_qx(2, &f), Value::from_ints(&[1, 2]));
    }
}

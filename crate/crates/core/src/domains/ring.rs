use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::render::Render;

/// Exact rational numbers; the coefficient field for `Q`.
pub type Rational = BigRational;

/// A commutative ring with exact arithmetic.
///
/// Elements of some rings (prime fields, function fields over them) need a
/// runtime context to build constants; `Ctx` carries it. Every element can
/// report its own context.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: &BigInt) -> Self;
    fn ctx(&self) -> Self::Ctx;

    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Render {
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn divide(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }

    /// Embeds a rational number; `None` when its denominator is not invertible.
    fn from_rational(ctx: &Self::Ctx, q: &Rational) -> Option<Self> {
        let num = Self::from_int(ctx, q.numer());
        let den = Self::from_int(ctx, q.denom());
        num.divide(&den)
    }
}

impl Ring for Rational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn from_int(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn ctx(&self) {}
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Element of the prime field `F_p`. The modulus travels with the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        debug_assert!(modulus >= 2);
        let m = modulus as i128;
        Fp {
            value: (value as i128).rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp::one(&self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Fp {
    type Ctx = u64;

    fn zero(p: &u64) -> Self {
        Fp { value: 0, modulus: *p }
    }
    fn one(p: &u64) -> Self {
        Fp { value: 1 % *p, modulus: *p }
    }
    fn from_int(p: &u64, n: &BigInt) -> Self {
        let r = n.mod_floor_u64(*p);
        Fp { value: r, modulus: *p }
    }
    fn ctx(&self) -> u64 {
        self.modulus
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn plus(&self, other: &Self) -> Self {
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }
    fn minus(&self, other: &Self) -> Self {
        let m = self.modulus as u128;
        let s = (self.value as u128 + m - other.value as u128) % m;
        Fp { value: s as u64, modulus: self.modulus }
    }
    fn times(&self, other: &Self) -> Self {
        let s = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }
    fn negate(&self) -> Self {
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Field for Fp {
    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2); the modulus is prime by construction.
        Some(self.pow(self.modulus - 2))
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        let r = self % BigInt::from(m);
        let r = if r.is_negative() { r + BigInt::from(m) } else { r };
        r.try_into().expect("residue fits in u64")
    }
}

/// Trial-division primality test; the primes used here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let p = 7u64;
        let a = Fp::new(3, p);
        let b = Fp::new(-2, p);
        assert_eq!(b.value(), 5);
        assert_eq!(a.plus(&b), Fp::new(1, p));
        assert_eq!(a.minus(&b), Fp::new(5, p));
        assert_eq!(a.times(&b), Fp::new(1, p));
        assert_eq!(a.inverse().unwrap().times(&a), Fp::one(&p));
        assert_eq!(Fp::zero(&p).inverse(), None);
        assert_eq!(Fp::from_int(&p, &BigInt::from(-15)), Fp::new(6, p));
    }

    #[test]
    fn rationals_into_fp() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(Fp::from_rational(&5, &half), Some(Fp::new(3, 5)));
        assert_eq!(Fp::from_rational(&2, &half), None);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(!is_prime(1));
        assert!(is_prime(1_000_003));
    }
}

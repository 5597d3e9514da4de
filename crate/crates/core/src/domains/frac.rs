use num_bigint::BigInt;

use super::bipoly::BiPoly;
use super::poly::Poly;
use super::render::{wrap_divisor, wrap_product_factor, Render};
use super::ring::{Field, Fp, Rational, Ring};
use super::DomainError;

/// Integral domains with a computable gcd and a canonical unit normalization.
pub trait GcdDomain: Ring + Render {
    /// A greatest common divisor, normalized so [`GcdDomain::unit_normalizer`] is one.
    fn gcd(&self, other: &Self) -> Self;

    /// `self / divisor`, which must be exact.
    fn div_exact(&self, divisor: &Self) -> Self;

    /// The unit that makes `self` normalized when multiplied in; `None` for zero.
    fn unit_normalizer(&self) -> Option<Self>;
}

impl<K: Field> GcdDomain for Poly<K> {
    fn gcd(&self, other: &Self) -> Self {
        Poly::gcd(self, other)
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    fn unit_normalizer(&self) -> Option<Self> {
        self.leading()
            .and_then(Field::inverse)
            .map(Poly::constant)
    }
}

/// A reduced fraction `num / den` over a gcd domain.
///
/// Canonical form: `gcd(num, den)` is a unit and `den` is normalized, so equal
/// fractions have identical representations. Zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frac<P: GcdDomain> {
    num: P,
    den: P,
}

/// Rational functions in `x` over `Q`.
pub type UniRatFunc = Frac<Poly<Rational>>;
/// Rational functions in `x` over `F_p` (residue fields).
pub type FpRatFunc = Frac<Poly<Fp>>;
/// Rational functions in `x, y` over a field.
pub type BiFrac<K> = Frac<BiPoly<K>>;

/// Reduces `num / den` to canonical form.
pub fn reduce_frac<P: GcdDomain>(num: P, den: P) -> Result<Frac<P>, DomainError> {
    if den.is_zero() {
        return Err(DomainError::ZeroDenominator);
    }
    let ctx = den.ctx();
    if num.is_zero() {
        return Ok(Frac { num, den: P::one(&ctx) });
    }
    let (num, den) = if den.is_one() {
        (num, den)
    } else {
        let g = num.gcd(&den);
        if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        }
    };
    let unit = den.unit_normalizer().expect("nonzero denominator");
    if unit.is_one() {
        Ok(Frac { num, den })
    } else {
        Ok(Frac { num: num.times(&unit), den: den.times(&unit) })
    }
}

impl<P: GcdDomain> Frac<P> {
    pub fn new(num: P, den: P) -> Result<Self, DomainError> {
        reduce_frac(num, den)
    }

    pub fn from_numer(num: P) -> Self {
        let ctx = num.ctx();
        Frac { num, den: P::one(&ctx) }
    }

    pub fn numer(&self) -> &P {
        &self.num
    }

    pub fn denom(&self) -> &P {
        &self.den
    }

    fn build(num: P, den: P) -> Self {
        reduce_frac(num, den).expect("nonzero denominator")
    }

    /// Normalizes the denominator's unit of an already coprime pair.
    fn coprime(num: P, den: P) -> Self {
        let unit = den.unit_normalizer().expect("nonzero denominator");
        if unit.is_one() {
            Frac { num, den }
        } else {
            Frac { num: num.times(&unit), den: den.times(&unit) }
        }
    }
}

impl<P: GcdDomain> Ring for Frac<P> {
    type Ctx = P::Ctx;

    fn zero(ctx: &P::Ctx) -> Self {
        Frac { num: P::zero(ctx), den: P::one(ctx) }
    }
    fn one(ctx: &P::Ctx) -> Self {
        Frac { num: P::one(ctx), den: P::one(ctx) }
    }
    fn from_int(ctx: &P::Ctx, n: &BigInt) -> Self {
        Frac::from_numer(P::from_int(ctx, n))
    }
    fn ctx(&self) -> P::Ctx {
        self.num.ctx()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn plus(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Frac::from_numer(self.num.plus(&other.num));
        }
        if self.den == other.den {
            return Frac::build(self.num.plus(&other.num), self.den.clone());
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            return Frac::coprime(
                self.num.times(&other.den).plus(&other.num.times(&self.den)),
                self.den.times(&other.den),
            );
        }
        let (b, d) = (self.den.div_exact(&g), other.den.div_exact(&g));
        let t = self.num.times(&d).plus(&other.num.times(&b));
        if t.is_zero() {
            return Frac::zero(&self.ctx());
        }
        let h = t.gcd(&g);
        if h.is_one() {
            return Frac::coprime(t, b.times(&other.den));
        }
        Frac::coprime(t.div_exact(&h), b.times(&other.den.div_exact(&h)))
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Frac::zero(&self.ctx());
        }
        if self.den.is_one() && other.den.is_one() {
            return Frac::from_numer(self.num.times(&other.num));
        }
        // Both operands are reduced, so cancellation is only across them.
        let (a, d) = cancel(&self.num, &other.den);
        let (c, b) = cancel(&other.num, &self.den);
        Frac::coprime(a.times(&c), b.times(&d))
    }

    fn negate(&self) -> Self {
        Frac { num: self.num.negate(), den: self.den.clone() }
    }
}

/// `(a / g, b / g)` for `g = gcd(a, b)`.
fn cancel<P: GcdDomain>(a: &P, b: &P) -> (P, P) {
    if a.is_one() || b.is_one() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g), b.div_exact(&g))
    }
}

impl<P: GcdDomain> Field for Frac<P> {
    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Frac::build(self.den.clone(), self.num.clone()))
        }
    }
}

impl<P: GcdDomain> Render for Frac<P> {
    fn render(&self) -> String {
        let num = self.num.render();
        if self.den.is_one() {
            return num;
        }
        format!("{}/{}", wrap_product_factor(&num), wrap_divisor(&self.den.render()))
    }
}

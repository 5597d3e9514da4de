use num_bigint::BigInt;

use super::render::{join_terms, wrap_product_factor, Render};
use super::ring::{Field, Ring};

/// Dense univariate polynomial over `C`, coefficients in ascending degree.
///
/// The same type serves polynomials in `z` over a coefficient domain and
/// polynomials in `x` over a base field. The zero polynomial has no degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<C: Ring> {
    ctx: C::Ctx,
    coeffs: Vec<C>,
}

impl<C: Ring> Poly<C> {
    pub fn new(ctx: C::Ctx, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    /// Builds from a nonempty coefficient list, taking the context from its first entry.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let ctx = coeffs.first().expect("nonempty coefficient list").ctx();
        Poly::new(ctx, coeffs)
    }

    pub fn zero_poly(ctx: &C::Ctx) -> Self {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Poly::new(c.ctx(), vec![c])
    }

    /// `c · var^deg`.
    pub fn monomial(c: C, deg: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![C::zero(&ctx); deg];
        coeffs.push(c);
        Poly::new(ctx, coeffs)
    }

    /// The variable itself.
    pub fn var(ctx: &C::Ctx) -> Self {
        Poly::monomial(C::one(ctx), 1)
    }

    pub fn context(&self) -> &C::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| C::zero(&self.ctx))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|a| a.times(c)).collect(),
        )
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(&self.ctx); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { ctx: self.ctx.clone(), coeffs }
    }

    /// Splits off the largest power of the variable: `self = var^k · rest`.
    pub fn strip_low_zeros(&self) -> (usize, Self) {
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0);
        (
            k,
            Poly { ctx: self.ctx.clone(), coeffs: self.coeffs[k..].to_vec() },
        )
    }

    /// Value at `t` by Horner's rule.
    pub fn eval(&self, t: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(&self.ctx), |acc, c| acc.times(t).plus(c))
    }

    pub fn map<D: Ring>(&self, ctx: D::Ctx, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(ctx, self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::constant(C::one(&self.ctx));
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Renders with the given variable name.
    pub fn render_in(&self, var: &str) -> String
    where
        C: Render,
    {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let power = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{i}"),
                };
                if i == 0 {
                    return c.render();
                }
                if c.is_one() {
                    return power;
                }
                if c.negate().is_one() {
                    return format!("-{power}");
                }
                format!("{}*{power}", wrap_product_factor(&c.render()))
            });
        join_terms(terms)
    }
}

impl<C: Ring> Ring for Poly<C> {
    type Ctx = C::Ctx;

    fn zero(ctx: &C::Ctx) -> Self {
        Poly::zero_poly(ctx)
    }
    fn one(ctx: &C::Ctx) -> Self {
        Poly::constant(C::one(ctx))
    }
    fn from_int(ctx: &C::Ctx, n: &BigInt) -> Self {
        Poly::constant(C::from_int(ctx, n))
    }
    fn ctx(&self) -> C::Ctx {
        self.ctx.clone()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(self.ctx.clone(), coeffs)
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn times(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::zero_poly(&self.ctx);
        }
        let mut out = vec![C::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Poly::new(self.ctx.clone(), out)
    }

    fn negate(&self) -> Self {
        Poly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(Ring::negate).collect(),
        }
    }
}

impl<K: Field> Poly<K> {
    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (self.clone(), self.clone());
        };
        if nd < dd {
            return (Poly::zero_poly(&self.ctx), self.clone());
        }
        let mut quot = vec![K::zero(&self.ctx); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = rem[i].times(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].minus(&c.times(d));
            }
            quot[i - dd] = c;
        }
        (
            Poly::new(self.ctx.clone(), quot),
            Poly::new(self.ctx.clone(), rem),
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.times(&K::from_int(&self.ctx, &BigInt::from(i))))
            .collect();
        Poly::new(self.ctx.clone(), coeffs)
    }
}

impl<C: Ring + Render> Render for Poly<C> {
    fn render(&self) -> String {
        self.render_in("x")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::ring::{Fp, Rational};

    fn qp(cs: &[i64]) -> Poly<Rational> {
        Poly::new((), cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(qp(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(qp(&[0, 0]).degree(), None);
        assert!(qp(&[]).is_zero());
    }

    #[test]
    fn multiplication() {
        // (1 + z)(1 - z) = 1 - z^2
        assert_eq!(qp(&[1, 1]).times(&qp(&[1, -1])), qp(&[1, 0, -1]));
        assert_eq!(qp(&[3, 4]).times(&qp(&[1])), qp(&[3, 4]));
        assert!(qp(&[3, 4]).times(&qp(&[])).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        let a = qp(&[-1, 0, 1]);
        let b = qp(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, qp(&[1, 1]));
        assert!(r.is_zero());
        let g = qp(&[2, 2]).times(&qp(&[3, 1])).gcd(&qp(&[4, 4]).times(&qp(&[5, 1])));
        assert_eq!(g, qp(&[1, 1]));
    }

    #[test]
    fn derivative_mod_p() {
        let p = 3u64;
        let f = Poly::new(p, vec![Fp::new(1, p), Fp::new(0, p), Fp::new(0, p), Fp::new(1, p)]);
        assert!(f.derivative().is_zero());
    }

    #[test]
    fn strip_low_zeros_splits_power() {
        let (k, rest) = qp(&[0, 0, 3, 1]).strip_low_zeros();
        assert_eq!(k, 2);
        assert_eq!(rest, qp(&[3, 1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(qp(&[2, 2, 1]).render_in("z"), "2 + 2*z + z^2");
        assert_eq!(qp(&[-1, 0, 1]).render_in("z"), "-1 + z^2");
        assert_eq!(qp(&[0, -3, -1]).render_in("z"), "-3*z - z^2");
        assert_eq!(qp(&[]).render_in("z"), "0");
    }
}

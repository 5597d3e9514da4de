//! Random factor polynomials whose coefficients have varied valuations, so
//! that products regularly satisfy the criteria's hypotheses.

use num_bigint::BigInt;
use rand::Rng;

use crate::domains::{AnyPoly, BiFrac, BiPoly, DomainTag, Field, Fp, Frac, Poly, Rational, Ring, UniRatFunc};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn sign<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// `p^e` for the largest exponent up to `e` that keeps it within `height`.
fn power_within(p: u64, e: u32, height: u64) -> i64 {
    let mut q = 1u64;
    for _ in 0..e {
        match q.checked_mul(p) {
            Some(next) if next <= height => q = next,
            _ => break,
        }
    }
    q as i64
}

/// A nonzero integer `± p^e · u` with `|p^e · u| ≤ height`, `e` drawn from `0..=max_e`.
fn shaped_int<R: Rng + ?Sized>(rng: &mut R, p: u64, max_e: u32, height: u64) -> i64 {
    let pe = power_within(p, rng.gen_range(0..=max_e), height);
    let u = rng.gen_range(1..=(height as i64 / pe).max(1));
    sign(rng) * pe * u
}

/// A nonzero integer prime to `p` with absolute value at most `height`.
fn unit_int<R: Rng + ?Sized>(rng: &mut R, p: u64, height: u64) -> i64 {
    loop {
        let u = rng.gen_range(1..=height as i64);
        if u % p as i64 != 0 {
            return sign(rng) * u;
        }
    }
}

fn shaped_rational<R: Rng + ?Sized>(rng: &mut R, p: u64, height: u64) -> Rational {
    if rng.gen_ratio(1, 8) {
        let pe = power_within(p, rng.gen_range(1..=2), height);
        Rational::new(BigInt::from(unit_int(rng, p, height)), BigInt::from(pe))
    } else {
        int(shaped_int(rng, p, 3, height))
    }
}

/// Builds a degree-`degree` polynomial; `coeff(i)` may return zero except at the top.
fn build<C: Field>(
    ctx: &C::Ctx,
    degree: usize,
    rng: &mut impl Rng,
    mut coeff: impl FnMut(&mut dyn rand::RngCore, usize) -> C,
) -> Poly<C> {
    let mut coeffs: Vec<C> = (0..=degree).map(|i| coeff(rng, i)).collect();
    while coeffs[degree].is_zero() {
        coeffs[degree] = coeff(rng, degree);
    }
    Poly::new(ctx.clone(), coeffs)
}

/// Leading coefficient a unit, every other coefficient a multiple of `pi`,
/// and the constant term `pi` times a unit: a single Newton polygon edge.
fn eisenstein_shaped<C: Field>(
    ctx: &C::Ctx,
    degree: usize,
    rng: &mut impl Rng,
    pi: &C,
    mut unit: impl FnMut(&mut dyn rand::RngCore) -> C,
) -> Poly<C> {
    build(ctx, degree, rng, |rng, i| {
        if i == degree {
            unit(rng)
        } else if i > 0 && rng.gen_ratio(1, 4) {
            C::zero(ctx)
        } else {
            pi.times(&unit(rng))
        }
    })
}

fn rational_factor(rng: &mut impl Rng, p: u64, degree: usize, height: u64) -> Poly<Rational> {
    if p <= height && rng.gen_ratio(1, 4) {
        let bound = (height / p).max(1);
        return eisenstein_shaped(&(), degree, rng, &int(p as i64), |rng| int(unit_int(rng, p, bound)));
    }
    build(&(), degree, rng, |rng, i| {
        if i < degree && rng.gen_ratio(1, 6) {
            int(0)
        } else {
            shaped_rational(rng, p, height)
        }
    })
}

/// `p^e · (c_0 + c_1 x + ...) · x^s / d(x)` with small random pieces.
fn qx_coefficient(rng: &mut dyn rand::RngCore, p: u64, height: u64) -> UniRatFunc {
    let ctx = ();
    let deg = rng.gen_range(0..=2);
    let num: Poly<Rational> = Poly::new(
        ctx,
        (0..=deg)
            .map(|_| if rng.gen_ratio(1, 3) { int(0) } else { int(shaped_int(rng, p, 1, height)) })
            .collect(),
    );
    let num = if num.is_zero() { Poly::constant(int(unit_int(rng, p, height))) } else { num };
    let num = num.scale(&shaped_rational(rng, p, height.min(p * p)));
    let den: Poly<Rational> = match rng.gen_range(0..6) {
        0 => Poly::var(&ctx),
        1 => Poly::new(ctx, vec![int(unit_int(rng, p, height.min(5))), int(1)]),
        2 => Poly::new(ctx, vec![int(1), int(0), int(1)]),
        _ => Poly::constant(int(1)),
    };
    Frac::new(num, den).expect("nonzero denominator")
}

fn bivariate_coefficient<K: Field>(
    rng: &mut dyn rand::RngCore,
    ctx: &K::Ctx,
    mut scalar: impl FnMut(&mut dyn rand::RngCore) -> K,
) -> BiFrac<K> {
    let terms: Vec<(usize, usize, K)> = (0..rng.gen_range(1..=3))
        .map(|_| (rng.gen_range(0..=2), rng.gen_range(0..=2), scalar(rng)))
        .collect();
    let mut num = BiPoly::from_terms(ctx, &terms);
    if num.is_zero() {
        num = BiPoly::constant(scalar(rng));
    }
    let den = if rng.gen_ratio(1, 8) {
        BiPoly::monomial(K::one(ctx), rng.gen_range(0..=1), rng.gen_range(0..=1))
    } else {
        BiPoly::one(ctx)
    };
    Frac::new(num, den).expect("nonzero denominator")
}

/// `x` or `y`, both of positive value under the monomial order.
fn bivariate_uniformizer<K: Field>(rng: &mut impl Rng, ctx: &K::Ctx) -> BiFrac<K> {
    let v = if rng.gen_bool(0.5) { BiPoly::x(ctx) } else { BiPoly::y(ctx) };
    Frac::from_numer(v)
}

/// A random polynomial of exactly the given degree over `domain`.
///
/// `prime` shapes the coefficient valuations for the p-adic and rank-2 `Q(x)`
/// valuations; it is ignored for the bivariate domains.
pub fn sample_factor(rng: &mut impl Rng, domain: DomainTag, prime: u64, degree: usize, height: u64) -> AnyPoly {
    let height = height.max(1);
    match domain {
        DomainTag::Q => AnyPoly::Q(rational_factor(rng, prime, degree, height)),
        DomainTag::Qx if rng.gen_ratio(1, 4) => {
            let pi = if rng.gen_bool(0.5) {
                UniRatFunc::from_int(&(), &BigInt::from(prime))
            } else {
                Frac::new(Poly::constant(int(1)), Poly::var(&())).expect("nonzero denominator")
            };
            let bound = (height / prime).max(1);
            AnyPoly::Qx(eisenstein_shaped(&(), degree, rng, &pi, |rng| {
                UniRatFunc::from_int(&(), &BigInt::from(unit_int(rng, prime, bound)))
            }))
        }
        DomainTag::Qx => AnyPoly::Qx(build(&(), degree, rng, |rng, i| {
            if i < degree && rng.gen_ratio(1, 6) {
                UniRatFunc::zero(&())
            } else {
                qx_coefficient(rng, prime, height)
            }
        })),
        DomainTag::BivariateQ if rng.gen_ratio(1, 4) => {
            let pi = bivariate_uniformizer(rng, &());
            AnyPoly::BivariateQ(eisenstein_shaped(&(), degree, rng, &pi, |rng| {
                BiFrac::from_int(&(), &BigInt::from(rng.gen_range(1..=height as i64) * sign(rng)))
            }))
        }
        DomainTag::BivariateFp(p) if rng.gen_ratio(1, 4) => {
            let pi = bivariate_uniformizer(rng, &p);
            AnyPoly::BivariateFp(eisenstein_shaped(&p, degree, rng, &pi, |rng| {
                Frac::from_numer(BiPoly::constant(Fp::new(rng.gen_range(1..p) as i64, p)))
            }))
        }
        DomainTag::BivariateQ => AnyPoly::BivariateQ(build(&(), degree, rng, |rng, i| {
            if i < degree && rng.gen_ratio(1, 6) {
                BiFrac::zero(&())
            } else {
                bivariate_coefficient(rng, &(), |rng| int(rng.gen_range(1..=height as i64) * sign(rng)))
            }
        })),
        DomainTag::BivariateFp(p) => AnyPoly::BivariateFp(build(&p, degree, rng, |rng, i| {
            if i < degree && rng.gen_ratio(1, 6) {
                BiFrac::zero(&p)
            } else {
                bivariate_coefficient(rng, &p, |rng| Fp::new(rng.gen_range(1..p) as i64, p))
            }
        })),
    }
}

/// An Eisenstein-shaped polynomial for a fixed positive-value element: `p` over
/// `Q` and `Q(x)`, `y` over the bivariate domains. Products of two such factors
/// of equal degree have a one-edge Newton polygon.
pub fn sample_eisenstein(rng: &mut impl Rng, domain: DomainTag, prime: u64, degree: usize, height: u64) -> AnyPoly {
    let bound = (height / prime).max(1);
    match domain {
        DomainTag::Q => AnyPoly::Q(eisenstein_shaped(&(), degree, rng, &int(prime as i64), |rng| {
            int(unit_int(rng, prime, bound))
        })),
        DomainTag::Qx => {
            let pi = UniRatFunc::from_int(&(), &BigInt::from(prime));
            AnyPoly::Qx(eisenstein_shaped(&(), degree, rng, &pi, |rng| {
                UniRatFunc::from_int(&(), &BigInt::from(unit_int(rng, prime, bound)))
            }))
        }
        DomainTag::BivariateQ => AnyPoly::BivariateQ(eisenstein_shaped(&(), degree, rng, &Frac::from_numer(BiPoly::y(&())), |rng| {
            BiFrac::from_int(&(), &BigInt::from(rng.gen_range(1..=height.max(1) as i64) * sign(rng)))
        })),
        DomainTag::BivariateFp(p) => AnyPoly::BivariateFp(eisenstein_shaped(&p, degree, rng, &Frac::from_numer(BiPoly::y(&p)), |rng| {
            Frac::from_numer(BiPoly::constant(Fp::new(rng.gen_range(1..p) as i64, p)))
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for domain in [DomainTag::Q, DomainTag::Qx, DomainTag::BivariateQ, DomainTag::BivariateFp(3)] {
            for degree in 1..=4 {
                for _ in 0..20 {
                    let f = sample_factor(&mut rng, domain, 2, degree, 50);
                    assert_eq!(f.degree(), Some(degree));
                    assert_eq!(f.tag(), domain);
                }
            }
        }
    }

    #[test]
    fn heights_are_respected_over_q() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let AnyPoly::Q(f) = sample_factor(&mut rng, DomainTag::Q, 3, 4, 50) else { unreachable!() };
            for c in f.coeffs() {
                assert!(c.numer().magnitude() <= &50u32.into() && c.denom() <= &50.into(), "{c}");
            }
        }
    }

    #[test]
    fn reproducible() {
        let a = sample_factor(&mut ChaCha8Rng::seed_from_u64(3), DomainTag::Qx, 2, 3, 50);
        let b = sample_factor(&mut ChaCha8Rng::seed_from_u64(3), DomainTag::Qx, 2, 3, 50);
        assert_eq!(a, b);
    }
}

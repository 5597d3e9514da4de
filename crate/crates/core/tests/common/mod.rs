//! Generators and independent reference implementations shared by the
//! integration tests and the acceptance runner.
#![allow(dead_code)]

use std::cmp::Ordering;

use krull_dumas::domains::{BiFrac, BiPoly, Field, Fp, Frac, Poly, Rational, Ring, UniRatFunc};
use krull_dumas::valuations::{gauss_extend, Valuation};
use krull_dumas::values::{lex_cmp, value_add, Value};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn is_zero_rat(c: &Rational) -> bool {
    Zero::is_zero(c)
}
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P1: &str = "(1+4*x^4)*x + 4*x*z + (1+4*x^4)*2*x*z^2 + 8*x*z^3 + (1+4*x^4)*2*x^2*z^4 + (1+8*x^2+4*x^4)*z^5 + 4*z^6";
pub const P2: &str = "x*y^2 - (1-x^2)*y*z - (1-y-x*y)*x*z^2 - (1-x-x*y^2)*x*z^3 + (x-y+y^2)*x*z^4 - (1-x-x^2)*y*z^5 - (1-x*y)*z^6 + x*z^7";
pub const P3: &str = "y + x*z + (1+x*y^2)*z^2 + x^2*y*z^3 + x*y*z^4";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat(rng: &mut impl Rng, h: i64) -> Rational {
    q(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

pub fn nonzero_rat(rng: &mut impl Rng, h: i64) -> Rational {
    loop {
        let r = rat(rng, h);
        if !is_zero_rat(&r) {
            return r;
        }
    }
}

/// Random polynomial over `Q` of degree at most `max_deg` (possibly zero).
pub fn q_poly(rng: &mut impl Rng, max_deg: usize, h: i64) -> Poly<Rational> {
    let d = rng.gen_range(0..=max_deg);
    Poly::new((), (0..=d).map(|_| rat(rng, h)).collect())
}

pub fn nonzero_q_poly(rng: &mut impl Rng, max_deg: usize, h: i64) -> Poly<Rational> {
    loop {
        let f = q_poly(rng, max_deg, h);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn qx_elem(rng: &mut impl Rng) -> UniRatFunc {
    let num = q_poly(rng, 2, 6);
    let den = nonzero_q_poly(rng, 2, 6);
    Frac::new(num, den).unwrap()
}

pub fn nonzero_qx_elem(rng: &mut impl Rng) -> UniRatFunc {
    loop {
        let c = qx_elem(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

fn bipoly<K: krull_dumas::domains::Field>(
    rng: &mut impl Rng,
    ctx: &K::Ctx,
    mut scalar: impl FnMut(&mut ChaCha8Rng) -> K,
) -> BiPoly<K> {
    let mut inner = ChaCha8Rng::seed_from_u64(rng.gen());
    let terms: Vec<_> = (0..inner.gen_range(0..=3))
        .map(|_| (inner.gen_range(0..=2usize), inner.gen_range(0..=2usize), scalar(&mut inner)))
        .collect();
    BiPoly::from_terms(ctx, &terms)
}

pub fn biq_elem(rng: &mut impl Rng) -> BiFrac<Rational> {
    let num = bipoly(rng, &(), |r| rat(r, 5));
    let den = loop {
        let d = bipoly(rng, &(), |r| nonzero_rat(r, 5));
        if !d.is_zero() {
            break d;
        }
    };
    Frac::new(num, den).unwrap()
}

pub fn bifp_elem(rng: &mut impl Rng, p: u64) -> BiFrac<Fp> {
    let num = bipoly(rng, &p, |r| Fp::new(r.gen_range(0..p as i64), p));
    let den = loop {
        let d = bipoly(rng, &p, |r| Fp::new(r.gen_range(1..p as i64), p));
        if !d.is_zero() {
            break d;
        }
    };
    Frac::new(num, den).unwrap()
}

pub fn nonzero<T: Ring>(rng: &mut ChaCha8Rng, mut gen: impl FnMut(&mut ChaCha8Rng) -> T) -> T {
    loop {
        let c = gen(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Polynomial in `z` with coefficients from `gen`, degree at most `max_deg`.
pub fn poly_over<T: Ring>(
    rng: &mut ChaCha8Rng,
    ctx: T::Ctx,
    max_deg: usize,
    mut gen: impl FnMut(&mut ChaCha8Rng) -> T,
) -> Poly<T> {
    let d = rng.gen_range(0..=max_deg);
    Poly::new(ctx, (0..=d).map(|_| gen(rng)).collect())
}

/// Polynomials over `Q` whose coefficients are `± p^e · u` or zero, so that
/// the `p`-adic criteria often apply.
pub fn padic_poly(rng: &mut impl Rng, p: u64, max_deg: usize) -> Poly<Rational> {
    let n = rng.gen_range(1..=max_deg);
    let p = p as i64;
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let zero_allowed = i < n;
        if zero_allowed && rng.gen_ratio(1, 5) {
            coeffs.push(q(0, 1));
            continue;
        }
        let e: i32 = if i == n && rng.gen_bool(0.6) { 0 } else { rng.gen_range(-1..=4) };
        let mut u = rng.gen_range(1..=12);
        while u % p == 0 {
            u = rng.gen_range(1..=12);
        }
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = if e >= 0 { q(sign * u * p.pow(e as u32), 1) } else { q(sign * u, p.pow((-e) as u32)) };
        coeffs.push(c);
    }
    Poly::new((), coeffs)
}

/// `v_p` of a nonzero integer, by repeated division.
fn vp_integer(p: u64, n: &BigInt) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut e = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        e += 1;
    }
    e
}

/// `v_p` of a rational number; `None` for zero (infinity).
pub fn vp(p: u64, c: &Rational) -> Option<i64> {
    if is_zero_rat(c) {
        None
    } else {
        Some(vp_integer(p, c.numer()) - vp_integer(p, c.denom()))
    }
}

/// The smallest `k` satisfying the three hypotheses of the `j = n` criterion for the
/// `p`-adic valuation, checked literally: `v(a_n) = 0`; `v(a_k)/(n-k) < v(a_i)/(n-i)`
/// for all `i < n`, `i ≠ k`; `v(a_k) ∉ dZ` for each divisor `d > 1` of `n - k`.
pub fn last_index_pair(f: &Poly<Rational>, p: u64) -> Option<usize> {
    let a = f.coeffs();
    let n = a.len() - 1;
    if vp(p, &a[n]) != Some(0) {
        return None;
    }
    // +inf is represented by None; every denominator here is positive.
    let ratio = |i: usize| vp(p, &a[i]).map(|v| q(v, (n - i) as i64));
    (0..n).find(|&k| {
        let Some(vk) = vp(p, &a[k]) else { return false };
        let rk = q(vk, (n - k) as i64);
        let strict = (0..n).filter(|&i| i != k).all(|i| match ratio(i) {
            None => true,
            Some(ri) => rk < ri,
        });
        let divisors_ok = (2..=(n - k) as i64).filter(|d| (n - k) as i64 % d == 0).all(|d| vk % d != 0);
        strict && divisors_ok
    })
}

/// Exhaustive factorization over `F_p` by trial division with all monic
/// irreducibles up to a degree, generated by sieving. Polynomials are
/// coefficient vectors, lowest degree first.
pub struct BruteForce {
    pub p: u64,
    irreducibles: Vec<Vec<u64>>,
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Division by a monic polynomial.
fn divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], trim(r));
    }
    let mut quot = vec![0; r.len() - db];
    for i in (0..quot.len()).rev() {
        let c = r[i + db] % p;
        quot[i] = c;
        if c != 0 {
            for (t, bt) in b.iter().enumerate() {
                r[i + t] = (r[i + t] + p * p - c * bt % p) % p;
            }
        }
    }
    (trim(quot), trim(r))
}

/// All monic polynomials of degree `d` over `F_p`.
pub fn monic_polys(p: u64, d: usize) -> Vec<Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count)
        .map(|mut m| {
            let mut c: Vec<u64> = (0..d)
                .map(|_| {
                    let digit = m % p;
                    m /= p;
                    digit
                })
                .collect();
            c.push(1);
            c
        })
        .collect()
}

impl BruteForce {
    pub fn new(p: u64, max_degree: usize) -> Self {
        let mut irreducibles: Vec<Vec<u64>> = Vec::new();
        for d in 1..=max_degree / 2 {
            for f in monic_polys(p, d) {
                let reducible = irreducibles
                    .iter()
                    .take_while(|g| 2 * (g.len() - 1) <= d)
                    .any(|g| divmod(&f, g, p).1.is_empty());
                if !reducible {
                    irreducibles.push(f);
                }
            }
        }
        BruteForce { p, irreducibles }
    }

    /// Sorted `(degree, multiplicity)` pairs, one per distinct irreducible factor.
    pub fn pattern(&self, f: &[u64]) -> Vec<(usize, usize)> {
        let mut rest = trim(f.to_vec());
        let mut out = Vec::new();
        for g in &self.irreducibles {
            if 2 * (g.len() - 1) > rest.len() - 1 {
                break;
            }
            let mut m = 0;
            loop {
                let (qt, r) = divmod(&rest, g, self.p);
                if !r.is_empty() {
                    break;
                }
                rest = qt;
                m += 1;
            }
            if m > 0 {
                out.push((g.len() - 1, m));
            }
        }
        if rest.len() > 1 {
            out.push((rest.len() - 1, 1));
        }
        out.sort_unstable();
        out
    }
}

/// Checks the valuation axioms on one pair and reports the first violation.
pub fn axioms<C: Field, V: Valuation<C>>(v: &V, a: &C, b: &C) -> Result<(), String> {
    let ctx = a.ctx();
    if !v.value(&C::zero(&ctx)).is_infinite() {
        return Err("v(0) is finite".into());
    }
    for unit in [C::one(&ctx), C::one(&ctx).negate()] {
        if !v.value(&unit).is_zero() {
            return Err("v(±1) is not zero".into());
        }
    }
    let (va, vb) = (v.value(a), v.value(b));
    for (c, vc) in [(a, &va), (b, &vb)] {
        if c.is_zero() != vc.is_infinite() {
            return Err(format!("v({}) = {vc}", c.render()));
        }
        if !vc.is_infinite() && !v.value_group().contains(vc).map_err(|e| e.to_string())? {
            return Err(format!("v({}) = {vc} is outside the value group", c.render()));
        }
    }
    let vab = v.value(&a.times(b));
    let sum = value_add(&va, &vb).map_err(|e| e.to_string())?;
    if vab != sum {
        return Err(format!("v(ab) = {vab} but v(a) + v(b) = {sum}"));
    }
    let vs = v.value(&a.plus(b));
    let least = va.min(&vb).map_err(|e| e.to_string())?;
    let cmp = lex_cmp(&vs, least).map_err(|e| e.to_string())?;
    if cmp == Ordering::Less {
        return Err(format!("v(a + b) = {vs} below min = {least}"));
    }
    if va != vb && vs != *least {
        return Err(format!("v(a + b) = {vs} but unequal values force {least}"));
    }
    if !b.is_zero() {
        let q = a.divide(b).expect("nonzero divisor");
        let expected = if a.is_zero() { Value::Infinity } else { va.sub(&vb).map_err(|e| e.to_string())? };
        if v.value(&q) != expected {
            return Err(format!("v(a / b) = {} but v(a) - v(b) = {expected}", v.value(&q)));
        }
    }
    Ok(())
}

/// Multiplicativity of the Gauss extension and additivity of the first
/// index attaining it.
pub fn gauss_product<C: Field, V: Valuation<C>>(
    v: &V,
    gamma: &Value,
    f: &Poly<C>,
    g: &Poly<C>,
) -> Result<(), String> {
    let wf = gauss_extend(v, gamma, f).map_err(|e| e.to_string())?;
    let wg = gauss_extend(v, gamma, g).map_err(|e| e.to_string())?;
    let wfg = gauss_extend(v, gamma, &f.times(g)).map_err(|e| e.to_string())?;
    let sum = value_add(&wf.value, &wg.value).map_err(|e| e.to_string())?;
    if wfg.value != sum {
        return Err(format!("w(fg) = {} but w(f) + w(g) = {sum}", wfg.value));
    }
    if wfg.index != wf.index + wg.index {
        return Err(format!("index {} but {} + {}", wfg.index, wf.index, wg.index));
    }
    Ok(())
}

pub fn gamma(rng: &mut ChaCha8Rng, rank: usize) -> Value {
    let parts: Vec<(i64, i64)> = (0..rank).map(|_| (rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect();
    Value::from_fracs(&parts)
}

//! Factorization of univariate polynomials over prime fields: squarefree
//! decomposition, distinct-degree splitting, then Cantor–Zassenhaus
//! equal-degree splitting driven by a seeded generator.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::domains::{is_prime, Field, Fp, Poly, Rational, Ring};

/// Seed used by [`factor_mod_p`] for equal-degree splitting.
pub const DEFAULT_SPLIT_SEED: u64 = 0x5eed;

/// Degrees and multiplicities of the irreducible factors of a polynomial mod `p`,
/// one entry per distinct irreducible factor, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreePattern {
    pub prime: u64,
    pub factors: Vec<(usize, usize)>,
}

impl DegreePattern {
    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|&(d, m)| d * m).sum()
    }

    /// Every degree a monic divisor can have, from 0 to the total degree.
    pub fn divisor_degrees(&self) -> Vec<bool> {
        let total = self.total_degree();
        let mut reachable = vec![false; total + 1];
        reachable[0] = true;
        for &(d, m) in &self.factors {
            for _ in 0..m {
                for s in (d..=total).rev() {
                    if reachable[s - d] {
                        reachable[s] = true;
                    }
                }
            }
        }
        reachable
    }

    /// Whether some divisor has degree strictly between 0 and the total degree.
    pub fn admits_proper_split(&self) -> bool {
        let reachable = self.divisor_degrees();
        let total = reachable.len() - 1;
        (1..total).any(|s| reachable[s])
    }
}

/// Reduction of a polynomial over `Q` modulo `p`; every denominator must be prime to `p`.
pub fn reduce_mod_p(f: &Poly<Rational>, p: u64) -> Result<Poly<Fp>, OracleError> {
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(OracleError::NotPrime(p));
    }
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| Fp::from_rational(&p, c).ok_or(OracleError::NotPIntegral(p)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(p, coeffs))
}

fn mul_mod(a: &Poly<Fp>, b: &Poly<Fp>, m: &Poly<Fp>) -> Poly<Fp> {
    a.times(b).rem(m)
}

fn pow_mod(base: &Poly<Fp>, e: &BigUint, m: &Poly<Fp>) -> Poly<Fp> {
    let mut acc = Poly::constant(Fp::one(m.context())).rem(m);
    let base = base.rem(m);
    for i in (0..e.bits()).rev() {
        acc = mul_mod(&acc, &acc, m);
        if e.bit(i) {
            acc = mul_mod(&acc, &base, m);
        }
    }
    acc
}

fn exact_div(a: &Poly<Fp>, b: &Poly<Fp>) -> Poly<Fp> {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero());
    q
}

/// `g(z^(1/p))` for a polynomial whose only nonzero terms have exponents divisible by `p`.
fn pth_root(g: &Poly<Fp>) -> Poly<Fp> {
    let p = *g.context();
    let coeffs = g.coeffs().iter().step_by(p as usize).copied().collect();
    Poly::new(p, coeffs)
}

/// Squarefree decomposition of a monic polynomial as `(factor, multiplicity)`.
fn squarefree(f: &Poly<Fp>) -> Vec<(Poly<Fp>, usize)> {
    let p = *f.context() as usize;
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = exact_div(f, &c);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = exact_div(&w, &y);
        if !fac.is_constant() {
            out.push((fac, i));
        }
        w = y;
        c = exact_div(&c, &w);
        i += 1;
    }
    if !c.is_constant() {
        for (fac, m) in squarefree(&pth_root(&c)) {
            out.push((fac, m * p));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of same-degree irreducibles.
fn distinct_degree(f: &Poly<Fp>) -> Vec<(Poly<Fp>, usize)> {
    let p = BigUint::from(*f.context());
    let x = Poly::var(f.context());
    let mut g = f.clone();
    let mut h = x.rem(&g);
    let mut out = Vec::new();
    let mut d = 1;
    while g.degree().unwrap_or(0) >= 2 * d {
        h = pow_mod(&h, &p, &g);
        let q = g.gcd(&h.minus(&x));
        if !q.is_one() {
            g = exact_div(&g, &q);
            h = h.rem(&g);
            out.push((q, d));
        }
        d += 1;
    }
    if let Some(deg) = g.degree().filter(|&deg| deg > 0) {
        out.push((g, deg));
    }
    out
}

fn random_below(f: &Poly<Fp>, rng: &mut impl Rng) -> Poly<Fp> {
    let p = *f.context();
    let n = f.degree().expect("nonzero");
    let coeffs = (0..n).map(|_| Fp::new(rng.gen_range(0..p) as i64, p)).collect();
    Poly::new(p, coeffs)
}

/// Splits a product of distinct irreducibles of degree `d` into those irreducibles.
fn equal_degree(f: &Poly<Fp>, d: usize, rng: &mut impl Rng, out: &mut Vec<Poly<Fp>>) {
    let n = f.degree().expect("nonzero");
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = *f.context();
    let exponent = if p == 2 { None } else { Some((BigUint::from(p).pow(d as u32) - 1u32) / 2u32) };
    loop {
        let a = random_below(f, rng);
        if a.is_constant() {
            continue;
        }
        let b = match &exponent {
            Some(e) => pow_mod(&a, e, f).minus(&Poly::constant(Fp::one(&p))),
            None => {
                // Trace map a + a^2 + ... + a^(2^(d-1)), which lands in F_2 on each component.
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    t = mul_mod(&t, &t, f);
                    acc = acc.plus(&t);
                }
                acc
            }
        };
        let g = f.gcd(&b);
        let deg = g.degree().unwrap_or(0);
        if deg > 0 && deg < n {
            equal_degree(&g, d, rng, out);
            equal_degree(&exact_div(f, &g), d, rng, out);
            return;
        }
    }
}

/// Full factorization of a nonzero polynomial over `F_p` into monic irreducibles
/// with multiplicities, sorted by degree then coefficients. The leading
/// coefficient is dropped.
pub fn factor_fp(f: &Poly<Fp>, rng: &mut impl Rng) -> Vec<(Poly<Fp>, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut out = Vec::new();
    for (part, m) in squarefree(&f.monic()) {
        for (block, d) in distinct_degree(&part) {
            let mut irreducibles = Vec::new();
            equal_degree(&block, d, rng, &mut irreducibles);
            out.extend(irreducibles.into_iter().map(|g| (g, m)));
        }
    }
    out.sort_by(|(a, ma), (b, mb)| {
        let key = |g: &Poly<Fp>| (g.degree(), g.coeffs().iter().map(Fp::value).collect::<Vec<_>>());
        key(a).cmp(&key(b)).then(ma.cmp(mb))
    });
    out
}

pub fn pattern_of(factors: &[(Poly<Fp>, usize)], p: u64) -> DegreePattern {
    let mut degrees: Vec<(usize, usize)> =
        factors.iter().map(|(g, m)| (g.degree().expect("nonconstant"), *m)).collect();
    degrees.sort_unstable();
    DegreePattern { prime: p, factors: degrees }
}

/// Degree pattern of `f mod p` with a caller-supplied seed for the splitting step.
pub fn factor_mod_p_seeded(f: &Poly<Rational>, p: u64, seed: u64) -> Result<DegreePattern, OracleError> {
    let reduced = reduce_mod_p(f, p)?;
    if reduced.degree() != f.degree() || f.is_zero() {
        return Err(OracleError::LeadingCoefficientVanishes(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(pattern_of(&factor_fp(&reduced, &mut rng), p))
}

/// Degree pattern of `f mod p`.
pub fn factor_mod_p(f: &Poly<Rational>, p: u64) -> Result<DegreePattern, OracleError> {
    factor_mod_p_seeded(f, p, DEFAULT_SPLIT_SEED ^ p)
}

/// The rational multiple of `f` with coprime integer coefficients and a
/// positive leading coefficient.
pub fn primitive_integer_part(f: &Poly<Rational>) -> Poly<Rational> {
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &lcm).to_integer()).collect();
    let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return f.clone();
    }
    if ints.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    Poly::new((), ints.into_iter().map(|c| Rational::from_integer(c / &content)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::parse_poly_in;

    fn q(s: &str) -> Poly<Rational> {
        parse_poly_in(s, &()).unwrap()
    }

    fn pattern(p: u64, f: &[(usize, usize)]) -> DegreePattern {
        DegreePattern { prime: p, factors: f.to_vec() }
    }

    #[test]
    fn small_patterns() {
        assert_eq!(factor_mod_p(&q("z^2 + 1"), 5).unwrap(), pattern(5, &[(1, 1), (1, 1)]));
        assert_eq!(factor_mod_p(&q("z^2 + 1"), 3).unwrap(), pattern(3, &[(2, 1)]));
        assert_eq!(factor_mod_p(&q("z^4 + 1"), 2).unwrap(), pattern(2, &[(1, 4)]));
    }

    #[test]
    fn repeated_and_inseparable_parts() {
        // (z^2 + z + 1)^2 (z + 1)^3 over F_2 is inseparable in parts.
        let f = q("(z^2 + z + 1)^2 * (z + 1)^3");
        assert_eq!(factor_mod_p(&f, 2).unwrap(), pattern(2, &[(1, 3), (2, 2)]));
        // z^9 - z over F_3 is the product of all monic irreducibles of degree 1 or 2.
        let g = q("z^9 - z");
        assert_eq!(factor_mod_p(&g, 3).unwrap(), pattern(3, &[(1, 1), (1, 1), (1, 1), (2, 1), (2, 1), (2, 1)]));
    }

    #[test]
    fn factors_multiply_back() {
        let p = 7;
        let f = reduce_mod_p(&q("3*z^6 + z^5 - 2*z^3 + 4*z + 5"), p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let factors = factor_fp(&f, &mut rng);
        let product = factors
            .iter()
            .fold(Poly::constant(Fp::one(&p)), |acc, (g, m)| acc.times(&g.pow(*m as u32)));
        assert_eq!(product, f.monic());
    }

    #[test]
    fn reduction_errors() {
        assert_eq!(reduce_mod_p(&q("z/3 + 1"), 3), Err(OracleError::NotPIntegral(3)));
        assert_eq!(factor_mod_p(&q("3*z^2 + 1"), 3), Err(OracleError::LeadingCoefficientVanishes(3)));
        assert_eq!(factor_mod_p(&q("z + 1"), 4), Err(OracleError::NotPrime(4)));
    }

    #[test]
    fn proper_splits() {
        assert!(!pattern(3, &[(2, 1)]).admits_proper_split());
        assert!(pattern(3, &[(2, 1), (2, 1)]).admits_proper_split());
        assert!(pattern(2, &[(1, 4)]).admits_proper_split());
        assert!(!pattern(5, &[(5, 1)]).admits_proper_split());
    }

    #[test]
    fn primitive_part() {
        assert_eq!(primitive_integer_part(&q("1/2*z^2 + 3/4")), q("2*z^2 + 3"));
        assert_eq!(primitive_integer_part(&q("-6*z - 4")), q("3*z + 2"));
    }
}

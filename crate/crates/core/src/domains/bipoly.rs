use num_bigint::BigInt;

use super::frac::GcdDomain;
use super::poly::Poly;
use super::render::{join_terms, Render};
use super::ring::{Field, Ring};

/// Bivariate polynomial in `x, y` over a field, stored as a polynomial in `y`
/// whose coefficients are polynomials in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly<K: Field>(Poly<Poly<K>>);

impl<K: Field> BiPoly<K> {
    pub fn from_y_coeffs(ctx: K::Ctx, coeffs: Vec<Poly<K>>) -> Self {
        BiPoly(Poly::new(ctx, coeffs))
    }

    /// Sum of `c · x^t · y^s` over `(t, s, c)`.
    pub fn from_terms(ctx: &K::Ctx, terms: &[(usize, usize, K)]) -> Self {
        let mut acc = BiPoly::zero(ctx);
        for (t, s, c) in terms {
            acc = acc.plus(&BiPoly::monomial(c.clone(), *t, *s));
        }
        acc
    }

    pub fn monomial(c: K, t: usize, s: usize) -> Self {
        BiPoly(Poly::monomial(Poly::monomial(c, t), s))
    }

    pub fn constant(c: K) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn x(ctx: &K::Ctx) -> Self {
        BiPoly::monomial(K::one(ctx), 1, 0)
    }

    pub fn y(ctx: &K::Ctx) -> Self {
        BiPoly::monomial(K::one(ctx), 0, 1)
    }

    pub fn y_coeffs(&self) -> &[Poly<K>] {
        self.0.coeffs()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Nonzero terms as `(x-exponent, y-exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &K)> + '_ {
        self.0.coeffs().iter().enumerate().flat_map(|(s, cx)| {
            cx.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(t, c)| (t, s, c))
        })
    }

    /// Lexicographically least exponent pair `(t, s)` over nonzero terms.
    pub fn min_exponent(&self) -> Option<(usize, usize)> {
        self.0
            .coeffs()
            .iter()
            .enumerate()
            .filter_map(|(s, cx)| cx.coeffs().iter().position(|c| !c.is_zero()).map(|t| (t, s)))
            .min()
    }

    /// Leading coefficient in the base field: highest `y` power, then highest `x` power.
    pub fn leading_unit(&self) -> Option<&K> {
        self.0.leading().and_then(Poly::leading)
    }

    pub fn scale_base(&self, c: &K) -> Self {
        let ctx = c.ctx();
        BiPoly(self.0.map(ctx, |cx| cx.scale(c)))
    }

    fn scale_x(&self, c: &Poly<K>) -> Self {
        BiPoly(self.0.scale(c))
    }

    /// Gcd of the `y`-coefficients, monic in `x`.
    pub fn content(&self) -> Poly<K> {
        self.0
            .coeffs()
            .iter()
            .fold(Poly::zero_poly(self.0.context()), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        let ctx = self.0.context().clone();
        BiPoly(self.0.map(ctx, |cx| {
            let (q, r) = cx.div_rem(&c);
            debug_assert!(r.is_zero());
            q
        }))
    }

    /// A pseudo-remainder of `self` by `divisor` in `y`, up to a factor from `K[x]`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.degree_y().expect("nonzero divisor");
        let lb = divisor.0.leading().expect("nonzero divisor").clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree_y() {
            if dr < db {
                break;
            }
            let lr = r.0.leading().expect("nonzero").clone();
            let sub = BiPoly(divisor.0.shift(dr - db)).scale_x(&lr);
            r = r.scale_x(&lb).minus(&sub);
        }
        r
    }

    /// `gcd(self, other)` when `self` is a single term: the componentwise
    /// least exponents.
    fn monomial_gcd(&self, other: &Self) -> Option<Self> {
        let mut terms = self.terms();
        let (t, s, c) = terms.next()?;
        if terms.next().is_some() {
            return None;
        }
        let (t, s) = other
            .terms()
            .fold((t, s), |(t, s), (u, v, _)| (t.min(u), s.min(v)));
        Some(BiPoly::monomial(K::one(&c.ctx()), t, s))
    }

    fn normalized(&self) -> Self {
        match self.leading_unit() {
            None => self.clone(),
            Some(u) => self.scale_base(&u.inverse().expect("nonzero leading unit")),
        }
    }
}

impl<K: Field> Ring for BiPoly<K> {
    type Ctx = K::Ctx;

    fn zero(ctx: &K::Ctx) -> Self {
        BiPoly(Poly::zero_poly(ctx))
    }
    fn one(ctx: &K::Ctx) -> Self {
        BiPoly::constant(K::one(ctx))
    }
    fn from_int(ctx: &K::Ctx, n: &BigInt) -> Self {
        BiPoly::constant(K::from_int(ctx, n))
    }
    fn ctx(&self) -> K::Ctx {
        self.0.context().clone()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        BiPoly(self.0.plus(&other.0))
    }
    fn minus(&self, other: &Self) -> Self {
        BiPoly(self.0.minus(&other.0))
    }
    fn times(&self, other: &Self) -> Self {
        BiPoly(self.0.times(&other.0))
    }
    fn negate(&self) -> Self {
        BiPoly(self.0.negate())
    }
}

impl<K: Field> GcdDomain for BiPoly<K> {
    /// Primitive remainder sequence over `K[x][y]`; the result has leading unit one.
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        if let Some(g) = self.monomial_gcd(other).or_else(|| other.monomial_gcd(self)) {
            return g;
        }
        // y is prime and coprime to the rest, so its power splits off exactly.
        let (sa, a) = self.0.strip_low_zeros();
        let (sb, b) = other.0.strip_low_zeros();
        let y_power = BiPoly::monomial(K::one(&self.ctx()), 0, sa.min(sb));
        let (a, b) = (BiPoly(a), BiPoly(b));
        let content = a.content().gcd(&b.content());
        let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
        if a.degree_y() == Some(0) || b.degree_y() == Some(0) || coprime_in_y(&a, &b) {
            return BiPoly(Poly::constant(content)).times(&y_power).normalized();
        }
        if a.degree_y() < b.degree_y() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.scale_x(&content).times(&y_power).normalized()
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let ctx = self.ctx();
        let db = divisor.degree_y().expect("division by zero");
        let lb = divisor.0.leading().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero(&ctx);
        while let Some(dr) = rem.degree_y() {
            assert!(dr >= db, "inexact bivariate division");
            let (qc, r) = rem.0.leading().expect("nonzero").div_rem(&lb);
            assert!(r.is_zero(), "inexact bivariate division");
            let step = BiPoly(Poly::monomial(qc, dr - db));
            rem = rem.minus(&step.times(divisor));
            quot = quot.plus(&step);
        }
        quot
    }

    fn unit_normalizer(&self) -> Option<Self> {
        self.leading_unit()
            .and_then(Field::inverse)
            .map(BiPoly::constant)
    }
}

/// Specializations tried by [`coprime_in_y`].
const SPECIALIZATION_POINTS: i64 = 8;

/// Whether `a` and `b` certainly have no common factor of positive degree in
/// `y`. Specializing `x` at a point where neither leading coefficient vanishes
/// keeps the degree of any common factor, so a constant gcd of the
/// specializations is a proof. `false` means unknown.
fn coprime_in_y<K: Field>(a: &BiPoly<K>, b: &BiPoly<K>) -> bool {
    let ctx = a.ctx();
    let (la, lb) = (a.0.leading().expect("nonzero"), b.0.leading().expect("nonzero"));
    let eval = |f: &BiPoly<K>, x0: &K| {
        Poly::new(ctx.clone(), f.0.coeffs().iter().map(|c| c.eval(x0)).collect())
    };
    let mut tried = Vec::new();
    for n in 1..=SPECIALIZATION_POINTS {
        let x0 = K::from_int(&ctx, &BigInt::from(n));
        if tried.contains(&x0) {
            break;
        }
        tried.push(x0.clone());
        if la.eval(&x0).is_zero() || lb.eval(&x0).is_zero() {
            continue;
        }
        return eval(a, &x0).gcd(&eval(b, &x0)).degree() == Some(0);
    }
    false
}

fn monomial_text(t: usize, s: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    [part("x", t), part("y", s)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl<K: Field> Render for BiPoly<K> {
    fn render(&self) -> String {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(t, s, _)| (t, s));
        join_terms(terms.into_iter().map(|(t, s, c)| {
            let mono = monomial_text(t, s);
            if mono.is_empty() {
                c.render()
            } else if c.is_one() {
                mono
            } else if c.negate().is_one() {
                format!("-{mono}")
            } else {
                format!("{}*{mono}", c.render())
            }
        }))
    }
}

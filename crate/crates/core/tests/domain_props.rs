mod common;

use common::*;
use krull_dumas::domains::{
    parse_poly, poly_mul, reduce_frac, AnyPoly, BiFrac, DomainTag, Field, Fp, GcdDomain, Poly, Ring,
};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;

const FP: u64 = 5;

fn sample(tag: DomainTag, rng: &mut ChaCha8Rng) -> AnyPoly {
    match tag {
        DomainTag::Q => AnyPoly::Q(poly_over(rng, (), 3, |r| rat(r, 9))),
        DomainTag::Qx => AnyPoly::Qx(poly_over(rng, (), 2, qx_elem)),
        DomainTag::BivariateQ => AnyPoly::BivariateQ(poly_over(rng, (), 2, biq_elem)),
        DomainTag::BivariateFp(p) => AnyPoly::BivariateFp(poly_over(rng, p, 2, |r| bifp_elem(r, p))),
    }
}

fn add(a: &AnyPoly, b: &AnyPoly) -> AnyPoly {
    match (a, b) {
        (AnyPoly::Q(x), AnyPoly::Q(y)) => AnyPoly::Q(x.plus(y)),
        (AnyPoly::Qx(x), AnyPoly::Qx(y)) => AnyPoly::Qx(x.plus(y)),
        (AnyPoly::BivariateQ(x), AnyPoly::BivariateQ(y)) => AnyPoly::BivariateQ(x.plus(y)),
        (AnyPoly::BivariateFp(x), AnyPoly::BivariateFp(y)) => AnyPoly::BivariateFp(x.plus(y)),
        _ => panic!("domain mismatch"),
    }
}

fn tags() -> impl Strategy<Value = DomainTag> {
    prop_oneof![
        Just(DomainTag::Q),
        Just(DomainTag::Qx),
        Just(DomainTag::BivariateQ),
        Just(DomainTag::BivariateFp(FP)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn multiplication_axioms(tag in tags(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g, h) = (sample(tag, &mut r), sample(tag, &mut r), sample(tag, &mut r));
        let fg = poly_mul(&f, &g).unwrap();
        prop_assert_eq!(&fg, &poly_mul(&g, &f).unwrap());
        prop_assert_eq!(poly_mul(&fg, &h).unwrap(), poly_mul(&f, &poly_mul(&g, &h).unwrap()).unwrap());
        prop_assert_eq!(
            poly_mul(&f, &add(&g, &h)).unwrap(),
            add(&fg, &poly_mul(&f, &h).unwrap())
        );
    }

    #[test]
    fn degrees_add(tag in tags(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g) = (sample(tag, &mut r), sample(tag, &mut r));
        let fg = poly_mul(&f, &g).unwrap();
        match (f.degree(), g.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(fg.degree(), Some(a + b)),
            _ => prop_assert_eq!(fg.degree(), None),
        }
    }

    #[test]
    fn render_then_parse_is_identity(tag in tags(), seed in any::<u64>()) {
        let f = sample(tag, &mut rng(seed));
        let text = f.render();
        let back = parse_poly(&text, tag).unwrap();
        prop_assert_eq!(&back, &f, "{}", text);
        prop_assert_eq!(back.render(), text);
    }

    #[test]
    fn reduced_fractions_are_canonical(seed in any::<u64>()) {
        let mut r = rng(seed);
        // An unreduced representative: multiply numerator and denominator by a common factor.
        let c = biq_elem(&mut r);
        let common = loop {
            let k = biq_elem(&mut r);
            if !k.numer().is_zero() {
                break k.numer().clone();
            }
        };
        let again = reduce_frac(c.numer().times(&common), c.denom().times(&common)).unwrap();
        prop_assert_eq!(&again, &c);
        let g = c.numer().gcd(c.denom());
        prop_assert!(g.is_one() || c.numer().is_zero(), "gcd {:?}", g);
    }

    #[test]
    fn univariate_fractions_are_canonical(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = qx_elem(&mut r);
        let k = nonzero_q_poly(&mut r, 2, 5);
        let again = reduce_frac(c.numer().times(&k), c.denom().times(&k)).unwrap();
        prop_assert_eq!(&again, &c);
        prop_assert!(Poly::gcd(c.numer(), c.denom()).is_one() || c.numer().is_zero());
        prop_assert!(c.denom().leading().unwrap().is_one());
    }

    #[test]
    fn field_inverses(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = nonzero(&mut r, biq_elem);
        prop_assert!(a.times(&a.inverse().unwrap()).is_one());
        let b = nonzero(&mut r, |r| bifp_elem(r, FP));
        prop_assert!(b.times(&b.inverse().unwrap()).is_one());
        let c = nonzero_qx_elem(&mut r);
        prop_assert!(c.divide(&c).unwrap().is_one());
    }
}

#[test]
fn prime_field_reduction_in_coefficients() {
    let f = parse_poly("5*x*z + 6*y", DomainTag::BivariateFp(5)).unwrap();
    assert_eq!(f.render(), "y");
    let AnyPoly::BivariateFp(g) = f else { unreachable!() };
    let c: &BiFrac<Fp> = &g.coeffs()[0];
    assert_eq!(c.numer().terms().count(), 1);
}

mod common;

use common::*;
use krull_dumas::domains::{parse_poly, poly_mul, AnyPoly, DomainTag, Poly, Rational, Ring};
use krull_dumas::oracle::{check_factors, factor_mod_p, pattern_irreducible, Certification, OracleError};
use krull_dumas::valuations::ValuationSpec;
use proptest::prelude::*;
use rand::Rng;

fn from_residues(c: &[u64]) -> Poly<Rational> {
    Poly::new((), c.iter().map(|&x| q(x as i64, 1)).collect())
}

fn q_poly_text(s: &str) -> Poly<Rational> {
    let AnyPoly::Q(f) = parse_poly(s, DomainTag::Q).unwrap() else { unreachable!() };
    f
}

#[test]
fn matches_trial_division_exhaustively_for_small_fields() {
    for p in [2u64, 3] {
        let brute = BruteForce::new(p, 6);
        for d in 1..=6 {
            for f in monic_polys(p, d) {
                let ours = factor_mod_p(&from_residues(&f), p).unwrap();
                assert_eq!(ours.factors, brute.pattern(&f), "p = {p}, f = {f:?}");
            }
        }
    }
}

#[test]
fn matches_trial_division_on_samples() {
    for p in [5u64, 7] {
        let brute = BruteForce::new(p, 6);
        let mut r = rng(p);
        for _ in 0..400 {
            let d = r.gen_range(1..=6);
            let mut f: Vec<u64> = (0..d).map(|_| r.gen_range(0..p)).collect();
            f.push(1);
            let ours = factor_mod_p(&from_residues(&f), p).unwrap();
            assert_eq!(ours.factors, brute.pattern(&f), "p = {p}, f = {f:?}");
        }
    }
}

#[test]
fn non_monic_inputs_reduce_first() {
    // 3z^2 + 3 = 3(z^2 + 1) mod 7 is irreducible; 1/2·z^2 − 1/2 splits mod 5.
    let a = factor_mod_p(&q_poly_text("3*z^2 + 3"), 7).unwrap();
    assert_eq!(a.factors, vec![(2, 1)]);
    let b = factor_mod_p(&q_poly_text("1/2*z^2 - 1/2"), 5).unwrap();
    assert_eq!(b.factors, vec![(1, 1), (1, 1)]);
    assert_eq!(factor_mod_p(&q_poly_text("1/5*z + 1"), 5), Err(OracleError::NotPIntegral(5)));
    assert_eq!(
        factor_mod_p(&q_poly_text("5*z^2 + z"), 5),
        Err(OracleError::LeadingCoefficientVanishes(5))
    );
}

#[test]
fn certification_examples() {
    let c = pattern_irreducible(&q_poly_text("z^2 + 1"), &[3]).unwrap();
    assert!(matches!(c, Certification::Certified { ref pattern } if pattern.prime == 3));
    let d = pattern_irreducible(&q_poly_text("z^4 + 1"), &[3, 5, 7, 11, 13]).unwrap();
    assert!(!d.is_certified());
}

#[test]
fn second_criterion_counterexample_is_not_misreported() {
    let g = parse_poly("z + 1", DomainTag::Q).unwrap();
    let h = parse_poly("1/2*z^3 - 1/2*z^2 + 3/2*z + 1/2", DomainTag::Q).unwrap();
    let f = poly_mul(&g, &h).unwrap();
    assert_eq!(f, parse_poly("1/2 + 2*z + z^2 + 1/2*z^4", DomainTag::Q).unwrap());
    let trial = check_factors(&[g, h], ValuationSpec::PAdic(2)).unwrap();
    assert!(trial.passed(), "{:?}", trial.failures);
    assert!(trial.theorem2_delta.is_none_or(|d| d <= 1), "{:?}", trial.theorem2_delta);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn products_are_never_certified(seed in any::<u64>()) {
        let mut r = rng(seed);
        let factor = |r: &mut rand_chacha::ChaCha8Rng| loop {
            let d = r.gen_range(1..=4);
            let f = Poly::new((), (0..=d).map(|_| q(r.gen_range(-9..=9), 1)).collect());
            if f.degree() == Some(d) {
                return f;
            }
        };
        let (g, h) = (factor(&mut r), factor(&mut r));
        let f = g.times(&h);
        let c = pattern_irreducible(&f, &[3, 5, 7, 11, 13, 17]).unwrap();
        prop_assert!(!c.is_certified(), "{} certified by {:?}", f.render_in("z"), c);
    }
}

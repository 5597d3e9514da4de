use serde::{Deserialize, Serialize};

use super::finite_field::{factor_mod_p, primitive_integer_part, DegreePattern};
use super::OracleError;
use crate::domains::{Poly, Rational};

/// Outcome of the degree-pattern irreducibility test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certification {
    /// Degree one, so irreducible outright.
    Linear,
    /// The pattern modulo `pattern.prime` admits no proper divisor degree.
    Certified { pattern: DegreePattern },
    /// Every usable prime left a proper split open, or no prime was usable.
    Inconclusive { patterns: Vec<DegreePattern> },
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Certification::Inconclusive { .. })
    }
}

/// Sound, incomplete irreducibility test over `Q`.
///
/// A factorization `F = G·H` of the primitive integer form `F` of `f` reduces
/// modulo any prime not dividing the leading coefficient to a factorization
/// with the same degrees, so a pattern with no proper divisor degree rules it
/// out. Primes dividing the leading coefficient are skipped.
pub fn pattern_irreducible(f: &Poly<Rational>, primes: &[u64]) -> Result<Certification, OracleError> {
    if primes.is_empty() {
        return Err(OracleError::EmptyPrimeList);
    }
    let n = f.degree().ok_or(OracleError::ZeroPolynomial)?;
    if n == 0 {
        return Err(OracleError::ConstantPolynomial);
    }
    if n == 1 {
        return Ok(Certification::Linear);
    }
    let g = primitive_integer_part(f);
    let mut patterns = Vec::new();
    for &p in primes {
        let pattern = match factor_mod_p(&g, p) {
            Ok(pattern) => pattern,
            Err(OracleError::LeadingCoefficientVanishes(_)) => continue,
            Err(e) => return Err(e),
        };
        if !pattern.admits_proper_split() {
            return Ok(Certification::Certified { pattern });
        }
        patterns.push(pattern);
    }
    Ok(Certification::Inconclusive { patterns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::parse_poly_in;

    fn q(s: &str) -> Poly<Rational> {
        parse_poly_in(s, &()).unwrap()
    }

    #[test]
    fn certifies_from_a_single_prime() {
        let c = pattern_irreducible(&q("z^2 + 1"), &[3]).unwrap();
        assert!(matches!(c, Certification::Certified { pattern } if pattern.prime == 3));
    }

    #[test]
    fn quartic_cyclotomic_stays_open() {
        let c = pattern_irreducible(&q("z^4 + 1"), &[3, 5, 7, 11, 13]).unwrap();
        let Certification::Inconclusive { patterns } = c else { panic!("unexpected certificate") };
        assert_eq!(patterns.len(), 5);
    }

    #[test]
    fn reducible_input_is_never_certified() {
        assert!(!pattern_irreducible(&q("z^2 - 1"), &[5]).unwrap().is_certified());
    }

    #[test]
    fn leading_coefficient_primes_are_skipped() {
        // Modulo 3 the leading term vanishes; modulo 2 this is the irreducible z^2 + z + 1.
        let c = pattern_irreducible(&q("3*z^2 + z + 1"), &[3, 2]).unwrap();
        assert!(matches!(c, Certification::Certified { pattern } if pattern.prime == 2));
    }

    #[test]
    fn errors() {
        assert_eq!(pattern_irreducible(&q("z^2 + 1"), &[]), Err(OracleError::EmptyPrimeList));
        assert_eq!(pattern_irreducible(&q("0"), &[3]), Err(OracleError::ZeroPolynomial));
        assert_eq!(pattern_irreducible(&q("z + 1"), &[3]), Ok(Certification::Linear));
    }
}

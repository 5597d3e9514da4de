//! Independent ground truth: factorization over prime fields, a sound
//! irreducibility certifier over `Q`, and the random-product soundness harness.

mod certify;
mod finite_field;
mod harness;
mod sample;

use thiserror::Error;

pub use certify::{pattern_irreducible, Certification};
pub use finite_field::{
    factor_fp, factor_mod_p, factor_mod_p_seeded, pattern_of, primitive_integer_part, reduce_mod_p, DegreePattern,
    DEFAULT_SPLIT_SEED,
};
pub use harness::{
    check_factors, run_trial, soundness_harness, FactorCertificate, HarnessConfig, HarnessError, HarnessSummary,
    SoundnessTrial, CERTIFICATION_PRIMES,
};
pub use sample::{sample_eisenstein, sample_factor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("a coefficient has a denominator divisible by {0}")]
    NotPIntegral(u64),
    #[error("the leading coefficient vanishes modulo {0}")]
    LeadingCoefficientVanishes(u64),
    #[error("the prime list is empty")]
    EmptyPrimeList,
    #[error("the zero polynomial is not a valid input")]
    ZeroPolynomial,
    #[error("constant polynomials are neither irreducible nor reducible here")]
    ConstantPolynomial,
}

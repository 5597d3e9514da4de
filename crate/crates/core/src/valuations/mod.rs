//! Krull valuations on the built-in coefficient domains, and their Gauss
//! extensions to polynomial rings.

mod gauss;
mod monomial;
mod padic;
mod qx_rank2;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::domains::{is_prime, DomainTag};
use crate::values::{Value, ValueError, ValueGroup};

pub use gauss::{gauss_extend, gauss_extend_values, ExtendedValuation, GaussValue};
pub use monomial::{monomial_lex, monomial_lex_poly, MonomialLex};
pub use padic::{vp_int, vp_rational, PAdic};
pub use qx_rank2::{deg_val, gauss_vp, rank2_poly, rank2_qx, residue_mod_p, QxRank2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("valuation input must be nonzero")]
    ZeroInput,
    #[error("unknown valuation spec {0:?} (expected p-adic:<p>, qx-rank2:<p> or monomial-lex)")]
    UnknownSpec(String),
    #[error("valuation {spec} does not apply to domain {domain}")]
    Incompatible { spec: String, domain: String },
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// A Krull valuation on the coefficient domain `C` with value group `Z^rank`.
pub trait Valuation<C>: Send + Sync {
    fn rank(&self) -> usize;

    /// `v(c)`; infinity exactly for zero.
    fn value(&self, c: &C) -> Value;

    fn spec(&self) -> ValuationSpec;

    fn value_group(&self) -> ValueGroup {
        ValueGroup::integer_lattice(self.rank())
    }
}

/// Textual valuation selector, e.g. `p-adic:3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValuationSpec {
    PAdic(u64),
    QxRank2(u64),
    MonomialLex,
}

impl ValuationSpec {
    /// The valuation must be defined on the domain's elements.
    pub fn check_domain(&self, tag: DomainTag) -> Result<(), ValuationError> {
        let ok = matches!(
            (self, tag),
            (ValuationSpec::PAdic(_), DomainTag::Q)
                | (ValuationSpec::QxRank2(_), DomainTag::Qx)
                | (ValuationSpec::MonomialLex, DomainTag::BivariateQ | DomainTag::BivariateFp(_))
        );
        if ok {
            Ok(())
        } else {
            Err(ValuationError::Incompatible {
                spec: self.to_string(),
                domain: tag.to_string(),
            })
        }
    }

    /// The domain a harness draws samples from for this valuation.
    pub fn default_domain(&self) -> DomainTag {
        match self {
            ValuationSpec::PAdic(_) => DomainTag::Q,
            ValuationSpec::QxRank2(_) => DomainTag::Qx,
            ValuationSpec::MonomialLex => DomainTag::BivariateQ,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            ValuationSpec::PAdic(_) => 1,
            ValuationSpec::QxRank2(_) | ValuationSpec::MonomialLex => 2,
        }
    }
}

impl FromStr for ValuationSpec {
    type Err = ValuationError;

    fn from_str(s: &str) -> Result<Self, ValuationError> {
        let s = s.trim();
        if s == "monomial-lex" {
            return Ok(ValuationSpec::MonomialLex);
        }
        let unknown = || ValuationError::UnknownSpec(s.to_string());
        let (kind, p) = s.split_once(':').ok_or_else(unknown)?;
        let p: u64 = p.trim().parse().map_err(|_| unknown())?;
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(ValuationError::NotPrime(p));
        }
        match kind.trim() {
            "p-adic" => Ok(ValuationSpec::PAdic(p)),
            "qx-rank2" => Ok(ValuationSpec::QxRank2(p)),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for ValuationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationSpec::PAdic(p) => write!(f, "p-adic:{p}"),
            ValuationSpec::QxRank2(p) => write!(f, "qx-rank2:{p}"),
            ValuationSpec::MonomialLex => write!(f, "monomial-lex"),
        }
    }
}

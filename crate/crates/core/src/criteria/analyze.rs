use serde::{Deserialize, Serialize};

use super::newton::newton_polygon_values;
use super::theorem1::{corollary1_values, theorem1_values};
use super::theorem2::theorem2_values;
use super::{CoefficientValues, CriterionError, NewtonPolygon, Result, Theorem1Report, Theorem2Report};
use crate::domains::{AnyPoly, Field, Poly, Ring};
use crate::valuations::{MonomialLex, PAdic, QxRank2, Valuation, ValuationSpec};
use crate::values::Value;

/// Version of the serialized [`AnalysisReport`] layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Divide out the largest power of `z` before analysis.
    pub strip_z0: bool,
}

/// What the certificates together say about the factors of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Irreducible,
    /// Every factorization has a factor of degree at most `bound`.
    TwoFactorBound { bound: usize },
    /// Every irreducible factor has degree at least `degree`.
    MinFactorDegree { degree: u64 },
    Both { bound: usize, min_degree: u64 },
    Inconclusive,
}

impl Verdict {
    /// Combines the two certificates for a polynomial of degree `n`.
    ///
    /// A bound is reported only when it beats the trivial `n / 2`, and a minimum
    /// degree only when it exceeds 1. Irreducibility follows from a zero bound,
    /// from a minimum degree above `n / 2`, or from a minimum degree above the bound.
    pub fn assemble(n: usize, t1: Option<&Theorem1Report>, t2: Option<&Theorem2Report>) -> Verdict {
        let bound = t1.map(|r| r.bound);
        let delta = t2.map(|r| r.delta_f);
        let irreducible = bound == Some(0)
            || delta.is_some_and(|d| 2 * d > n as u64)
            || matches!((bound, delta), (Some(b), Some(d)) if d > b as u64);
        if irreducible {
            return Verdict::Irreducible;
        }
        let bound = bound.filter(|&b| b < n / 2);
        let delta = delta.filter(|&d| d >= 2);
        match (bound, delta) {
            (Some(bound), Some(min_degree)) => Verdict::Both { bound, min_degree },
            (Some(bound), None) => Verdict::TwoFactorBound { bound },
            (None, Some(degree)) => Verdict::MinFactorDegree { degree },
            (None, None) => Verdict::Inconclusive,
        }
    }
}

/// Outcome of attempting the minimum-degree criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Theorem2Status {
    Applied,
    NoQualifyingIndex,
    Inapplicable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    /// The input polynomial in canonical form.
    pub polynomial: String,
    pub domain: Option<String>,
    pub valuation: String,
    /// Power of `z` divided out before analysis; zero unless stripping was requested.
    pub stripped_z_power: usize,
    /// Degree of the analyzed polynomial (after stripping).
    pub degree: usize,
    pub coefficient_values: Vec<Value>,
    pub theorem1: Option<Theorem1Report>,
    pub theorem2: Option<Theorem2Report>,
    pub theorem2_status: Theorem2Status,
    /// Whether the gcd form was run and matched (rank-1 valuations only).
    pub rank1_gcd_form_checked: bool,
    pub verdict: Verdict,
    pub newton_polygon: NewtonPolygon,
}

impl AnalysisReport {
    pub fn verdict_is_consistent(&self) -> bool {
        self.verdict == Verdict::assemble(self.degree, self.theorem1.as_ref(), self.theorem2.as_ref())
    }
}

fn analyze_values(
    cv: &CoefficientValues,
    polynomial: String,
    valuation: String,
    stripped_z_power: usize,
) -> Result<AnalysisReport> {
    let theorem1 = theorem1_values(cv)?;
    let rank1 = cv.group.rank() == 1;
    if rank1 && corollary1_values(cv)? != theorem1 {
        return Err(CriterionError::Internal("gcd form disagrees with divisor-wise form".into()));
    }
    let (theorem2, theorem2_status) = match theorem2_values(cv) {
        Ok(Some(r)) => (Some(r), Theorem2Status::Applied),
        Ok(None) => (None, Theorem2Status::NoQualifyingIndex),
        Err(CriterionError::Inapplicable(reason)) => (None, Theorem2Status::Inapplicable { reason }),
        Err(e) => return Err(e),
    };
    if let Some(r) = &theorem2 {
        if r.d1 as usize > r.j || r.d2.is_some_and(|d2| d2 as usize > r.n - r.j) {
            return Err(CriterionError::Internal(format!("d1/d2 exceed their edge lengths: {r:?}")));
        }
    }
    let degree = cv.degree();
    let verdict = Verdict::assemble(degree, theorem1.as_ref(), theorem2.as_ref());
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        polynomial,
        domain: None,
        valuation,
        stripped_z_power,
        degree,
        coefficient_values: cv.values.clone(),
        theorem1,
        theorem2,
        theorem2_status,
        rank1_gcd_form_checked: rank1,
        verdict,
        newton_polygon: newton_polygon_values(cv)?,
    })
}

pub fn analyze<C: Field, V: Valuation<C>>(f: &Poly<C>, v: &V, opts: AnalysisOptions) -> Result<AnalysisReport> {
    if f.is_zero() {
        return Err(CriterionError::ZeroPolynomial);
    }
    let (stripped, g) = if opts.strip_z0 { f.strip_low_zeros() } else { (0, f.clone()) };
    let cv = CoefficientValues::of(&g, v)?;
    analyze_values(&cv, f.render_in("z"), v.spec().to_string(), stripped)
}

/// [`analyze`] for a polynomial over any built-in domain.
pub fn analyze_any(f: &AnyPoly, spec: ValuationSpec, opts: AnalysisOptions) -> Result<AnalysisReport> {
    spec.check_domain(f.tag())?;
    let mut report = match (f, spec) {
        (AnyPoly::Q(f), ValuationSpec::PAdic(p)) => analyze(f, &PAdic::new(p)?, opts),
        (AnyPoly::Qx(f), ValuationSpec::QxRank2(p)) => analyze(f, &QxRank2::new(p)?, opts),
        (AnyPoly::BivariateQ(f), ValuationSpec::MonomialLex) => analyze(f, &MonomialLex, opts),
        (AnyPoly::BivariateFp(f), ValuationSpec::MonomialLex) => analyze(f, &MonomialLex, opts),
        _ => unreachable!("domain compatibility checked above"),
    }?;
    report.domain = Some(f.tag().to_string());
    Ok(report)
}

/// Coefficient values of `f` under `spec`.
pub fn valuate_any(f: &AnyPoly, spec: ValuationSpec) -> Result<CoefficientValues> {
    spec.check_domain(f.tag())?;
    match (f, spec) {
        (AnyPoly::Q(f), ValuationSpec::PAdic(p)) => CoefficientValues::of(f, &PAdic::new(p)?),
        (AnyPoly::Qx(f), ValuationSpec::QxRank2(p)) => CoefficientValues::of(f, &QxRank2::new(p)?),
        (AnyPoly::BivariateQ(f), ValuationSpec::MonomialLex) => CoefficientValues::of(f, &MonomialLex),
        (AnyPoly::BivariateFp(f), ValuationSpec::MonomialLex) => CoefficientValues::of(f, &MonomialLex),
        _ => unreachable!("domain compatibility checked above"),
    }
}

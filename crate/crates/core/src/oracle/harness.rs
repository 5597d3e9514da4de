//! Soundness harness: multiply random factors, analyze the product, and check
//! every certificate against the factor degrees known by construction.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::certify::{pattern_irreducible, Certification};
use super::sample::{sample_eisenstein, sample_factor};
use crate::criteria::{analyze_any, theorem1, AnalysisOptions, Verdict};
use crate::domains::{poly_mul, AnyPoly, DomainTag};
use crate::valuations::{PAdic, ValuationError, ValuationSpec};

/// Primes tried when certifying factors over `Q` by degree patterns.
pub const CERTIFICATION_PRIMES: [u64; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: invalid value for {key}: {message}")]
    InvalidValue { line: usize, key: String, message: String },
    #[error("missing required key {0:?}")]
    MissingKey(&'static str),
    #[error("at least one factor is required")]
    NoFactors,
    #[error("factors must be nonconstant")]
    ConstantFactor,
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error("factors live over different domains")]
    MixedDomains,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessConfig {
    pub trials: usize,
    /// Degree caps for the two factors.
    pub max_factor_degree: (usize, usize),
    pub coefficient_height: u64,
    pub valuation: ValuationSpec,
    pub domain: DomainTag,
    pub seed: u64,
}

impl HarnessConfig {
    /// Defaults: 1000 trials, degrees up to 4, height 50, seed 42, the
    /// valuation's natural domain.
    pub fn new(valuation: ValuationSpec) -> Self {
        HarnessConfig {
            trials: 1000,
            max_factor_degree: (4, 4),
            coefficient_height: 50,
            valuation,
            domain: valuation.default_domain(),
            seed: 42,
        }
    }

    fn check(&self) -> Result<(), HarnessError> {
        self.valuation.check_domain(self.domain)?;
        Ok(())
    }
}

fn parse_degrees(value: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    let parse = |s: &str| match s.parse::<usize>() {
        Ok(d) if d >= 1 => Ok(d),
        _ => Err(format!("{s:?} is not a positive degree")),
    };
    match parts.as_slice() {
        [d] => parse(d).map(|d| (d, d)),
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err("expected one or two comma-separated degrees".into()),
    }
}

impl FromStr for HarnessConfig {
    type Err = HarnessError;

    /// `key = value` lines; blank lines and `#` comments are ignored.
    fn from_str(text: &str) -> Result<Self, HarnessError> {
        let mut trials = None;
        let mut degrees = None;
        let mut height = None;
        let mut valuation = None;
        let mut domain = None;
        let mut seed = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| HarnessError::Syntax { line, message: format!("expected key = value, got {content:?}") })?;
            let (key, value) = (key.trim(), value.trim());
            let invalid = |message: String| HarnessError::InvalidValue { line, key: key.to_string(), message };
            match key {
                "trials" => trials = Some(value.parse::<usize>().map_err(|e| invalid(e.to_string()))?),
                "max_factor_degree" => degrees = Some(parse_degrees(value).map_err(invalid)?),
                "coefficient_height" => {
                    height = Some(value.parse::<u64>().ok().filter(|&h| h >= 1).ok_or_else(|| invalid("expected a positive integer".into()))?)
                }
                "valuation" => valuation = Some(value.parse::<ValuationSpec>().map_err(|e| invalid(e.to_string()))?),
                "domain" => domain = Some(value.parse::<DomainTag>().map_err(|e| invalid(e.to_string()))?),
                "seed" => seed = Some(value.parse::<u64>().map_err(|e| invalid(e.to_string()))?),
                _ => return Err(HarnessError::UnknownKey { line, key: key.to_string() }),
            }
        }
        let valuation = valuation.ok_or(HarnessError::MissingKey("valuation"))?;
        let mut config = HarnessConfig::new(valuation);
        config.trials = trials.unwrap_or(config.trials);
        config.max_factor_degree = degrees.unwrap_or(config.max_factor_degree);
        config.coefficient_height = height.unwrap_or(config.coefficient_height);
        config.domain = domain.unwrap_or(config.domain);
        config.seed = seed.unwrap_or(config.seed);
        config.check()?;
        Ok(config)
    }
}

/// Why a factor is known to be irreducible, if it is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorCertificate {
    Linear,
    /// Degree pattern modulo `prime` leaves no proper split.
    DegreePattern { prime: u64 },
    /// The pair `(n, 0)` qualifies under the harness valuation.
    Criterion,
    Unknown,
}

/// One constructed product and what the criteria said about it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoundnessTrial {
    /// Harness seed and trial index; absent for hand-built factor lists.
    pub seed: Option<u64>,
    pub index: Option<u64>,
    pub domain: String,
    pub valuation: String,
    pub factors: Vec<String>,
    pub factor_degrees: Vec<usize>,
    pub product: String,
    pub theorem1_bound: Option<usize>,
    pub theorem2_delta: Option<u64>,
    pub verdict: Option<Verdict>,
    pub certificates: Vec<FactorCertificate>,
    /// Empty when the trial passed.
    pub failures: Vec<String>,
}

impl SoundnessTrial {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn certify(f: &AnyPoly, spec: ValuationSpec) -> FactorCertificate {
    if f.degree() == Some(1) {
        return FactorCertificate::Linear;
    }
    let AnyPoly::Q(g) = f else { return FactorCertificate::Unknown };
    if let ValuationSpec::PAdic(p) = spec {
        let by_criterion = PAdic::new(p)
            .ok()
            .and_then(|v| theorem1(g, &v).ok().flatten())
            .is_some_and(|r| r.irreducible);
        if by_criterion {
            return FactorCertificate::Criterion;
        }
    }
    match pattern_irreducible(g, &CERTIFICATION_PRIMES) {
        Ok(Certification::Certified { pattern }) => FactorCertificate::DegreePattern { prime: pattern.prime },
        Ok(Certification::Linear) => FactorCertificate::Linear,
        _ => FactorCertificate::Unknown,
    }
}

/// Checks every certificate for the product of `factors` against their degrees.
///
/// A bound `B` from the two-factor criterion fails when every way of grouping
/// the factors into two nonconstant parts leaves both parts above `B`. A
/// minimum degree `δ` fails when any factor has degree below `δ`: each
/// nonconstant factor is a product of irreducibles of degree at least `δ`, so
/// this also covers the factors certified irreducible.
pub fn check_factors(factors: &[AnyPoly], spec: ValuationSpec) -> Result<SoundnessTrial, HarnessError> {
    let first = factors.first().ok_or(HarnessError::NoFactors)?;
    spec.check_domain(first.tag())?;
    let mut product = first.clone();
    for f in &factors[1..] {
        product = poly_mul(&product, f).map_err(|_| HarnessError::MixedDomains)?;
    }
    let degrees: Vec<usize> = factors.iter().map(|f| f.degree().unwrap_or(0)).collect();
    if degrees.contains(&0) {
        return Err(HarnessError::ConstantFactor);
    }
    let mut trial = SoundnessTrial {
        seed: None,
        index: None,
        domain: first.tag().to_string(),
        valuation: spec.to_string(),
        factors: factors.iter().map(AnyPoly::render).collect(),
        factor_degrees: degrees.clone(),
        product: product.render(),
        theorem1_bound: None,
        theorem2_delta: None,
        verdict: None,
        certificates: factors.iter().map(|f| certify(f, spec)).collect(),
        failures: Vec::new(),
    };
    let n: usize = degrees.iter().sum();
    if product.degree() != Some(n) {
        trial.failures.push(format!("product degree {:?} differs from {n}", product.degree()));
    }
    let report = match analyze_any(&product, spec, AnalysisOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            trial.failures.push(format!("analysis failed: {e}"));
            return Ok(trial);
        }
    };
    trial.verdict = Some(report.verdict);
    if !report.verdict_is_consistent() {
        trial.failures.push("verdict does not follow from the reports".into());
    }
    if degrees.len() >= 2 && report.verdict == Verdict::Irreducible {
        trial.failures.push("product of nonconstant factors reported irreducible".into());
    }
    if let Some(r) = &report.theorem1 {
        trial.theorem1_bound = Some(r.bound);
        if !r.verify().unwrap_or(false) {
            trial.failures.push("two-factor certificate does not replay".into());
        }
        if degrees.len() >= 2 && smallest_split(&degrees) > r.bound {
            trial.failures.push(format!("bound {} but factor degrees {degrees:?}", r.bound));
        }
    }
    if let Some(r) = &report.theorem2 {
        trial.theorem2_delta = Some(r.delta_f);
        if !r.verify().unwrap_or(false) {
            trial.failures.push("minimum-degree certificate does not replay".into());
        }
        if let Some(d) = degrees.iter().find(|&&d| (d as u64) < r.delta_f) {
            trial.failures.push(format!("minimum degree {} but a factor has degree {d}", r.delta_f));
        }
    }
    Ok(trial)
}

/// Smallest degree of a proper nonempty sub-product.
fn smallest_split(degrees: &[usize]) -> usize {
    let total: usize = degrees.iter().sum();
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    for &d in degrees {
        for s in (d..=total).rev() {
            if reachable[s - d] {
                reachable[s] = true;
            }
        }
    }
    (1..total)
        .filter(|&s| reachable[s])
        .map(|s| s.min(total - s))
        .min()
        .unwrap_or(total)
}

fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn sampling_prime(spec: ValuationSpec) -> u64 {
    match spec {
        ValuationSpec::PAdic(p) | ValuationSpec::QxRank2(p) => p,
        ValuationSpec::MonomialLex => 2,
    }
}

/// Runs trial `index` of `config`; reproducible from `(config.seed, index)` alone.
pub fn run_trial(config: &HarnessConfig, index: u64) -> Result<SoundnessTrial, HarnessError> {
    config.check()?;
    let mut rng = trial_rng(config.seed, index);
    let (cap_g, cap_h) = config.max_factor_degree;
    let prime = sampling_prime(config.valuation);
    let height = config.coefficient_height;
    let factors: Vec<AnyPoly> = if rng.gen_ratio(1, 8) {
        // Matched pair: equal degrees and a shared edge slope, the setting in
        // which the minimum-degree criterion gives more than 1.
        let degree = rng.gen_range(1..=cap_g.min(cap_h).max(1));
        (0..2)
            .map(|_| sample_eisenstein(&mut rng, config.domain, prime, degree, height))
            .collect()
    } else {
        [cap_g, cap_h]
            .into_iter()
            .map(|cap| {
                let degree = rng.gen_range(1..=cap.max(1));
                sample_factor(&mut rng, config.domain, prime, degree, height)
            })
            .collect()
    };
    let mut trial = check_factors(&factors, config.valuation)?;
    trial.seed = Some(config.seed);
    trial.index = Some(index);
    Ok(trial)
}

/// Runs every trial of `config` in parallel; results are in trial order.
pub fn soundness_harness(config: &HarnessConfig) -> Result<Vec<SoundnessTrial>, HarnessError> {
    config.check()?;
    (0..config.trials as u64)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect()
}

/// Aggregate counts over a harness run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessSummary {
    pub trials: usize,
    pub failures: usize,
    /// Trials where the two-factor criterion produced a bound.
    pub theorem1_applied: usize,
    /// Trials where the minimum-degree criterion produced `delta_f >= 2`.
    pub theorem2_nontrivial: usize,
}

impl HarnessSummary {
    pub fn of(trials: &[SoundnessTrial]) -> Self {
        HarnessSummary {
            trials: trials.len(),
            failures: trials.iter().filter(|t| !t.passed()).count(),
            theorem1_applied: trials.iter().filter(|t| t.theorem1_bound.is_some()).count(),
            theorem2_nontrivial: trials.iter().filter(|t| t.theorem2_delta.is_some_and(|d| d >= 2)).count(),
        }
    }
}

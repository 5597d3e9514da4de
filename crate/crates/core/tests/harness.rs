use std::time::Instant;

use krull_dumas::domains::DomainTag;
use krull_dumas::oracle::{soundness_harness, HarnessConfig, HarnessSummary};
use krull_dumas::valuations::ValuationSpec;

fn run(valuation: ValuationSpec, domain: DomainTag, trials: usize) -> HarnessSummary {
    let mut config = HarnessConfig::new(valuation);
    config.domain = domain;
    config.trials = trials;
    let start = Instant::now();
    let results = soundness_harness(&config).unwrap();
    let summary = HarnessSummary::of(&results);
    eprintln!("{valuation} over {domain}: {summary:?} in {:?}", start.elapsed());
    if let Some(bad) = results.iter().find(|t| !t.passed()) {
        panic!("soundness failure: {}", serde_json::to_string_pretty(bad).unwrap());
    }
    summary
}

#[test]
fn padic_products() {
    for p in [2, 3, 5] {
        let s = run(ValuationSpec::PAdic(p), DomainTag::Q, 300);
        assert!(s.theorem1_applied > 0 && s.theorem2_nontrivial > 0, "{s:?}");
    }
}

#[test]
fn rank_two_function_field_products() {
    let s = run(ValuationSpec::QxRank2(2), DomainTag::Qx, 200);
    assert!(s.theorem1_applied > 0, "{s:?}");
}

#[test]
fn monomial_products() {
    let s = run(ValuationSpec::MonomialLex, DomainTag::BivariateQ, 200);
    assert!(s.theorem1_applied > 0, "{s:?}");
    let s = run(ValuationSpec::MonomialLex, DomainTag::BivariateFp(5), 200);
    assert!(s.theorem1_applied > 0, "{s:?}");
}

//! Human-readable reports. Every number shown is the one in the JSON form.

use std::fmt::Write;

use krull_dumas::criteria::{AnalysisReport, NewtonPolygon, Theorem2Status, Verdict};
use krull_dumas::oracle::HarnessSummary;

pub fn verdict(v: &Verdict) -> String {
    match v {
        Verdict::Irreducible => "irreducible".into(),
        Verdict::TwoFactorBound { bound } => format!("two_factor_bound (bound {bound})"),
        Verdict::MinFactorDegree { degree } => format!("min_factor_degree (degree {degree})"),
        Verdict::Both { bound, min_degree } => format!("both (bound {bound}, min_degree {min_degree})"),
        Verdict::Inconclusive => "inconclusive".into(),
    }
}

pub fn polygon(p: &NewtonPolygon) -> String {
    let mut out = String::new();
    let vertices: Vec<String> = p.vertices.iter().map(|v| format!("({}, {})", v.index, v.value)).collect();
    writeln!(out, "newton polygon vertices: {}", vertices.join(" ")).unwrap();
    for s in &p.segments {
        writeln!(out, "  segment {} -> {}: slope {}, length {}", s.start, s.end, s.slope, s.length).unwrap();
    }
    out
}

pub fn report(r: &AnalysisReport, all_pairs: bool) -> String {
    let mut out = String::new();
    writeln!(out, "polynomial: {}", r.polynomial).unwrap();
    if let Some(d) = &r.domain {
        writeln!(out, "domain: {d}").unwrap();
    }
    writeln!(out, "valuation: {}", r.valuation).unwrap();
    if r.stripped_z_power > 0 {
        writeln!(out, "stripped: z^{}", r.stripped_z_power).unwrap();
    }
    writeln!(out, "degree: {}", r.degree).unwrap();
    for (i, v) in r.coefficient_values.iter().enumerate() {
        writeln!(out, "  v(a_{i}) = {v}").unwrap();
    }
    out.push_str(&polygon(&r.newton_polygon));
    match &r.theorem1 {
        None => writeln!(out, "two-factor criterion: no qualifying pair").unwrap(),
        Some(t) => {
            writeln!(out, "two-factor criterion: j = {}, k = {}, bound = {}", t.j, t.k, t.bound).unwrap();
            writeln!(out, "  v(a_j) = {}, v(a_k) = {}, v(a_k)/(j-k) = {}", t.v_aj, t.v_ak, t.reference).unwrap();
            for c in &t.divisor_checks {
                writeln!(out, "  d = {}: v(a_k) in dG = {}", c.d, c.in_dg).unwrap();
            }
            if all_pairs {
                let pairs: Vec<String> = t.all_valid_pairs.iter().map(|p| format!("({}, {})", p.j, p.k)).collect();
                writeln!(out, "  all pairs (j, k): {}", pairs.join(" ")).unwrap();
            }
        }
    }
    match (&r.theorem2, &r.theorem2_status) {
        (Some(t), _) => {
            let d2 = t.d2.map_or("-".to_string(), |d| d.to_string());
            writeln!(out, "minimum-degree criterion: j = {}, d1 = {}, d2 = {d2}, delta = {}", t.j, t.d1, t.delta_f).unwrap();
        }
        (None, Theorem2Status::Inapplicable { reason }) => {
            writeln!(out, "minimum-degree criterion: not applicable ({reason})").unwrap()
        }
        (None, _) => writeln!(out, "minimum-degree criterion: no qualifying index").unwrap(),
    }
    writeln!(out, "verdict: {}", verdict(&r.verdict)).unwrap();
    out
}

pub fn harness(s: &HarnessSummary, seed: u64) -> String {
    format!(
        "trials: {}\nseed: {seed}\nfailures: {}\ntwo-factor bound applied: {}\nminimum degree >= 2: {}\n",
        s.trials, s.failures, s.theorem1_applied, s.theorem2_nontrivial
    )
}

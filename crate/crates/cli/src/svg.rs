//! SVG 1.1 plot of a Newton polygon. The horizontal axis is the coefficient
//! index; the ordinate is the first value component, and each vertex carries
//! its full value as a label.

use std::fmt::Write;

use krull_dumas::criteria::NewtonPolygon;
use krull_dumas::values::Value;
use num_traits::ToPrimitive;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 56.0;

fn ordinate(v: &Value) -> f64 {
    v.components()
        .and_then(|c| c.first())
        .and_then(ToPrimitive::to_f64)
        .unwrap_or(0.0)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// `points` are all finite `(index, value)` pairs; the hull is drawn over them.
pub fn render(polygon: &NewtonPolygon, points: &[(usize, Value)], title: &str) -> String {
    let xs: Vec<f64> = points.iter().map(|(i, _)| *i as f64).collect();
    let ys: Vec<f64> = points.iter().map(|(_, v)| ordinate(v)).collect();
    let (x0, x1) = bounds(&xs);
    let (y0, y1) = bounds(&ys);
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(out, "  <title>{}</title>", escape(title)).unwrap();
    writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let (ax, ay) = (sx(x0), sy(y0));
    writeln!(
        out,
        r#"  <g stroke="black" stroke-width="1"><line x1="{ax:.1}" y1="{ay:.1}" x2="{:.1}" y2="{ay:.1}"/><line x1="{ax:.1}" y1="{ay:.1}" x2="{ax:.1}" y2="{:.1}"/></g>"#,
        sx(x1),
        sy(y1)
    )
    .unwrap();
    writeln!(out, r#"  <g font-family="sans-serif" font-size="11" text-anchor="middle">"#).unwrap();
    for i in (x0 as usize)..=(x1 as usize) {
        writeln!(out, r#"    <text x="{:.1}" y="{:.1}">{i}</text>"#, sx(i as f64), ay + 16.0).unwrap();
    }
    writeln!(out, r#"    <text x="{:.1}" y="{:.1}">i</text>"#, WIDTH / 2.0, HEIGHT - 8.0).unwrap();
    writeln!(
        out,
        r#"    <text x="14" y="{:.1}" transform="rotate(-90 14 {:.1})">v(a_i), first component</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    )
    .unwrap();
    writeln!(out, "  </g>").unwrap();

    let path: Vec<String> = polygon
        .vertices
        .iter()
        .map(|v| format!("{:.1},{:.1}", sx(v.index as f64), sy(ordinate(&v.value))))
        .collect();
    writeln!(out, r#"  <polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#, path.join(" ")).unwrap();
    for (i, v) in points {
        writeln!(out, r#"  <circle cx="{:.1}" cy="{:.1}" r="3" fill="gray"/>"#, sx(*i as f64), sy(ordinate(v))).unwrap();
    }
    writeln!(out, r#"  <g font-family="sans-serif" font-size="11" fill="steelblue">"#).unwrap();
    for v in &polygon.vertices {
        let (cx, cy) = (sx(v.index as f64), sy(ordinate(&v.value)));
        writeln!(out, r#"    <circle cx="{cx:.1}" cy="{cy:.1}" r="4"/>"#).unwrap();
        writeln!(out, r#"    <text x="{:.1}" y="{:.1}">{}</text>"#, cx + 6.0, cy - 6.0, escape(&v.value.to_string())).unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

/// Range padded so a single value still spans a visible interval.
fn bounds(values: &[f64]) -> (f64, f64) {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !lo.is_finite() || !hi.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo < 1.0 {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

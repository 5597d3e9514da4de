use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{CoefficientValues, CriterionError, Result};
use crate::domains::{Poly, Ring};
use crate::valuations::Valuation;
use crate::values::{lex_cmp, scale, scale_int, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub index: usize,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub slope: Value,
    pub length: usize,
}

/// Lower convex hull of the points `(i, v(a_i))` over nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    pub vertices: Vec<Vertex>,
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    /// The polygon's value at abscissa `i`, or `None` outside its span.
    pub fn value_at(&self, i: usize) -> Result<Option<Value>> {
        for (seg, start) in self.segments.iter().zip(&self.vertices) {
            if (seg.start..=seg.end).contains(&i) {
                let step = scale_int(&seg.slope, (i - seg.start) as i64)?;
                return Ok(Some(crate::values::value_add(&start.value, &step)?));
            }
        }
        Ok(self
            .vertices
            .iter()
            .find(|v| v.index == i)
            .map(|v| v.value.clone()))
    }
}

/// Sign of `slope(a, b) - slope(b, c)` without dividing: both sides are
/// multiplied by the positive index gaps.
fn turn(a: &Vertex, b: &Vertex, c: &Vertex) -> Result<Ordering> {
    let left = scale_int(&b.value.sub(&a.value)?, (c.index - b.index) as i64)?;
    let right = scale_int(&c.value.sub(&b.value)?, (b.index - a.index) as i64)?;
    Ok(lex_cmp(&left, &right)?)
}

/// Monotone-chain lower hull of points given in strictly increasing index order.
pub fn newton_polygon_points(points: &[(usize, Value)]) -> Result<NewtonPolygon> {
    if points.is_empty() {
        return Err(CriterionError::ZeroPolynomial);
    }
    if points.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(CriterionError::Internal("polygon points must have increasing indices".into()));
    }
    let mut hull: Vec<Vertex> = Vec::with_capacity(points.len());
    for (index, value) in points {
        if value.is_infinite() {
            return Err(CriterionError::Internal(format!("point {index} has infinite value")));
        }
        let next = Vertex { index: *index, value: value.clone() };
        while hull.len() >= 2 && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], &next)? != Ordering::Less {
            hull.pop();
        }
        hull.push(next);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let length = w[1].index - w[0].index;
            let inv = BigRational::new(BigInt::from(1), BigInt::from(length));
            Ok(Segment {
                start: w[0].index,
                end: w[1].index,
                slope: scale(&w[1].value.sub(&w[0].value)?, &inv)?,
                length,
            })
        })
        .collect::<Result<_>>()?;
    Ok(NewtonPolygon { vertices: hull, segments })
}

pub fn newton_polygon_values(cv: &CoefficientValues) -> Result<NewtonPolygon> {
    let points: Vec<(usize, Value)> = cv
        .values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_infinite())
        .map(|(i, v)| (i, v.clone()))
        .collect();
    newton_polygon_points(&points)
}

pub fn newton_polygon<C: Ring, V: Valuation<C>>(f: &Poly<C>, v: &V) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(CriterionError::ZeroPolynomial);
    }
    let points: Vec<(usize, Value)> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, v.value(c)))
        .collect();
    newton_polygon_points(&points)
}

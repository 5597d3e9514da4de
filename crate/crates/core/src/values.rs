//! Elements of lexicographically ordered rational vector spaces.
//!
//! A [`Value`] is either a finite vector in `Q^r` (the divisible hull of a
//! value group `Z^r`) or the distinguished element `Infinity`. Finite values
//! are ordered by the dictionary order; `Infinity` sits above all of them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("cannot scale infinity by a non-positive rational ({0})")]
    InfiniteScale(BigRational),
    #[error("subtraction of infinity is undefined")]
    InfiniteDifference,
    #[error("operation requires a finite value")]
    NotFinite,
    #[error("values must have rank at least 1")]
    ZeroRank,
}

pub type Result<T> = std::result::Result<T, ValueError>;

/// A finite rational vector or infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Finite(Vec<BigRational>),
    Infinity,
}

impl Value {
    pub fn finite(components: Vec<BigRational>) -> Result<Self> {
        if components.is_empty() {
            return Err(ValueError::ZeroRank);
        }
        Ok(Value::Finite(components))
    }

    /// Builds a finite value from integer components.
    pub fn from_ints(components: &[i64]) -> Self {
        assert!(!components.is_empty(), "values must have rank at least 1");
        Value::Finite(
            components
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Builds a finite value from `(numerator, denominator)` pairs.
    pub fn from_fracs(components: &[(i64, i64)]) -> Self {
        assert!(!components.is_empty(), "values must have rank at least 1");
        Value::Finite(
            components
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "values must have rank at least 1");
        Value::Finite(vec![BigRational::zero(); rank])
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Value::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Finite(c) => c.iter().all(Zero::is_zero),
            Value::Infinity => false,
        }
    }

    /// `None` for infinity.
    pub fn rank(&self) -> Option<usize> {
        match self {
            Value::Finite(c) => Some(c.len()),
            Value::Infinity => None,
        }
    }

    pub fn components(&self) -> Option<&[BigRational]> {
        match self {
            Value::Finite(c) => Some(c),
            Value::Infinity => None,
        }
    }

    pub fn neg(&self) -> Result<Value> {
        match self {
            Value::Finite(c) => Ok(Value::Finite(c.iter().map(|x| -x).collect())),
            Value::Infinity => Err(ValueError::InfiniteDifference),
        }
    }

    /// `self - other`. Subtracting infinity is an error; `∞ - finite = ∞`.
    pub fn sub(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (_, Value::Infinity) => Err(ValueError::InfiniteDifference),
            (Value::Infinity, Value::Finite(_)) => Ok(Value::Infinity),
            (Value::Finite(a), Value::Finite(b)) => {
                check_rank(a.len(), b.len())?;
                Ok(Value::Finite(a.iter().zip(b).map(|(x, y)| x - y).collect()))
            }
        }
    }

    pub fn min<'a>(&'a self, other: &'a Value) -> Result<&'a Value> {
        Ok(match lex_cmp(self, other)? {
            Ordering::Greater => other,
            _ => self,
        })
    }
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(ValueError::RankMismatch { left, right });
    }
    Ok(())
}

/// Dictionary-order comparison; infinity is the top element.
pub fn lex_cmp(a: &Value, b: &Value) -> Result<Ordering> {
    match (a, b) {
        (Value::Infinity, Value::Infinity) => Ok(Ordering::Equal),
        (Value::Infinity, Value::Finite(_)) => Ok(Ordering::Greater),
        (Value::Finite(_), Value::Infinity) => Ok(Ordering::Less),
        (Value::Finite(x), Value::Finite(y)) => {
            check_rank(x.len(), y.len())?;
            Ok(x.cmp(y))
        }
    }
}

/// Component-wise sum, with infinity absorbing.
pub fn value_add(a: &Value, b: &Value) -> Result<Value> {
    match (a, b) {
        (Value::Infinity, _) | (_, Value::Infinity) => Ok(Value::Infinity),
        (Value::Finite(x), Value::Finite(y)) => {
            check_rank(x.len(), y.len())?;
            Ok(Value::Finite(x.iter().zip(y).map(|(s, t)| s + t).collect()))
        }
    }
}

/// Multiplies every component by `q`. Reverses the order when `q < 0`.
pub fn scale(a: &Value, q: &BigRational) -> Result<Value> {
    match a {
        Value::Infinity if q.is_positive() => Ok(Value::Infinity),
        Value::Infinity => Err(ValueError::InfiniteScale(q.clone())),
        Value::Finite(c) => Ok(Value::Finite(c.iter().map(|x| x * q).collect())),
    }
}

/// Integer multiple `m·a`; convenience over [`scale`].
pub fn scale_int(a: &Value, m: i64) -> Result<Value> {
    scale(a, &BigRational::from_integer(BigInt::from(m)))
}

/// A lattice subgroup of `Q^r`. Only the full integer lattice `Z^r` is built in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ValueGroup {
    rank: usize,
}

impl ValueGroup {
    pub fn integer_lattice(rank: usize) -> Self {
        assert!(rank >= 1, "value groups must have rank at least 1");
        ValueGroup { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Membership in the group itself.
    pub fn contains(&self, a: &Value) -> Result<bool> {
        in_dg(a, 1, self)
    }
}

/// `a ∈ d·G`: every component is an integer divisible by `d`.
pub fn in_dg(a: &Value, d: u64, g: &ValueGroup) -> Result<bool> {
    let comps = a.components().ok_or(ValueError::NotFinite)?;
    check_rank(comps.len(), g.rank)?;
    let d = BigInt::from(d.max(1));
    Ok(comps
        .iter()
        .all(|c| c.is_integer() && c.numer().is_multiple_of(&d)))
}

/// Least `d >= 1` with `d·a ∈ G`: the lcm of the reduced denominators.
pub fn min_multiplier(a: &Value, g: &ValueGroup) -> Result<BigInt> {
    let comps = a.components().ok_or(ValueError::NotFinite)?;
    check_rank(comps.len(), g.rank)?;
    Ok(comps
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom())))
}

impl PartialOrd for Value {
    /// Partial only because ranks may differ; use [`lex_cmp`] to surface that as an error.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        lex_cmp(self, other).ok()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Infinity => write!(f, "inf"),
            Value::Finite(c) if c.len() == 1 => write!(f, "{}", c[0]),
            Value::Finite(c) => {
                write!(f, "(")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

// JSON form: `"inf"` or an array of rational strings such as `["0", "-1/5"]`.
impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Infinity => s.serialize_str("inf"),
            Value::Finite(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                parts.serialize(s)
            }
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Tag(String),
            Parts(Vec<String>),
        }
        match Repr::deserialize(d)? {
            Repr::Tag(t) if t == "inf" => Ok(Value::Infinity),
            Repr::Tag(t) => Err(serde::de::Error::custom(format!("unknown value tag {t:?}"))),
            Repr::Parts(parts) => {
                let comps = parts
                    .iter()
                    .map(|p| p.parse::<BigRational>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(serde::de::Error::custom)?;
                Value::finite(comps).map_err(serde::de::Error::custom)
            }
        }
    }
}

//! Exact rational scalars and vectors.
//!
//! Every root, coweight and Cartan element in this crate is a [`Vector`] of
//! reduced fractions. Equality and hashing are exact, which is what orbit
//! enumeration and root lookup rely on.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_integer::Roots;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{param_err, Result};

/// Exact rational scalar.
pub type Q = Rational64;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(numer, denom)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn sqrt_exact(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (*x.numer(), *x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (rn * rn == n && rd * rd == d).then(|| Q::new(rn, rd))
}

/// Parses `"3"`, `"-1/2"`. Decimal and exponent notation are rejected so that
/// inputs stay exact.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    if t.is_empty() {
        return Err(param_err!("empty rational literal"));
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(param_err!(
            "float literal {t:?} rejected; write rationals as p/q"
        ));
    }
    let parse_int = |p: &str| {
        p.trim()
            .parse::<i64>()
            .map_err(|_| param_err!("malformed rational literal {t:?}"))
    };
    match t.split_once('/') {
        None => Ok(Q::from_integer(parse_int(t)?)),
        Some((n, d)) => {
            let (n, d) = (parse_int(n)?, parse_int(d)?);
            if d == 0 {
                return Err(param_err!("zero denominator in {t:?}"));
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Exact rational vector in an ambient coordinate space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(Vec<Q>);

impl Vector {
    pub fn new(coords: Vec<Q>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Q::from_integer(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Q::zero(); dim])
    }

    /// The standard basis vector `e_{i+1}` (0-based `i`).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Q::from_integer(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Q> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Vector) -> Q {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm2(&self) -> Q {
        self.dot(self)
    }

    pub fn scale(&self, c: Q) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: Q, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }

    /// Parses either a comma-separated list (`1/2,1/2,-1`) or the JSON
    /// `[[num,den],...]` form produced by [`Serialize`].
    pub fn parse(s: &str) -> Result<Vector> {
        let t = s.trim();
        if t.starts_with('[') {
            return serde_json::from_str::<Vector>(t)
                .map_err(|e| param_err!("malformed rational vector {t:?}: {e}"));
        }
        t.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Vector)
    }
}

impl Index<usize> for Vector {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.0[i]
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &'a Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, rhs: &'a Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Vector> for Q {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

impl FromIterator<Q> for Vector {
    fn from_iter<I: IntoIterator<Item = Q>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Serializes a rational as `[num, den]`.
pub fn serialize_q<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    [*x.numer(), *x.denom()].serialize(s)
}

pub fn deserialize_q<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    let [n, den] = <[i64; 2]>::deserialize(d)?;
    if den == 0 {
        return Err(de::Error::custom("zero denominator"));
    }
    Ok(Q::new(n, den))
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&[*x.numer(), *x.denom()])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[i64; 2]>::deserialize(d)?;
        pairs
            .into_iter()
            .map(|[n, den]| {
                if den == 0 {
                    Err(de::Error::custom("zero denominator"))
                } else {
                    Ok(Q::new(n, den))
                }
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Vector)
    }
}

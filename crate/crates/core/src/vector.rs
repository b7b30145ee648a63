//! Label-indexed vectors over an exact scalar field.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::label::Label;

pub type Rational = BigRational;

/// Exact scalar usable as a vector entry.
///
/// `zero_like` exists because cyclotomic zeros carry their field.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Dense vector whose coordinates are named by vertex or hyperedge labels.
///
/// Coordinates follow the ambient hypergraph's canonical ordering.
#[derive(Clone, PartialEq)]
pub struct LabeledVector<S> {
    labels: Vec<Label>,
    values: Vec<S>,
}

/// Vector indexed by the vertices of a hypergraph.
pub type VertexVector<S> = LabeledVector<S>;
/// Vector indexed by the hyperedges of a hypergraph.
pub type EdgeVector<S> = LabeledVector<S>;

impl<S: Scalar> LabeledVector<S> {
    pub fn new(labels: Vec<Label>, values: Vec<S>) -> Result<Self> {
        if labels.len() != values.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} values",
                labels.len(),
                values.len()
            )));
        }
        Ok(LabeledVector { labels, values })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&S> {
        self.labels
            .iter()
            .position(|l| l.as_str() == label)
            .map(|i| &self.values[i])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// Labels of the non-zero coordinates.
    pub fn support(&self) -> Vec<&Label> {
        self.labels
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(l, _)| l)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &S)> {
        self.labels.iter().zip(&self.values)
    }

    pub fn into_parts(self) -> (Vec<Label>, Vec<S>) {
        (self.labels, self.values)
    }
}

impl LabeledVector<Rational> {
    pub fn zeros(labels: Vec<Label>) -> Self {
        let values = vec![Rational::zero(); labels.len()];
        LabeledVector { labels, values }
    }

    /// The characteristic vector of `members` scaled by `c`.
    pub fn indicator(labels: Vec<Label>, members: &[usize], c: &Rational) -> Self {
        let mut v = Self::zeros(labels);
        for &i in members {
            v.values[i] = c.clone();
        }
        v
    }

    /// `χ_u − χ_v` over the given coordinates.
    pub fn difference(labels: Vec<Label>, u: usize, v: usize) -> Self {
        let mut x = Self::zeros(labels);
        x.values[u] = Rational::one();
        x.values[v] = -Rational::one();
        x
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b * c;
        }
    }
}

impl<S: Scalar> fmt::Debug for LabeledVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.labels
                    .iter()
                    .map(|l| l.as_str())
                    .zip(self.values.iter().map(|v| v.to_string())),
            )
            .finish()
    }
}

impl<S: Scalar> fmt::Display for LabeledVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Written as a map from label to exact fraction string.
impl<S: Scalar> serde::Serialize for LabeledVector<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.labels.len()))?;
        for (label, value) in self.iter() {
            map.serialize_entry(label.as_str(), &value.to_string())?;
        }
        map.end()
    }
}

/// Parses `"a/b"`, `"a"` or a finite decimal such as `"-1.25"` exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Ok(q) = s.parse::<Rational>() {
        return Some(q);
    }
    let (int, frac) = s.split_once('.')?;
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let negative = int.starts_with('-');
    let int = int.trim_start_matches(['-', '+']);
    if !int.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: num_bigint::BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = num_traits::pow(num_bigint::BigInt::from(10), frac.len());
    let q = Rational::new(digits, scale);
    Some(if negative { -q } else { q })
}

/// Serde adapter writing rationals as exact fraction strings.
pub mod fraction {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => parse_rational(&s).ok_or_else(|| de::Error::custom(format!("`{s}` is not a rational"))),
            Raw::Int(n) => Ok(Rational::from_integer(n.into())),
        }
    }
}

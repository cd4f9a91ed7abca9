//! Coordinate vectors and labeled point configurations.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// A point (or direction) in `Q^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RatVector(Vec<Rat>);

impl RatVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(alloc::vec![Rat::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVector(coords.iter().map(|&c| Rat::from_integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn last(&self) -> &Rat {
        self.0.last().expect("empty vector has no last coordinate")
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: &Rat) -> RatVector {
        RatVector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn dot(&self, other: &RatVector) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    /// Maximum absolute coordinate.
    pub fn linf_norm(&self) -> Rat {
        self.0
            .iter()
            .map(Rat::abs)
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// Appends a coordinate, producing a vector one dimension higher.
    pub fn extended(&self, last: Rat) -> RatVector {
        let mut c = self.0.clone();
        c.push(last);
        RatVector(c)
    }

    /// Drops the last coordinate.
    pub fn truncated(&self) -> RatVector {
        RatVector(self.0[..self.0.len() - 1].to_vec())
    }
}

impl Deref for RatVector {
    type Target = [Rat];
    fn deref(&self) -> &[Rat] {
        &self.0
    }
}

impl From<Vec<Rat>> for RatVector {
    fn from(v: Vec<Rat>) -> Self {
        RatVector(v)
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Affine combination `sum w_i p_i` over `(index, weight)` pairs.
pub fn combine(config: &PointConfig, weights: &[(usize, Rat)]) -> RatVector {
    let mut acc = RatVector::zeros(config.dim());
    for (i, w) in weights {
        if w.is_zero() {
            continue;
        }
        for (a, c) in acc.0.iter_mut().zip(config.point(*i).iter()) {
            *a += w * c;
        }
    }
    acc
}

/// A labeled finite point set in `Q^n`. Indices are 0-based and stable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfig {
    dim: usize,
    points: Vec<RatVector>,
    labels: Vec<String>,
}

impl PointConfig {
    /// Builds a configuration with default labels `P0, P1, ...`.
    pub fn new(dim: usize, points: Vec<RatVector>) -> Result<Self> {
        let labels = (0..points.len()).map(|i| format!("P{i}")).collect();
        Self::with_labels(dim, points, labels)
    }

    pub fn with_labels(dim: usize, points: Vec<RatVector>, labels: Vec<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("dimension must be positive"));
        }
        if labels.len() != points.len() {
            return Err(Error::input(format!(
                "{} labels for {} points",
                labels.len(),
                points.len()
            )));
        }
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::input(format!(
                    "point {i} has dimension {}, expected {dim}",
                    p.dim()
                )));
            }
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::input(format!("duplicate label {l:?}")));
            }
        }
        Ok(PointConfig { dim, points, labels })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| RatVector::from_ints(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &RatVector {
        &self.points[i]
    }

    pub fn points(&self) -> &[RatVector] {
        &self.points
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Points at the given indices, in order.
    pub fn select(&self, indices: &[usize]) -> Vec<&RatVector> {
        indices.iter().map(|&i| &self.points[i]).collect()
    }

    /// Same labels and points, reordered so that new index `j` holds old
    /// index `order[j]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let points = order.iter().map(|&i| self.points[i].clone()).collect();
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        Self::with_labels(self.dim, points, labels)
    }

    pub(crate) fn check_indices(&self, indices: &[usize]) -> Result<()> {
        for &i in indices {
            if i >= self.len() {
                return Err(Error::input(format!(
                    "index {i} out of range for {} points",
                    self.len()
                )));
            }
        }
        Ok(())
    }
}

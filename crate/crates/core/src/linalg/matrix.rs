use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::label::Label;
use crate::vector::{LabeledVector, Rational, Scalar};

/// Dense row-major matrix over `Q` with labelled rows and columns.
#[derive(Clone, PartialEq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
}

impl RationalMatrix {
    pub fn new(row_labels: Vec<Label>, col_labels: Vec<Label>, entries: Vec<Rational>) -> Result<Self> {
        let (rows, cols) = (row_labels.len(), col_labels.len());
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
            row_labels,
            col_labels,
        })
    }

    pub fn zeros(row_labels: Vec<Label>, col_labels: Vec<Label>) -> Self {
        let entries = vec![Rational::zero(); row_labels.len() * col_labels.len()];
        RationalMatrix {
            rows: row_labels.len(),
            cols: col_labels.len(),
            entries,
            row_labels,
            col_labels,
        }
    }

    /// Unlabelled matrix from integer rows; labels are `r0.., c0..`.
    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let row_labels = (0..rows.len()).map(|i| Label::new(format!("r{i}"))).collect();
        let col_labels = (0..cols).map(|j| Label::new(format!("c{j}"))).collect();
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| Rational::from_integer(x.into()))
            .collect();
        Self::new(row_labels, col_labels, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    /// Matrix-vector product in the scalar field of `x`.
    ///
    /// Coordinates of `x` are matched to columns by label; columns missing
    /// from `x` count as zero.
    pub fn matvec<S: Scalar>(&self, x: &LabeledVector<S>) -> Result<LabeledVector<S>> {
        let zero = x
            .values()
            .first()
            .map(Scalar::zero_like)
            .ok_or_else(|| Error::DimensionMismatch("empty vector".into()))?;
        let aligned = self.align(x, &zero)?;
        let values = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(&aligned)
                    .filter(|(m, _)| !Zero::is_zero(*m))
                    .fold(
                        zero.clone(),
                        |acc, (m, v)| {
                            if m.is_one() {
                                acc.add(v)
                            } else {
                                acc.add(&v.scale(m))
                            }
                        },
                    )
            })
            .collect();
        LabeledVector::new(self.row_labels.clone(), values)
    }

    fn align<S: Scalar>(&self, x: &LabeledVector<S>, zero: &S) -> Result<Vec<S>> {
        if x.labels() == self.col_labels.as_slice() {
            return Ok(x.values().to_vec());
        }
        let mut out = vec![zero.clone(); self.cols];
        for (label, value) in x.iter() {
            match self.col_labels.iter().position(|c| c == label) {
                Some(c) => out[c] = value.clone(),
                None if value.is_zero() => {}
                None => {
                    return Err(Error::DimensionMismatch(format!(
                        "vector coordinate `{label}` is not a column"
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}: [{}]", self.row_labels[r], row.join(" "))?;
        }
        Ok(())
    }
}

/// `B_H`: rows are hyperedges, columns are vertices, entry 1 on incidence.
pub fn edge_vertex_incidence(h: &Hypergraph) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(h.edge_labels().to_vec(), h.vertices().to_vec());
    for (i, e) in h.edges().enumerate() {
        for &v in e {
            m.set(i, v, Rational::one());
        }
    }
    m
}

/// `I_H = B_H^T`.
pub fn vertex_edge_incidence(h: &Hypergraph) -> RationalMatrix {
    edge_vertex_incidence(h).transpose()
}

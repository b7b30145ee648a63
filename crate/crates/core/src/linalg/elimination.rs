//! Exact rank and null space over `Q`.
//!
//! Rank uses fraction-free (Bareiss) elimination on an integer copy of the
//! matrix; the null-space basis is read off the reduced row-echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use crate::vector::{LabeledVector, Rational};

/// Kernel basis of a matrix, with the rank that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct NullspaceBasis {
    pub vectors: Vec<LabeledVector<Rational>>,
    pub rank: usize,
    pub cols: usize,
}

impl NullspaceBasis {
    pub fn nullity(&self) -> usize {
        self.vectors.len()
    }

    /// `rank + nullity == cols`.
    pub fn dimension_check(&self) -> bool {
        self.rank + self.vectors.len() == self.cols
    }
}

/// Each row scaled by the lcm of its denominators, so it becomes integral
/// without changing the row space.
fn integer_rows(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Rank of an integer matrix by Bareiss elimination. Every intermediate
/// entry is a minor of the input, so the divisions are exact.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Exact rank over `Q`.
pub fn rank(m: &RationalMatrix) -> usize {
    bareiss_rank(integer_rows(m))
}

/// Reduced row-echelon form over `Q`, pivoting on the first non-zero entry
/// of each column. Returns the reduced rows and the pivot columns.
pub fn rref(m: &RationalMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let rows = a.len();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r][c..].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r][c..].to_vec();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Rank (by Bareiss) and a kernel basis (from the RREF). One basis vector per
/// free column `f`: `1` at `f`, `-rref[i][f]` at the pivot of row `i`.
pub fn rank_and_nullspace(m: &RationalMatrix) -> NullspaceBasis {
    let rank = rank(m);
    let (reduced, pivots) = rref(m);
    debug_assert_eq!(rank, pivots.len());
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut values = vec![Rational::zero(); m.cols()];
            values[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                values[p] = -reduced[i][f].clone();
            }
            LabeledVector::new(m.col_labels().to_vec(), values).expect("one value per column")
        })
        .collect();
    NullspaceBasis {
        vectors,
        rank,
        cols: m.cols(),
    }
}

/// Rank of the span of `vectors` (all over the same coordinates).
pub fn span_rank(vectors: &[LabeledVector<Rational>]) -> usize {
    let rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            let lcm = v.values().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            v.values().iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    bareiss_rank(rows)
}

/// True when `vectors` are linearly independent.
pub fn are_independent(vectors: &[LabeledVector<Rational>]) -> bool {
    span_rank(vectors) == vectors.len()
}

/// True when `x` lies in the span of `basis`.
pub fn in_span(basis: &[LabeledVector<Rational>], x: &LabeledVector<Rational>) -> bool {
    let mut extended = basis.to_vec();
    extended.push(x.clone());
    span_rank(&extended) == span_rank(basis)
}

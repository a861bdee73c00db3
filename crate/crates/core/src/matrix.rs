//! Dense matrices over a [`Scalar`] with exact rank by fraction-free
//! (Bareiss) elimination.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

/// Exact rank together with the row and column indices of the pivots
/// chosen by elimination. The pivot rows are linearly independent and
/// span the row space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
            row_labels: (0..rows).map(|i| i.to_string()).collect(),
            col_labels: (0..cols).map(|j| j.to_string()).collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Matrix::zeros(r, c);
        m.data = rows.into_iter().flatten().collect();
        m
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Fraction-free elimination: every update is
    /// `a_ij ← (p·a_ij − a_ic·a_rj) / p_prev`, exact in any integral domain.
    pub fn rank_certificate(&self) -> RankCertificate {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut perm: Vec<usize> = (0..rows).collect();
        let mut prev = T::one();
        let mut r = 0;
        let mut pivot_rows = Vec::new();
        let mut pivot_cols = Vec::new();
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
                perm.swap(p, r);
            }
            let pivot = a[r * cols + c].clone();
            for i in r + 1..rows {
                let factor = a[i * cols + c].clone();
                for j in c + 1..cols {
                    let v = (pivot.clone() * a[i * cols + j].clone()
                        - factor.clone() * a[r * cols + j].clone())
                        / prev.clone();
                    a[i * cols + j] = v;
                }
                a[i * cols + c] = T::zero();
            }
            prev = pivot;
            pivot_rows.push(perm[r]);
            pivot_cols.push(c);
            r += 1;
        }
        RankCertificate {
            rows,
            cols,
            rank: r,
            pivot_rows,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_certificate().rank
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn small_ranks() {
        assert_eq!(qm(&[&[4, -2, -2], &[-2, 4, -2], &[-2, -2, 4]]).rank(), 2);
        assert_eq!(qm(&[&[4, 2, 2], &[2, 4, 2], &[2, 2, 4]]).rank(), 3);
        assert_eq!(qm(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(qm(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]).rank(), 2);
        assert_eq!(Matrix::<Rational>::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn certificate_rows_are_independent_and_spanning() {
        let m = qm(&[&[0, 0, 0], &[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let cert = m.rank_certificate();
        assert_eq!(cert.rank, 2);
        assert_eq!(cert.pivot_rows, vec![1, 3]);
        assert_eq!(cert.pivot_cols, vec![0, 1]);
        let sub = m.select(&cert.pivot_rows, &cert.pivot_cols);
        assert_eq!(sub.rank(), 2);
    }

    #[test]
    fn integer_domain_elimination_is_exact() {
        let m = Matrix::from_rows(vec![
            vec![BigInt::from(2), BigInt::from(3), BigInt::from(5)],
            vec![BigInt::from(4), BigInt::from(6), BigInt::from(10)],
            vec![BigInt::from(1), BigInt::from(7), BigInt::from(11)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn symmetry() {
        assert!(qm(&[&[1, 2], &[2, 1]]).is_symmetric());
        assert!(!qm(&[&[1, 2], &[3, 1]]).is_symmetric());
    }
}

//! Minimal dense matrix support for the shipped objectives: products,
//! an operator-norm estimate, rank, and a small linear solve. Row-major,
//! desk scale only.

use crate::error::VectorError;
use crate::vector::Vector;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, VectorError> {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols >= 1, "matrix needs at least one column");
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(VectorError::DimensionMismatch {
                    left: cols,
                    right: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        for (index, v) in data.iter().enumerate() {
            if !v.is_finite() {
                return Err(VectorError::NonFiniteEntry { index });
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::identity(n);
        for i in 0..n {
            m.data[i * n + i] = diag[i];
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `A x`.
    pub fn matvec(&self, x: &Vector) -> Result<Vector, VectorError> {
        if x.dim() != self.cols {
            return Err(VectorError::DimensionMismatch {
                left: self.cols,
                right: x.dim(),
            });
        }
        let out: Vec<f64> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x.iter())
                    .map(|(a, v)| a * v)
                    .sum()
            })
            .collect();
        Ok(Vector::new(out).expect("matrix entries and inputs are finite"))
    }

    /// `A^T y`.
    pub fn transpose_matvec(&self, y: &Vector) -> Result<Vector, VectorError> {
        if y.dim() != self.rows {
            return Err(VectorError::DimensionMismatch {
                left: self.rows,
                right: y.dim(),
            });
        }
        let mut out = vec![0.0; self.cols];
        for r in 0..self.rows {
            let yr = y.get(r);
            for (c, a) in self.row(r).iter().enumerate() {
                out[c] += a * yr;
            }
        }
        Ok(Vector::new(out).expect("matrix entries and inputs are finite"))
    }

    /// Largest singular value, estimated by power iteration on `A^T A`.
    ///
    /// Deterministic: starts from a fixed slightly-perturbed ones vector and
    /// iterates until the Rayleigh quotient stabilizes to relative 1e-14 or
    /// the iteration cap is hit. The estimate converges from below.
    pub fn operator_norm(&self) -> f64 {
        let n = self.cols;
        let start: Vec<f64> = (0..n).map(|i| 1.0 + 1e-3 * (i as f64 + 1.0)).collect();
        let mut v = Vector::new(start).expect("finite start vector");
        let s = v.norm();
        v = v.scale(1.0 / s);
        let mut sigma = 0.0;
        for _ in 0..20_000 {
            let av = self.matvec(&v).expect("dimension fixed");
            let w = self.transpose_matvec(&av).expect("dimension fixed");
            let wn = w.norm();
            if wn == 0.0 {
                return 0.0;
            }
            let new_sigma = av.norm();
            v = w.scale(1.0 / wn);
            if (new_sigma - sigma).abs() <= 1e-14 * new_sigma.max(1e-300) {
                return new_sigma;
            }
            sigma = new_sigma;
        }
        sigma
    }

    /// Frobenius norm; an exact-arithmetic upper bound on the operator norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Rank by Gaussian elimination with partial pivoting.
    ///
    /// Pivots smaller than `1e-10 * max_abs_entry` are treated as zero.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<f64>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let scale = self
            .data
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
            .max(1e-300);
        let tol = 1e-10 * scale;
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let (best, best_val) = (pivot_row..self.rows)
                .map(|r| (r, a[r][col].abs()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if best_val <= tol {
                continue;
            }
            a.swap(pivot_row, best);
            for r in pivot_row + 1..self.rows {
                let f = a[r][col] / a[pivot_row][col];
                for c in col..self.cols {
                    a[r][c] -= f * a[pivot_row][c];
                }
            }
            rank += 1;
            pivot_row += 1;
        }
        rank
    }

    /// Solves the square system `A x = b` by LU with partial pivoting.
    /// Returns `None` when the matrix is numerically singular.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, self.cols, "solve expects a square matrix");
        assert_eq!(b.dim(), self.rows, "right-hand side dimension mismatch");
        let n = self.rows;
        let mut a: Vec<Vec<f64>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut rhs: Vec<f64> = b.as_slice().to_vec();
        for col in 0..n {
            let (best, best_val) = (col..n)
                .map(|r| (r, a[r][col].abs()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if best_val == 0.0 || !best_val.is_finite() {
                return None;
            }
            a.swap(col, best);
            rhs.swap(col, best);
            for r in col + 1..n {
                let f = a[r][col] / a[col][col];
                a[r][col] = 0.0;
                for c in col + 1..n {
                    a[r][c] -= f * a[col][c];
                }
                rhs[r] -= f * rhs[col];
            }
        }
        let mut x = vec![0.0; n];
        for row in (0..n).rev() {
            let mut acc = rhs[row];
            for c in row + 1..n {
                acc -= a[row][c] * x[c];
            }
            x[row] = acc / a[row][row];
            if !x[row].is_finite() {
                return None;
            }
        }
        Vector::new(x).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_and_transpose() {
        let a = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]]).unwrap();
        let x = Vector::from_slice(&[1.0, -1.0]).unwrap();
        assert_eq!(a.matvec(&x).unwrap().as_slice(), &[-1.0, -1.0, -1.0]);
        let y = Vector::from_slice(&[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(a.transpose_matvec(&y).unwrap().as_slice(), &[9.0, 12.0]);
    }

    #[test]
    fn operator_norm_identity_and_diagonal() {
        assert!((Matrix::identity(4).operator_norm() - 1.0).abs() < 1e-12);
        let d = Matrix::diagonal(&[0.5, -3.0, 2.0]);
        assert!((d.operator_norm() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn operator_norm_2x2_closed_form() {
        // Singular values of [[2, 0], [0, 1]] rotated by 45 degrees stay {2, 1}.
        let c = std::f64::consts::FRAC_1_SQRT_2;
        let rot = Matrix::from_rows(vec![vec![2.0 * c, -2.0 * c], vec![c, c]]).unwrap();
        assert!((rot.operator_norm() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn rank_detects_deficiency() {
        let full = Matrix::from_rows(vec![vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(full.rank(), 2);
        let deficient =
            Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0], vec![-1.0, -2.0]]).unwrap();
        assert_eq!(deficient.rank(), 1);
    }

    #[test]
    fn solve_recovers_known_solution() {
        let a = Matrix::from_rows(vec![vec![3.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let x_true = Vector::from_slice(&[0.25, -1.5]).unwrap();
        let b = a.matvec(&x_true).unwrap();
        let x = a.solve(&b).unwrap();
        for i in 0..2 {
            assert!((x[i] - x_true[i]).abs() < 1e-12);
        }
        let singular = Matrix::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(singular
            .solve(&Vector::from_slice(&[1.0, 0.0]).unwrap())
            .is_none());
    }
}

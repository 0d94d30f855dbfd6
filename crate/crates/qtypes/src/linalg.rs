//! Exact dense linear algebra over Q(i): rank, inverse, determinant, and
//! basis completion. Sizes here are tiny (n <= ~6), so plain Gauss-Jordan
//! with exact arithmetic is the right tool.

use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<GaussianRational> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        acc = &acc + &(self.get(i, j) * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &(a * other.get(k, j)) + out.get(i, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row-echelon rank via exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            let inv = m.get(rank, col).inverse().unwrap();
            for j in col..m.cols {
                let v = m.get(rank, j) * &inv;
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                if r != rank && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &(&factor * m.get(rank, j));
                        m.set(r, j, v);
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    pub fn determinant(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = GaussianRational::one();
        for col in 0..m.cols {
            let pivot = (col..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return GaussianRational::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let piv = m.get(col, col).clone();
            det = &det * &piv;
            let inv = piv.inverse().unwrap();
            for r in (col + 1)..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = &(m.get(r, col).clone()) * &inv;
                for j in col..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Exact inverse via Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero())?;
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let pinv = m.get(col, col).inverse().unwrap();
            for j in 0..n {
                let v = m.get(col, j) * &pinv;
                m.set(col, j, v);
                let v = inv.get(col, j) * &pinv;
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r != col && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..n {
                        let v = m.get(r, j) - &(&factor * m.get(col, j));
                        m.set(r, j, v);
                        let v = inv.get(r, j) - &(&factor * inv.get(col, j));
                        inv.set(r, j, v);
                    }
                }
            }
        }
        Some(inv)
    }

    /// Completes the full-rank row block `bottom` (k x n) to an invertible
    /// n x n matrix whose *last* k rows are `bottom`, by greedily prepending
    /// standard unit rows. Deterministic: unit vectors are tried in index
    /// order. `None` if `bottom` is rank-deficient.
    pub fn complete_rows_to_basis(bottom: &Matrix) -> Option<Matrix> {
        let k = bottom.nrows();
        let n = bottom.ncols();
        if bottom.rank() != k {
            return None;
        }
        let mut chosen: Vec<usize> = Vec::new();
        for i in 0..n {
            if chosen.len() == n - k {
                break;
            }
            let mut rows: Vec<Vec<GaussianRational>> = chosen
                .iter()
                .chain(std::iter::once(&i))
                .map(|&idx| {
                    let mut row = vec![GaussianRational::zero(); n];
                    row[idx] = GaussianRational::one();
                    row
                })
                .collect();
            for r in 0..k {
                rows.push(bottom.row(r));
            }
            if Matrix::from_rows(rows).rank() == chosen.len() + 1 + k {
                chosen.push(i);
            }
        }
        debug_assert_eq!(chosen.len(), n - k);
        let mut rows: Vec<Vec<GaussianRational>> = chosen
            .iter()
            .map(|&idx| {
                let mut row = vec![GaussianRational::zero(); n];
                row[idx] = GaussianRational::one();
                row
            })
            .collect();
        for r in 0..k {
            rows.push(bottom.row(r));
        }
        Some(Matrix::from_rows(rows))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_det() {
        let m = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert!(m.determinant().is_zero());
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.determinant(), GaussianRational::from_int(-2));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = int_matrix(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 3]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(3));
        assert!(int_matrix(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn basis_completion_puts_block_last() {
        let w = int_matrix(&[&[1, 1, 1]]);
        let m = Matrix::complete_rows_to_basis(&w).unwrap();
        assert_eq!(m.nrows(), 3);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.row(2), w.row(0));
        // leading rows are unit vectors
        assert_eq!(m.get(0, 0), &GaussianRational::one());
        assert_eq!(m.get(1, 1), &GaussianRational::one());
    }
}

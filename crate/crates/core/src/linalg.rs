//! Small dense matrices and the three numeric kernels the rating engines
//! need: Cholesky and LU solves, and a cyclic Jacobi eigensolver for
//! symmetric matrices. League systems are tiny (n = number of teams), so
//! everything is plain O(n^3) with nothing fancier than partial pivoting.

use crate::{Error, Result};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = Matrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] += v;
    }

    /// A^T A.
    pub fn gram(&self) -> Matrix {
        self.weighted_gram_opt(None)
    }

    /// A^T diag(w) A. `w` has one entry per row.
    pub fn weighted_gram(&self, w: &[f64]) -> Matrix {
        assert_eq!(w.len(), self.rows);
        self.weighted_gram_opt(Some(w))
    }

    fn weighted_gram_opt(&self, w: Option<&[f64]>) -> Matrix {
        let n = self.cols;
        let mut g = Matrix::zeros(n, n);
        for k in 0..self.rows {
            let wk = w.map_or(1.0, |w| w[k]);
            let row = &self.data[k * n..(k + 1) * n];
            for i in 0..n {
                if row[i] == 0.0 {
                    continue;
                }
                let f = wk * row[i];
                for j in 0..n {
                    if row[j] != 0.0 {
                        g.add_at(i, j, f * row[j]);
                    }
                }
            }
        }
        g
    }

    /// A^T diag(w) y, with unit weights when `w` is `None`.
    pub fn transpose_weighted_vec(&self, w: Option<&[f64]>, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.rows);
        let mut out = vec![0.0; self.cols];
        for k in 0..self.rows {
            let wk = w.map_or(1.0, |w| w[k]);
            for j in 0..self.cols {
                out[j] += wk * self.at(k, j) * y[k];
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0.0;
            for j in 0..self.cols {
                acc += self.at(i, j) * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if (self.at(i, j) - self.at(j, i)).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Solves `a x = b` for square `a`: Cholesky when the matrix is symmetric,
/// LU with partial pivoting otherwise (Cholesky additionally requires
/// positive definiteness and falls back to LU when a pivot is not positive).
pub fn solve(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    assert_eq!(a.rows(), a.cols());
    assert_eq!(b.len(), a.rows());
    if a.is_symmetric(1e-12) {
        if let Ok(x) = cholesky_solve(a, b) {
            return Ok(x);
        }
    }
    lu_solve(a, b)
}

/// Cholesky solve for symmetric positive definite `a`.
pub fn cholesky_solve(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.rows();
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a.at(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(Error::SingularSystem);
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    // forward then back substitution
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * n + k] * y[k];
        }
        y[i] = s / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in (i + 1)..n {
            s -= l[k * n + i] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    Ok(x)
}

/// LU solve with partial pivoting for general square `a`.
pub fn lu_solve(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.rows();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let scale = lu.data.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_val = lu.at(col, col).abs();
        for r in (col + 1)..n {
            let v = lu.at(r, col).abs();
            if v > pivot_val {
                pivot_val = v;
                pivot_row = r;
            }
        }
        if pivot_val < 1e-12 * scale {
            return Err(Error::SingularSystem);
        }
        if pivot_row != col {
            for j in 0..n {
                let t = lu.at(col, j);
                lu.set(col, j, lu.at(pivot_row, j));
                lu.set(pivot_row, j, t);
            }
            perm.swap(col, pivot_row);
        }
        let p = lu.at(col, col);
        for r in (col + 1)..n {
            let f = lu.at(r, col) / p;
            lu.set(r, col, f);
            for j in (col + 1)..n {
                let v = lu.at(r, j) - f * lu.at(col, j);
                lu.set(r, j, v);
            }
        }
    }
    // Pb, then forward/back substitution through L and U.
    let mut x: Vec<f64> = perm.iter().map(|&i| b[i]).collect();
    for i in 1..n {
        let mut s = x[i];
        for k in 0..i {
            s -= lu.at(i, k) * x[k];
        }
        x[i] = s;
    }
    for i in (0..n).rev() {
        let mut s = x[i];
        for k in (i + 1)..n {
            s -= lu.at(i, k) * x[k];
        }
        x[i] = s / lu.at(i, i);
    }
    Ok(x)
}

/// Eigenvalues of a symmetric matrix, ascending. Cyclic Jacobi; sweeps run
/// until the off-diagonal Frobenius norm drops below 1e-12 (relative to the
/// matrix norm for badly scaled inputs).
pub fn symmetric_eigenvalues(a: &Matrix) -> Result<Vec<f64>> {
    assert!(a.is_symmetric(1e-9), "jacobi needs a symmetric matrix");
    let n = a.rows();
    if n == 0 {
        return Ok(vec![]);
    }
    let mut m = a.clone();
    let tol = 1e-12 * m.frobenius_norm().max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += m.at(i, j) * m.at(i, j);
                }
            }
        }
        if off.sqrt() < tol {
            let mut eig: Vec<f64> = (0..n).map(|i| m.at(i, i)).collect();
            eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(eig);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.at(p, q);
                if apq.abs() <= tol / (n as f64) {
                    continue;
                }
                let app = m.at(p, p);
                let aqq = m.at(q, q);
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m.at(k, p);
                    let akq = m.at(k, q);
                    m.set(k, p, c * akp - s * akq);
                    m.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = m.at(p, k);
                    let aqk = m.at(q, k);
                    m.set(p, k, c * apk - s * aqk);
                    m.set(q, k, s * apk + c * aqk);
                }
            }
        }
    }
    Err(Error::SingularSystem)
}

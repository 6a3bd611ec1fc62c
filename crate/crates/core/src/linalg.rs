//! Dense real/complex matrices and a cyclic Jacobi symmetric eigensolver.
//!
//! Everything here is deliberately small and deterministic: the decomposition
//! code upstream needs bitwise-reproducible results across runs and thread
//! counts, so no randomized or threaded kernels are used.

use num_complex::Complex64;

use crate::error::{invalid_input, Result};

/// Dense real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn eye(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must equal rows*cols");
        Self { rows, cols, data }
    }

    /// Build from a row iterator of slices; all rows must share one length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        assert!(!rows.is_empty(), "at least one row required");
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self { rows: rows.len(), cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(orow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// Leading `k` columns as a new matrix.
    pub fn leading_cols(&self, k: usize) -> Mat {
        assert!(k <= self.cols, "leading_cols: k exceeds column count");
        let mut out = Mat::zeros(self.rows, k);
        for r in 0..self.rows {
            out.data[r * k..(r + 1) * k].copy_from_slice(&self.data[r * self.cols..r * self.cols + k]);
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Max deviation of `selfᵀ·self` from the identity; orthonormality check.
    pub fn gram_identity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..self.cols {
            for b in a..self.cols {
                let mut dot = 0.0;
                for r in 0..self.rows {
                    dot += self.get(r, a) * self.get(r, b);
                }
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Complex64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn max_abs_diff(&self, other: &CMat) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in descending order with matching eigenvector columns.
/// Ties keep the pre-sort (rotation) order, so results are deterministic.
pub fn sym_eigen(a: &Mat) -> Result<(Vec<f64>, Mat)> {
    let n = a.rows();
    if n != a.cols() {
        return Err(invalid_input(format!("sym_eigen requires a square matrix, got {}x{}", n, a.cols())));
    }
    if n == 0 {
        return Ok((Vec::new(), Mat::zeros(0, 0)));
    }

    let mut w = a.clone();
    let mut v = Mat::eye(n);

    let norm = a.frobenius_norm();
    let off_tol = (norm * 1e-15).max(f64::MIN_POSITIVE);

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += w.get(p, q).powi(2);
            }
        }
        if off.sqrt() <= off_tol {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = w.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = w.get(p, p);
                let aqq = w.get(q, q);
                // Skip rotations that cannot change anything at working precision.
                if apq.abs() <= 1e-18 * (app.abs() + aqq.abs() + f64::MIN_POSITIVE) {
                    w.set(p, q, 0.0);
                    w.set(q, p, 0.0);
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for i in 0..n {
                    let wip = w.get(i, p);
                    let wiq = w.get(i, q);
                    w.set(i, p, c * wip - s * wiq);
                    w.set(i, q, s * wip + c * wiq);
                }
                for i in 0..n {
                    let wpi = w.get(p, i);
                    let wqi = w.get(q, i);
                    w.set(p, i, c * wpi - s * wqi);
                    w.set(q, i, s * wpi + c * wqi);
                }
                // Symmetrize the rotated pair against roundoff drift.
                let sym = 0.5 * (w.get(p, q) + w.get(q, p));
                w.set(p, q, sym);
                w.set(q, p, sym);

                for i in 0..n {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, c * vip - s * viq);
                    v.set(i, q, s * vip + c * viq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| w.get(j, j).total_cmp(&w.get(i, i)).then(i.cmp(&j)));

    let eigvals: Vec<f64> = order.iter().map(|&i| w.get(i, i)).collect();
    let mut vectors = Mat::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, dst, v.get(r, src));
        }
    }
    Ok((eigvals, vectors))
}

/// Flip each column so its largest-magnitude entry is nonnegative
/// (ties broken by lowest row index). Makes factor matrices deterministic.
pub fn fix_column_signs(m: &mut Mat) {
    for c in 0..m.cols() {
        let mut best_row = 0;
        let mut best_abs = -1.0f64;
        for r in 0..m.rows() {
            let a = m.get(r, c).abs();
            if a > best_abs {
                best_abs = a;
                best_row = r;
            }
        }
        if m.get(best_row, c) < 0.0 {
            for r in 0..m.rows() {
                let v = m.get(r, c);
                m.set(r, c, -v);
            }
        }
    }
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_identity() {
        let (vals, vecs) = sym_eigen(&Mat::eye(4)).unwrap();
        for v in vals {
            assert!((v - 1.0).abs() < 1e-14);
        }
        assert!(vecs.gram_identity_deviation() < 1e-14);
    }

    #[test]
    fn eigen_known_2x2() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1.
        let a = Mat::from_vec(2, 2, vec![2.0, 1.0, 1.0, 2.0]);
        let (vals, vecs) = sym_eigen(&a).unwrap();
        assert!((vals[0] - 3.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
        assert!(vecs.gram_identity_deviation() < 1e-14);
    }

    #[test]
    fn eigen_reconstructs() {
        // A = V diag(w) Vᵀ must reproduce the input.
        let a = Mat::from_vec(
            3,
            3,
            vec![4.0, 1.0, -2.0, 1.0, 3.0, 0.5, -2.0, 0.5, 1.0],
        );
        let (vals, v) = sym_eigen(&a).unwrap();
        let mut rec = Mat::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += v.get(i, k) * vals[k] * v.get(j, k);
                }
                rec.set(i, j, s);
            }
        }
        assert!(a.max_abs_diff(&rec) < 1e-12);
    }

    #[test]
    fn eigen_zero_matrix() {
        let (vals, vecs) = sym_eigen(&Mat::zeros(3, 3)).unwrap();
        assert!(vals.iter().all(|&v| v == 0.0));
        assert!(vecs.gram_identity_deviation() < 1e-14);
    }

    #[test]
    fn sign_fix_makes_peak_nonnegative() {
        let mut m = Mat::from_vec(3, 2, vec![-0.8, 0.3, 0.1, -0.9, 0.2, 0.1]);
        fix_column_signs(&mut m);
        assert!(m.get(0, 0) > 0.0);
        assert!(m.get(1, 1) > 0.0);
    }

    #[test]
    fn matmul_and_transpose() {
        let a = Mat::from_vec(2, 3, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let b = a.transpose();
        let g = a.matmul(&b);
        assert_eq!(g.rows(), 2);
        assert!((g.get(0, 0) - 14.0).abs() < 1e-12);
        assert!((g.get(0, 1) - 32.0).abs() < 1e-12);
        assert!((g.get(1, 1) - 77.0).abs() < 1e-12);
    }
}

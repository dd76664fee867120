//! Dense symmetric linear algebra: positive-definiteness tests, the modified
//! Cholesky (LDLᵀ) factorization without pivoting, Schur complements,
//! inverses and determinants.
//!
//! All public indices are 1-based. Matrices are stored dense; this kernel is
//! meant for desk-scale dimensions (p up to a few hundred), not for large or
//! sparse problems.

// index pairs like rows[i][j] vs rows[j][i] don't iterate cleanly
#![allow(clippy::needless_range_loop)]

use thiserror::Error;

/// Default relative tolerance for positive-definiteness tests.
pub const DEFAULT_PD_TOL: f64 = 1e-10;

/// Relative threshold below which an elimination pivot counts as zero.
pub const ZERO_PIVOT_REL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SymlinError {
    /// Elimination hit a vanishing pivot at the given column (1-based); the
    /// leading principal submatrix of that order is singular.
    #[error("zero pivot at column {0}: singular leading principal submatrix")]
    ZeroPivot(usize),
    #[error("index block is numerically singular")]
    SingularBlock,
    #[error("matrix is numerically singular")]
    SingularMatrix,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index sets must be disjoint, non-repeating and within 1..=p")]
    BadIndexSets,
}

// ── Matrix ──────────────────────────────────────────────────────────

/// Plain dense rectangular matrix with 1-based accessors. Used for
/// off-diagonal blocks and triangular factors.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "index out of range"
        );
        self.data[(i - 1) * self.cols + (j - 1)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "index out of range"
        );
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 1..=self.rows {
            for k in 1..=self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 1..=rhs.cols {
                    out.set(i, j, out.get(i, j) + a * rhs.get(k, j));
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len(), "matvec dimension mismatch");
        (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.get(i, j) * x[j - 1]).sum())
            .collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<f64>> {
        (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

// ── SymMatrix ───────────────────────────────────────────────────────

/// Dense symmetric p×p matrix. Symmetry holds by construction: `set`
/// mirrors every write, and row constructors reject asymmetric input.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    p: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(p: usize) -> Self {
        SymMatrix {
            p,
            data: vec![0.0; p * p],
        }
    }

    pub fn identity(p: usize) -> Self {
        let mut m = SymMatrix::zeros(p);
        for i in 1..=p {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let mut m = SymMatrix::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.set(i + 1, i + 1, v);
        }
        m
    }

    /// Builds a symmetric matrix from full rows, rejecting asymmetric or
    /// non-finite input. Symmetry must be exact.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SymlinError> {
        let p = rows.len();
        for row in rows {
            if row.len() != p {
                return Err(SymlinError::DimensionMismatch {
                    expected: p,
                    got: row.len(),
                });
            }
        }
        for i in 0..p {
            for j in 0..p {
                if !rows[i][j].is_finite() {
                    return Err(SymlinError::NonFinite);
                }
                if rows[i][j] != rows[j][i] {
                    return Err(SymlinError::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        let mut m = SymMatrix::zeros(p);
        for i in 1..=p {
            for j in 1..=p {
                m.data[(i - 1) * p + (j - 1)] = rows[i - 1][j - 1];
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(
            i >= 1 && i <= self.p && j >= 1 && j <= self.p,
            "index out of range"
        );
        self.data[(i - 1) * self.p + (j - 1)]
    }

    /// Sets entry (i, j) and its mirror (j, i).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(
            i >= 1 && i <= self.p && j >= 1 && j <= self.p,
            "index out of range"
        );
        self.data[(i - 1) * self.p + (j - 1)] = v;
        self.data[(j - 1) * self.p + (i - 1)] = v;
    }

    pub fn rows_vec(&self) -> Vec<Vec<f64>> {
        (1..=self.p)
            .map(|i| (1..=self.p).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_diag(&self) -> f64 {
        (1..=self.p).fold(0.0, |m, i| m.max(self.get(i, i).abs()))
    }

    /// Scale against which elimination pivots count as zero.
    pub fn zero_pivot_scale(&self) -> f64 {
        ZERO_PIVOT_REL * 1.0_f64.max(self.max_abs_diag())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Relative Frobenius distance to `other` (absolute when `self` is zero).
    pub fn rel_frobenius_dist(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.p, other.p, "dimension mismatch");
        let mut num = 0.0;
        for (a, b) in self.data.iter().zip(&other.data) {
            num += (a - b) * (a - b);
        }
        let den = self.frobenius_norm();
        if den > 0.0 {
            num.sqrt() / den
        } else {
            num.sqrt()
        }
    }

    /// In-place `self += scale · other`.
    pub fn add_scaled(&mut self, other: &SymMatrix, scale: f64) {
        assert_eq!(self.p, other.p, "dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += scale * b;
        }
    }

    /// Principal submatrix over the given 1-based indices (order preserved).
    pub fn principal(&self, idx: &[usize]) -> SymMatrix {
        let k = idx.len();
        let mut m = SymMatrix::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.data[a * k + b] = self.get(i, j);
            }
        }
        m
    }

    /// Rectangular submatrix with the given 1-based row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a + 1, b + 1, self.get(i, j));
            }
        }
        m
    }

    /// Modified Cholesky factorization M = L·diag(D)·Lᵀ with L unit lower
    /// triangular, computed column by column without pivoting. D entries may
    /// have either sign. Fails when elimination hits a vanishing pivot with
    /// rows still to eliminate; a vanishing pivot in the last column is kept
    /// (the factorization still exists).
    pub fn modified_cholesky(&self) -> Result<LdlFactor, SymlinError> {
        let p = self.p;
        let zscale = self.zero_pivot_scale();
        let mut l = Matrix::identity(p);
        let mut d = vec![0.0; p];
        for j in 1..=p {
            let mut djj = self.get(j, j);
            for k in 1..j {
                djj -= d[k - 1] * l.get(j, k) * l.get(j, k);
            }
            d[j - 1] = djj;
            if j < p {
                if djj.abs() <= zscale {
                    return Err(SymlinError::ZeroPivot(j));
                }
                for i in (j + 1)..=p {
                    let mut s = self.get(i, j);
                    for k in 1..j {
                        s -= d[k - 1] * l.get(i, k) * l.get(j, k);
                    }
                    l.set(i, j, s / djj);
                }
            }
        }
        Ok(LdlFactor { l, d })
    }

    /// Positive definiteness via Cholesky pivots: true iff elimination
    /// succeeds with every pivot > tol · max(1, max |diagonal|).
    pub fn is_positive_definite(&self, tol: f64) -> bool {
        let p = self.p;
        let threshold = tol * 1.0_f64.max(self.max_abs_diag());
        let mut l = Matrix::identity(p);
        let mut d = vec![0.0; p];
        for j in 1..=p {
            let mut djj = self.get(j, j);
            for k in 1..j {
                djj -= d[k - 1] * l.get(j, k) * l.get(j, k);
            }
            if djj <= threshold {
                return false;
            }
            d[j - 1] = djj;
            for i in (j + 1)..=p {
                let mut s = self.get(i, j);
                for k in 1..j {
                    s -= d[k - 1] * l.get(i, k) * l.get(j, k);
                }
                l.set(i, j, s / djj);
            }
        }
        true
    }

    /// Schur complement M_J − M_{JI}·M_I⁻¹·M_{IJ} of the block M_I, with the
    /// convention that an empty I yields M_J unchanged.
    pub fn schur_complement(
        &self,
        i_set: &[usize],
        j_set: &[usize],
    ) -> Result<SymMatrix, SymlinError> {
        if !disjoint_in_range(self.p, i_set, j_set) {
            return Err(SymlinError::BadIndexSets);
        }
        if i_set.is_empty() {
            return Ok(self.principal(j_set));
        }
        let block_i = self.principal(i_set);
        let factor = block_i
            .modified_cholesky()
            .map_err(|_| SymlinError::SingularBlock)?;
        if factor.min_abs_pivot() <= block_i.zero_pivot_scale() {
            return Err(SymlinError::SingularBlock);
        }
        let m_ij = self.submatrix(i_set, j_set);
        let x = factor.solve_matrix(&m_ij);
        let m_ji = self.submatrix(j_set, i_set);
        let prod = m_ji.matmul(&x);
        let k = j_set.len();
        let mut out = SymMatrix::zeros(k);
        for a in 1..=k {
            for b in a..=k {
                // exact symmetry is restored by averaging the mirror pair
                let v =
                    self.get(j_set[a - 1], j_set[b - 1]) - 0.5 * (prod.get(a, b) + prod.get(b, a));
                out.set(a, b, v);
            }
        }
        Ok(out)
    }

    /// Inverse via the LDLᵀ factorization, solving against unit vectors.
    pub fn inverse(&self) -> Result<SymMatrix, SymlinError> {
        let factor = self.nonsingular_factor()?;
        let p = self.p;
        let mut cols = Vec::with_capacity(p);
        for j in 1..=p {
            let mut e = vec![0.0; p];
            e[j - 1] = 1.0;
            cols.push(factor.solve(&e));
        }
        let mut out = SymMatrix::zeros(p);
        for i in 1..=p {
            for j in 1..=i {
                // symmetrize against rounding in the two triangular sweeps
                out.set(i, j, 0.5 * (cols[j - 1][i - 1] + cols[i - 1][j - 1]));
            }
        }
        Ok(out)
    }

    /// Determinant as the product of the LDLᵀ pivots.
    pub fn determinant(&self) -> Result<f64, SymlinError> {
        let factor = self.nonsingular_factor()?;
        Ok(factor.det())
    }

    fn nonsingular_factor(&self) -> Result<LdlFactor, SymlinError> {
        let factor = self
            .modified_cholesky()
            .map_err(|_| SymlinError::SingularMatrix)?;
        if factor.min_abs_pivot() <= self.zero_pivot_scale() {
            return Err(SymlinError::SingularMatrix);
        }
        Ok(factor)
    }
}

fn disjoint_in_range(p: usize, i_set: &[usize], j_set: &[usize]) -> bool {
    let mut seen = vec![false; p + 1];
    for &v in i_set.iter().chain(j_set) {
        if v < 1 || v > p || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

// ── LdlFactor ───────────────────────────────────────────────────────

/// Unit lower-triangular L and diagonal D from the modified Cholesky
/// factorization M = L·diag(D)·Lᵀ.
#[derive(Debug, Clone)]
pub struct LdlFactor {
    l: Matrix,
    d: Vec<f64>,
}

impl LdlFactor {
    pub(crate) fn from_parts(l: Matrix, d: Vec<f64>) -> Self {
        assert_eq!(l.nrows(), d.len());
        assert_eq!(l.ncols(), d.len());
        LdlFactor { l, d }
    }

    pub fn dim(&self) -> usize {
        self.d.len()
    }

    pub fn l(&self) -> &Matrix {
        &self.l
    }

    pub fn d(&self) -> &[f64] {
        &self.d
    }

    pub fn min_abs_pivot(&self) -> f64 {
        self.d.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()))
    }

    pub fn det(&self) -> f64 {
        self.d.iter().product()
    }

    /// Rebuilds L·diag(D)·Lᵀ.
    pub fn reconstruct(&self) -> SymMatrix {
        let p = self.dim();
        let mut out = SymMatrix::zeros(p);
        for i in 1..=p {
            for j in 1..=i {
                let mut s = 0.0;
                for k in 1..=j {
                    s += self.d[k - 1] * self.l.get(i, k) * self.l.get(j, k);
                }
                out.set(i, j, s);
            }
        }
        out
    }

    /// Solves L·diag(D)·Lᵀ x = b.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let p = self.dim();
        assert_eq!(b.len(), p, "rhs length mismatch");
        let mut y = b.to_vec();
        for i in 1..=p {
            for k in 1..i {
                y[i - 1] -= self.l.get(i, k) * y[k - 1];
            }
        }
        for i in 1..=p {
            y[i - 1] /= self.d[i - 1];
        }
        for i in (1..=p).rev() {
            for k in (i + 1)..=p {
                y[i - 1] -= self.l.get(k, i) * y[k - 1];
            }
        }
        y
    }

    /// Solves against every column of `b`.
    pub fn solve_matrix(&self, b: &Matrix) -> Matrix {
        assert_eq!(b.nrows(), self.dim(), "rhs row mismatch");
        let mut out = Matrix::zeros(b.nrows(), b.ncols());
        for j in 1..=b.ncols() {
            let col: Vec<f64> = (1..=b.nrows()).map(|i| b.get(i, j)).collect();
            let x = self.solve(&col);
            for i in 1..=b.nrows() {
                out.set(i, j, x[i - 1]);
            }
        }
        out
    }
}

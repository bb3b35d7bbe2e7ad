//! Dense complex matrix carrier.
//!
//! [`Matrix`] is a thin owned wrapper over a `faer` matrix of complex
//! doubles. Every value that crosses the public API is a `Matrix`, which
//! guarantees at least one row and one column and finite entries. Real data
//! is promoted to complex with a zero imaginary part.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use faer::{Mat, MatRef};
pub use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Dense `rows x cols` matrix of complex doubles.
#[derive(Clone)]
pub struct Matrix {
    inner: Mat<C64>,
}

impl Matrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Self::from_mat(Mat::from_fn(rows, cols, |i, j| entries[i * cols + j]))
    }

    /// Builds a matrix from complex rows; every row must have the same length.
    pub fn from_rows<R: AsRef<[C64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::new(rows.len(), cols, entries)
    }

    /// Builds a matrix from real rows.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Wraps a `faer` matrix, validating shape and finiteness.
    pub fn from_mat(inner: Mat<C64>) -> Result<Self> {
        if inner.nrows() == 0 || inner.ncols() == 0 {
            return Err(Error::EmptyMatrix);
        }
        for j in 0..inner.ncols() {
            for i in 0..inner.nrows() {
                let z = inner[(i, j)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self { inner })
    }

    /// Wraps an internally computed matrix. Shapes are guaranteed by the caller.
    pub(crate) fn wrap(inner: Mat<C64>) -> Self {
        debug_assert!(inner.nrows() > 0 && inner.ncols() > 0);
        Self { inner }
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self::wrap(Mat::zeros(rows, cols))
    }

    /// # Panics
    /// If `n` is zero.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "matrix dimensions must be positive");
        Self::wrap(Mat::identity(n, n))
    }

    /// Square diagonal matrix.
    ///
    /// # Panics
    /// If `diag` is empty.
    pub fn diag(diag: &[C64]) -> Self {
        let n = diag.len();
        assert!(n > 0, "matrix dimensions must be positive");
        Self::wrap(Mat::from_fn(n, n, |i, j| if i == j { diag[i] } else { C64::new(0.0, 0.0) }))
    }

    pub fn real_diag(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::diag(&d)
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.inner[(row, col)]
    }

    pub fn as_ref(&self) -> MatRef<'_, C64> {
        self.inner.as_ref()
    }

    pub fn as_mat(&self) -> &Mat<C64> {
        &self.inner
    }

    pub fn into_inner(self) -> Mat<C64> {
        self.inner
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Self::wrap(self.inner.adjoint().to_owned())
    }

    pub fn transpose(&self) -> Matrix {
        Self::wrap(self.inner.transpose().to_owned())
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.inner.norm_l2()
    }

    /// Spectral norm (largest singular value).
    pub fn norm_spectral(&self) -> f64 {
        crate::linalg::singular_values(self.as_ref())
            .first()
            .copied()
            .unwrap_or(0.0)
    }

    pub fn scale(&self, factor: C64) -> Matrix {
        Self::wrap(Mat::from_fn(self.rows(), self.cols(), |i, j| self.inner[(i, j)] * factor))
    }

    pub fn scale_real(&self, factor: f64) -> Matrix {
        self.scale(C64::new(factor, 0.0))
    }

    /// Largest entrywise modulus of `self - other`.
    ///
    /// # Panics
    /// If the shapes differ.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        let mut worst = 0.0f64;
        for j in 0..self.cols() {
            for i in 0..self.rows() {
                worst = worst.max((self.inner[(i, j)] - other.inner[(i, j)]).norm());
            }
        }
        worst
    }

    /// Entries as a vector of rows.
    pub fn to_rows(&self) -> Vec<Vec<C64>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.inner[(i, j)]).collect())
            .collect()
    }

    /// True when every entry has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.to_rows().iter().flatten().all(|z| z.im == 0.0)
    }

    /// Stacks `self` and `other` side by side.
    pub fn hconcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows() != other.rows() {
            return Err(Error::ShapeMismatch(format!(
                "cannot concatenate {}x{} with {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        let c = self.cols();
        Ok(Self::wrap(Mat::from_fn(self.rows(), c + other.cols(), |i, j| {
            if j < c {
                self.inner[(i, j)]
            } else {
                other.inner[(i, j - c)]
            }
        })))
    }

    pub(crate) fn check_same_shape(&self, other: &Matrix, what: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows(), cols: self.cols() });
        }
        Ok(())
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape() && self.max_abs_diff(other) == 0.0
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows(), self.cols())?;
        for row in self.to_rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| {
                    if z.im == 0.0 {
                        format!("{:.6}", z.re)
                    } else {
                        format!("{:.6}{:+.6}i", z.re, z.im)
                    }
                })
                .collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix::wrap(&self.inner + &rhs.inner)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix::wrap(&self.inner - &rhs.inner)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::wrap(&self.inner * &rhs.inner)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale_real(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                (&self).$method(rhs)
            }
        }
        impl $tr<Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

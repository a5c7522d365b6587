//! Dense row-major complex matrix.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::CoreError;
use crate::scalar::{Scalar, C};

/// Dense complex matrix with row-major storage.
///
/// Arithmetic operators are defined on references and panic on shape
/// mismatch (a programmer error); fallible entry points that consume
/// external data return [`CoreError`] instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<C<T>>,
}

impl<T: Scalar> Matrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Matrix from a row-major element vector.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C<T>>) -> Result<Self, CoreError> {
        if data.len() != rows * cols {
            return Err(CoreError::DimensionMismatch {
                context: "Matrix::from_vec",
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Matrix built entrywise from a function of (row, column).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Square matrix with the given real diagonal.
    pub fn from_real_diag(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(d, T::zero());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Dimension of a square matrix.
    ///
    /// # Errors
    /// Fails on non-square input.
    pub fn dim(&self) -> Result<usize, CoreError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(CoreError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Raw row-major storage.
    pub fn as_slice(&self) -> &[C<T>] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Plain transpose (no conjugation).
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].conj())
    }

    /// Matrix trace (square only; panics otherwise).
    pub fn trace(&self) -> C<T> {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows {
            t += self[(i, i)];
        }
        t
    }

    /// Scale by a complex factor.
    pub fn scale(&self, factor: C<T>) -> Self {
        let data = self.data.iter().map(|z| z * factor).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Scale by a real factor.
    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// Kronecker (tensor) product `self (x) other`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self[(r1, c1)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out[(r1 * other.rows + r2, c1 * other.cols + c2)] = a * other[(r2, c2)];
                    }
                }
            }
        }
        out
    }

    /// Largest elementwise modulus.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    /// Largest elementwise modulus of the difference.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "max_abs_diff shape mismatch"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    /// Largest elementwise modulus of `A - A^dag` (square only).
    pub fn hermiticity_deviation(&self) -> T {
        assert!(self.is_square(), "hermiticity of non-square matrix");
        let mut dev = T::zero();
        for r in 0..self.rows {
            for c in r..self.cols {
                let d = (self[(r, c)] - self[(c, r)].conj()).norm();
                if d > dev {
                    dev = d;
                }
            }
        }
        dev
    }

    /// Largest off-diagonal modulus (square only).
    pub fn max_offdiag(&self) -> T {
        assert!(self.is_square(), "max_offdiag of non-square matrix");
        let mut dev = T::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c {
                    let d = self[(r, c)].norm();
                    if d > dev {
                        dev = d;
                    }
                }
            }
        }
        dev
    }

    /// Real parts of the diagonal (square only).
    pub fn real_diag(&self) -> Vec<T> {
        assert!(self.is_square(), "diagonal of non-square matrix");
        (0..self.rows).map(|i| self[(i, i)].re).collect()
    }

    /// `self * other` via the naive triple loop with the inner index last,
    /// which keeps both operands in cache order for row-major storage.
    fn mul_impl(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product inner dimension mismatch"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        out
    }
}

impl<T: Scalar> Index<(usize, usize)> for Matrix<T> {
    type Output = C<T>;
    fn index(&self, (r, c): (usize, usize)) -> &C<T> {
        &self.data[r * self.cols + c]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C<T> {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.mul_impl(rhs)
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.scale_re(-T::one())
    }
}

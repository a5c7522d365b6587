//! Validated density matrices and Hermitian operators.

use num_complex::Complex;

use crate::eig::{eig_hermitian, SpectralDecomposition};
use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::space::HilbertSpace;

/// Density matrix: Hermitian, unit trace, positive semidefinite within
/// tolerance, carrying the tensor structure of its space.
#[derive(Debug, Clone)]
pub struct DensityMatrix<T: Scalar> {
    space: HilbertSpace,
    mat: Matrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validated construction at the default (strict) tolerances.
    ///
    /// # Errors
    /// Rejects shape mismatch against the space, hermiticity deviation or
    /// trace deviation above the exact tolerance, and eigenvalues below the
    /// PSD floor.
    pub fn new(space: HilbertSpace, mat: Matrix<T>) -> Result<Self, CoreError> {
        Self::with_tolerance(space, mat, T::one())
    }

    /// Validated construction with all tolerances scaled by `tol_scale`.
    ///
    /// Integrator output uses a relaxed profile (scale ~1e3): there the
    /// scheme's truncation error, not rounding, bounds the invariant defects.
    ///
    /// # Errors
    /// Same conditions as [`DensityMatrix::new`] at the scaled tolerances.
    pub fn with_tolerance(
        space: HilbertSpace,
        mat: Matrix<T>,
        tol_scale: T,
    ) -> Result<Self, CoreError> {
        let n = mat.dim()?;
        if n != space.total_dim() {
            return Err(CoreError::DimensionMismatch {
                context: "DensityMatrix space",
                expected: space.total_dim(),
                got: n,
            });
        }
        let tol = T::tol_exact() * tol_scale;
        let herm = mat.hermiticity_deviation();
        if herm > tol {
            return Err(CoreError::NotHermitian {
                max_dev: herm.as_f64(),
            });
        }
        let tr = mat.trace();
        if (tr.re - T::one()).abs() > tol || tr.im.abs() > tol {
            return Err(CoreError::TraceNotOne {
                trace: tr.re.as_f64(),
                tol: tol.as_f64(),
            });
        }
        let eig = eig_hermitian(&mat)?;
        let min = eig.values.first().copied().unwrap_or_else(T::zero);
        let floor = -tol;
        if min < floor {
            return Err(CoreError::NotPositive {
                min_eigenvalue: min.as_f64(),
                floor: floor.as_f64(),
            });
        }
        Ok(Self { space, mat })
    }

    /// Construction without validation, for matrices that are density
    /// matrices by exact construction (tensor products of validated states,
    /// exact convex mixtures). The caller guarantees the invariants.
    pub fn new_unchecked(space: HilbertSpace, mat: Matrix<T>) -> Self {
        debug_assert_eq!(space.total_dim(), mat.rows());
        Self { space, mat }
    }

    pub fn space(&self) -> &HilbertSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    /// `Tr(rho A)`, real part (exact for Hermitian observables).
    pub fn expectation(&self, op: &HermitianOperator<T>) -> T {
        (&self.mat * op.matrix()).trace().re
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> T {
        (&self.mat * &self.mat).trace().re
    }

    /// Von Neumann entropy in nats; zero eigenvalues contribute zero.
    pub fn von_neumann_entropy(&self) -> Result<T, CoreError> {
        let eig = eig_hermitian(&self.mat)?;
        let mut s = T::zero();
        for &p in &eig.values {
            if p > T::zero() {
                s -= p * p.ln();
            }
        }
        Ok(s)
    }

    /// Spectral decomposition of the state.
    pub fn eig(&self) -> Result<SpectralDecomposition<T>, CoreError> {
        eig_hermitian(&self.mat)
    }
}

/// Hermitian operator (observable or Hamiltonian) on a composite space.
#[derive(Debug, Clone)]
pub struct HermitianOperator<T: Scalar> {
    space: HilbertSpace,
    mat: Matrix<T>,
}

impl<T: Scalar> HermitianOperator<T> {
    /// Validated construction.
    ///
    /// # Errors
    /// Rejects shape mismatch and hermiticity deviation above the exact
    /// tolerance relative to the largest element.
    pub fn new(space: HilbertSpace, mat: Matrix<T>) -> Result<Self, CoreError> {
        let n = mat.dim()?;
        if n != space.total_dim() {
            return Err(CoreError::DimensionMismatch {
                context: "HermitianOperator space",
                expected: space.total_dim(),
                got: n,
            });
        }
        let dev = mat.hermiticity_deviation();
        let tol = T::tol_exact() * (T::one() + mat.max_abs());
        if dev > tol {
            return Err(CoreError::NotHermitian {
                max_dev: dev.as_f64(),
            });
        }
        Ok(Self { space, mat })
    }

    /// Hermitian operator with the given real diagonal.
    pub fn from_real_diag(space: HilbertSpace, diag: &[T]) -> Result<Self, CoreError> {
        Self::new(space, Matrix::from_real_diag(diag))
    }

    pub fn space(&self) -> &HilbertSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.mat
    }

    /// Spectral decomposition, eigenvalues ascending.
    pub fn eig(&self) -> Result<SpectralDecomposition<T>, CoreError> {
        eig_hermitian(&self.mat)
    }

    /// Scale by a real factor (e.g. a frequency).
    pub fn scaled(&self, factor: T) -> Self {
        Self {
            space: self.space.clone(),
            mat: self.mat.scale_re(factor),
        }
    }
}

/// Gibbs state `exp(-beta H)/Z`, computed with shifted exponents so that
/// large `beta` underflows gracefully instead of overflowing.
///
/// # Errors
/// Propagates eigensolver failures.
pub fn thermal_state<T: Scalar>(
    beta: T,
    h: &HermitianOperator<T>,
) -> Result<DensityMatrix<T>, CoreError> {
    let eig = h.eig()?;
    // Ascending eigenvalues: values[0] is the ground energy.
    let e0 = eig.values[0];
    let weights: Vec<T> = eig.values.iter().map(|&e| (-(beta * (e - e0))).exp()).collect();
    let z: T = weights.iter().fold(T::zero(), |a, &b| a + b);
    let m = Matrix::from_fn(h.matrix().rows(), h.matrix().cols(), |r, c| {
        let mut s = Complex::new(T::zero(), T::zero());
        for (j, &w) in weights.iter().enumerate() {
            s += eig.vectors[(r, j)] * eig.vectors[(c, j)].conj() * (w / z);
        }
        s
    });
    DensityMatrix::new(h.space().clone(), m)
}

//! Truncated Fock-space helpers for the cavity mode.

use num_complex::Complex;
use quantum_core::{CoreError, DensityMatrix, HilbertSpace, Matrix, Scalar};

/// Hilbert space of the cavity mode truncated at `dim` levels.
pub fn cavity_space(dim: usize) -> HilbertSpace {
    HilbertSpace::single(dim, "cavity").expect("positive cutoff")
}

/// Annihilation operator on the truncated space: `a |n> = sqrt(n) |n-1>`.
pub fn annihilation<T: Scalar>(dim: usize) -> Matrix<T> {
    Matrix::from_fn(dim, dim, |r, c| {
        if c == r + 1 {
            Complex::new(T::from_usize(c).expect("small integer").sqrt(), T::zero())
        } else {
            Complex::new(T::zero(), T::zero())
        }
    })
}

/// Bose-Einstein weights `(1-q) q^n`, `q = n_bar/(n_bar+1)`, on the
/// untruncated ladder; the omitted tail mass is exactly `q^dim`.
pub fn thermal_populations<T: Scalar>(n_bar: T, dim: usize) -> Vec<T> {
    if n_bar <= T::zero() {
        let mut p = vec![T::zero(); dim];
        p[0] = T::one();
        return p;
    }
    let q = n_bar / (n_bar + T::one());
    let mut p = Vec::with_capacity(dim);
    let mut w = T::one() - q;
    for _ in 0..dim {
        p.push(w);
        w = w * q;
    }
    p
}

/// Mean of the number operator under a population vector.
pub fn mean_occupation<T: Scalar>(populations: &[T]) -> T {
    let mut n = T::zero();
    for (k, &p) in populations.iter().enumerate() {
        n += T::from_usize(k).expect("small integer") * p;
    }
    n
}

/// Diagonal cavity state from a population vector (renormalized).
///
/// # Errors
/// Rejects populations that do not form a distribution.
pub fn diagonal_state<T: Scalar>(populations: &[T]) -> Result<DensityMatrix<T>, CoreError> {
    let total: T = populations.iter().fold(T::zero(), |a, &b| a + b);
    let m = Matrix::from_real_diag(
        &populations.iter().map(|&p| p / total).collect::<Vec<_>>(),
    );
    DensityMatrix::new(cavity_space(populations.len()), m)
}

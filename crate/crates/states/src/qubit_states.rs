//! Four-qubit bound entangled states: the Smolin state and the FLS family.

use num_complex::Complex;
use quantum_core::{DensityMatrix, HilbertSpace, Matrix, Scalar};

use crate::error::StateError;

/// Four-qubit Smolin state: an equal mixture of the four two-pair Bell
/// products. In the computational basis it has diagonal 1/8 on the eight
/// indices {0,3,5,6,9,10,12,15} and matching anti-diagonal entries 1/8
/// pairing each index i with 15-i. Rank 4 with eigenvalue 1/4; every
/// single-qubit marginal is I/2.
pub fn smolin_state<T: Scalar>() -> DensityMatrix<T> {
    let eighth = Complex::new(T::lit(0.125), T::zero());
    let mut m = Matrix::zeros(16, 16);
    for &i in &[0usize, 3, 5, 6, 9, 10, 12, 15] {
        m[(i, i)] = eighth;
        m[(i, 15 - i)] = eighth;
    }
    DensityMatrix::new(HilbertSpace::qubits(4), m).expect("fixed entries form a state")
}

/// FLS state `rho_eps` on four qubits (viewed as a 4x4 bipartition of the
/// first two against the last two): bound entangled for eps <= 0.5, free
/// entangled for eps > 0.5. Eigenvalues are (1-eps)/4 and eps/4, four times
/// each. Every matrix entry is affine in eps.
///
/// # Errors
/// Rejects eps outside [0, 1].
pub fn fls_state<T: Scalar>(eps: T) -> Result<DensityMatrix<T>, StateError> {
    if !(T::zero()..=T::one()).contains(&eps) {
        return Err(quantum_core::CoreError::OutOfRange {
            param: "eps",
            value: eps.as_f64(),
            min: 0.0,
            max: 1.0,
        }
        .into());
    }
    let quarter = Complex::new((T::one() - eps) * T::lit(0.25), T::zero());
    let plus = Complex::new(eps * T::lit(0.125), T::zero());
    let minus = -plus;
    let mut m = Matrix::zeros(16, 16);
    for &i in &[0usize, 5, 10, 15] {
        m[(i, i)] = quarter;
    }
    for &(i, j) in &[(1usize, 4usize), (2, 8), (7, 13), (11, 14)] {
        m[(i, i)] = plus;
        m[(j, j)] = plus;
        m[(i, j)] = minus;
        m[(j, i)] = minus;
    }
    Ok(DensityMatrix::new(HilbertSpace::qubits(4), m).expect("fixed entries form a state"))
}

//! Dense complex linear algebra and Hilbert-space bookkeeping for finite
//! quantum systems.
//!
//! Everything here is generic over the real scalar type via [`Scalar`]
//! (implemented for `f32` and `f64`); the `*64` aliases at the crate root are
//! the default double-precision entry points used by the physics crates.
//!
//! The building blocks are deliberately small and dense: every Hilbert space
//! in scope is a tensor product of a handful of qubits/qutrits and one
//! truncated bosonic mode, so a flat row-major matrix plus an EISPACK-style
//! Hermitian eigensolver covers all needs without sparse or external BLAS
//! machinery. All operations are pure functions of immutable inputs.

pub mod eig;
pub mod error;
pub mod matrix;
pub mod ops;
pub mod scalar;
pub mod space;
pub mod states;
pub mod tol;

pub use eig::{eig_hermitian, EigOrder, SpectralDecomposition};
pub use error::CoreError;
pub use matrix::Matrix;
pub use ops::{
    embed_local, matrix_exp_unitary, partial_trace, partial_transpose, permutation_matrix,
    permute_factors, tensor_operators, tensor_states, trace_norm,
};
pub use scalar::{Scalar, C};
pub use space::HilbertSpace;
pub use states::{thermal_state, DensityMatrix, HermitianOperator};

/// Double-precision complex scalar.
pub type C64 = num_complex::Complex<f64>;
/// Double-precision dense complex matrix.
pub type Matrix64 = Matrix<f64>;
/// Double-precision density matrix.
pub type DensityMatrix64 = DensityMatrix<f64>;
/// Double-precision Hermitian operator.
pub type HermitianOperator64 = HermitianOperator<f64>;
/// Double-precision spectral decomposition.
pub type SpectralDecomposition64 = SpectralDecomposition<f64>;

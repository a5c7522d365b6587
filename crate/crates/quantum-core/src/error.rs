//! Error type shared by the linear-algebra and state-validation layers.

use thiserror::Error;

/// Failures of structural preconditions or numerical invariants.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Two operands (or an operand and a space) disagree in dimension.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// A square matrix was required.
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    /// Hermiticity violated beyond tolerance.
    #[error("matrix is not Hermitian: max |A - A^dag| = {max_dev:e}")]
    NotHermitian { max_dev: f64 },

    /// Density-matrix trace differs from one beyond tolerance.
    #[error("state trace is {trace} (must be 1 within tolerance {tol:e})")]
    TraceNotOne { trace: f64, tol: f64 },

    /// Density matrix has an eigenvalue below the admissible floor.
    #[error("state has eigenvalue {min_eigenvalue:e} below floor {floor:e}")]
    NotPositive { min_eigenvalue: f64, floor: f64 },

    /// Reconstructed operator failed its unitarity check.
    #[error("operator is not unitary: max |U^dag U - I| = {max_dev:e}")]
    NotUnitary { max_dev: f64 },

    /// A tensor-factor index was out of range or ill-ordered.
    #[error("bad factor selection {what}: index {index} with {count} factors")]
    BadFactor {
        what: &'static str,
        index: usize,
        count: usize,
    },

    /// A Hilbert space was declared with an invalid factor list.
    #[error("invalid Hilbert space: {reason}")]
    BadSpace { reason: &'static str },

    /// The QL iteration failed to converge on one eigenvalue.
    #[error("eigensolver did not converge at row {row} after {iterations} iterations")]
    EigNonConvergence { row: usize, iterations: usize },

    /// A scalar parameter fell outside its documented domain.
    #[error("parameter {param} = {value} outside [{min}, {max}]")]
    OutOfRange {
        param: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },
}

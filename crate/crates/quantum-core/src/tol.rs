//! Library-wide double-precision tolerance constants.
//!
//! Grouped by the arithmetic that produces the error, not by the consumer:
//! quantities assembled by finite exact sums are held to tighter bounds than
//! quantities coming out of iterative solvers.

/// Invariants preserved by exact arithmetic (hermiticity of constructed
/// states, unit trace, Kraus completeness). Dimensions here are at most a few
/// hundred, so accumulated rounding stays orders of magnitude below this.
pub const EXACT: f64 = 1e-10;

/// Results of iterative algorithms: eigendecomposition reconstruction and
/// orthonormality, unitarity of spectrally reconstructed exponentials.
/// QL iteration on a tridiagonal matrix loses 1-2 digits over raw epsilon
/// at dimension a few hundred.
pub const ITERATIVE: f64 = 1e-9;

/// Eigenvalue floor for positive semidefinite checks: a true density matrix
/// may dip this far below zero after an eigensolve.
pub const PSD_FLOOR: f64 = -1e-10;

/// Relaxed profile for states sampled from a fixed-step integrator, where the
/// truncation error of the scheme (not rounding) dominates.
pub const INTEGRATOR: f64 = 1e-7;

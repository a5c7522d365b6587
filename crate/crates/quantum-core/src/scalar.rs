//! Real scalar abstraction underlying all complex matrices.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, ToPrimitive};

use crate::tol;

/// Complex number over the crate scalar.
pub type C<T> = Complex<T>;

/// Real floating-point scalar for all numerical kernels.
///
/// Implemented for `f32` and `f64`. The per-type default tolerances reflect
/// the precision actually reachable by each type: the `f64` values are the
/// library-wide contract constants from [`tol`], the `f32` values are scaled
/// up by the ratio of machine epsilons.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Conversion from an `f64` constant; panics only on non-finite input.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal")
    }

    /// Lossy view as `f64` for error reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Default tolerance for exact-arithmetic invariants (hermiticity, trace).
    fn tol_exact() -> Self;

    /// Default tolerance for iteratively computed results (eigensolves,
    /// unitarity of reconstructed exponentials).
    fn tol_iterative() -> Self;
}

impl Scalar for f64 {
    fn tol_exact() -> Self {
        tol::EXACT
    }
    fn tol_iterative() -> Self {
        tol::ITERATIVE
    }
}

impl Scalar for f32 {
    fn tol_exact() -> Self {
        1e-5
    }
    fn tol_iterative() -> Self {
        1e-4
    }
}

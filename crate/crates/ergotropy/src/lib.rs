//! Work extraction from quantum states by cyclic unitary driving.
//!
//! The largest amount of work a cyclic process can draw from a state is its
//! ergotropy: the energy gap between the state and the passive state sharing
//! its spectrum, reached by pairing the largest populations with the lowest
//! energy levels. This crate computes the ergotropy, the optimal extraction
//! unitary and the passive remainder, closed-form sweeps over the register
//! families from the `states` crate, and the time evolution of ergotropy
//! while a two-qutrit state decays through the local amplitude-damping
//! channel of the `channels` crate.

pub mod curves;
pub mod dynamics;
pub mod error;
pub mod extract;

pub use curves::{ergotropy_curve_fls, ergotropy_curve_horodecki, CurveOutput};
pub use dynamics::ergotropy_dynamics;
pub use error::ErgotropyError;
pub use extract::{ergotropy, optimal_unitary, ErgotropyResult};

/// Ergotropy result on `f64`.
pub type ErgotropyResult64 = ErgotropyResult<f64>;
/// Curve output on `f64`.
pub type CurveOutput64 = CurveOutput<f64>;

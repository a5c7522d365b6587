//! Error type for ergotropy computations.

use quantum_core::CoreError;
use thiserror::Error;

/// Failures raised by ergotropy evaluation, sweeps, and dynamics.
#[derive(Debug, Error)]
pub enum ErgotropyError {
    /// Underlying linear-algebra or state-validation failure.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// State-family constructor failure inside a sweep.
    #[error(transparent)]
    State(#[from] states::StateError),
    /// Channel or integrator failure inside a dynamics run.
    #[error(transparent)]
    Channel(#[from] channels::ChannelError),
    /// The computed work came out negative beyond numerical noise, which
    /// indicates inconsistent inputs rather than roundoff.
    #[error("ergotropy came out negative beyond roundoff: {work:e}")]
    NegativeWork {
        /// The offending value.
        work: f64,
    },
}

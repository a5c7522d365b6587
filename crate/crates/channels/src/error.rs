//! Error type for channel construction and integration.

use quantum_core::CoreError;
use thiserror::Error;

/// Failures raised by channel constructors, channel application, and the
/// Lindblad integrator.
#[derive(Debug, Error)]
pub enum ChannelError {
    /// Underlying linear-algebra or state-validation failure.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// The Kraus operators do not resolve the identity.
    #[error("Kraus completeness violated: max deviation {max_dev:e}")]
    IncompleteKraus {
        /// Largest entry of `sum_k K_k^dag K_k - I` in absolute value.
        max_dev: f64,
    },
    /// A trajectory sample stopped satisfying the density-matrix
    /// invariants, which usually means the step size is too large.
    #[error("trajectory invariant violated at t = {t}: {source} (step size too large?)")]
    TrajectoryInvariant {
        /// Time of the offending sample.
        t: f64,
        /// The validation failure.
        source: CoreError,
    },
}

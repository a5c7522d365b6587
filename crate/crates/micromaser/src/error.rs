//! Error type for pump-coefficient extraction and cavity steady-state solvers.

use channels::ChannelError;
use quantum_core::CoreError;
use thiserror::Error;

/// Failures raised by the micromaser temperature pipeline.
#[derive(Debug, Error)]
pub enum MicromaserError {
    /// Underlying linear-algebra or state-validation failure.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// Channel failure while preparing a processed fuel state.
    #[error(transparent)]
    Channel(#[from] ChannelError),
    /// The maser condition `delta + kappa/mu > 0` fails: the pump inverts
    /// the cavity faster than the loss can thermalize it, so no thermal
    /// steady state exists.
    #[error("no thermal steady state: delta + kappa/mu = {excess:e} <= 0 (delta = {delta}, kappa/mu = {kappa_over_mu})")]
    BelowThreshold {
        /// Population bias of the fuel cluster.
        delta: f64,
        /// Loss-to-pump rate ratio.
        kappa_over_mu: f64,
        /// The combination that must stay positive.
        excess: f64,
    },
    /// A solver restricted to heat-exchange-only fuel received a state
    /// carrying displacement or squeezing coherences.
    #[error("fuel carries coherent amplitudes (|lambda| = {lambda_abs:e}, |xi| = {xi_abs:e}); only heat-exchange coherences are supported here")]
    NotHeatExchange {
        /// Magnitude of the one-quantum (displacement) coherence sum.
        lambda_abs: f64,
        /// Magnitude of the two-quanta (squeezing) coherence sum.
        xi_abs: f64,
    },
    /// The Fock-space cutoff still truncates non-negligible steady-state
    /// weight after the automatic enlargement attempts.
    #[error("Fock truncation at dim {fock_dim} leaves tail mass {tail:e} (want < {want:e})")]
    TruncationInsufficient {
        /// Largest cutoff tried.
        fock_dim: usize,
        /// Steady-state weight at the cutoff boundary.
        tail: f64,
        /// Acceptable boundary weight.
        want: f64,
    },
    /// The collision chain did not reach its fixed point within the step
    /// budget.
    #[error("collision chain not converged after {steps} steps: residual {residual:e}")]
    NoConvergence {
        /// Steps taken.
        steps: usize,
        /// Distance of the final iterate from the fixed point.
        residual: f64,
    },
}

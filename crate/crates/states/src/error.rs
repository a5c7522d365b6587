//! Error type for state construction and (de)serialization.

use quantum_core::CoreError;
use thiserror::Error;

/// Failures of state constructors, diagnostics, or JSON round-trips.
#[derive(Debug, Error)]
pub enum StateError {
    /// Underlying linear-algebra or validation failure.
    #[error(transparent)]
    Core(#[from] CoreError),

    /// JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// A basis label string did not parse for the register at hand.
    #[error("bad basis label '{label}': {reason}")]
    BadLabel { label: String, reason: &'static str },
}

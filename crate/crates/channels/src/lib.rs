//! Completely positive trace-preserving noise channels and a Lindblad
//! integrator for open-system dynamics.
//!
//! Two noise models are covered. The first is a Kraus-operator channel
//! applied independently to each local factor of a register, with the
//! generalized amplitude damping channel (thermal relaxation toward a bath
//! at mean occupation `n_th`) and the complete-dephasing channel as built-in
//! constructors. The second is a Lindblad generator integrated with a
//! fixed-step fourth-order Runge-Kutta scheme, with a named constructor for
//! the spontaneous decay of a pair of three-level V-type systems whose two
//! upper levels decay to the shared ground level at independent rates.

pub mod error;
pub mod kraus;
pub mod lindblad;

pub use error::ChannelError;
pub use kraus::{apply_all, apply_local, gadc_strength, KrausChannel};
pub use lindblad::{lindblad_integrate, LindbladGenerator, TrajectorySample};

/// Kraus channel on `f64`.
pub type KrausChannel64 = KrausChannel<f64>;
/// Lindblad generator on `f64`.
pub type LindbladGenerator64 = LindbladGenerator<f64>;

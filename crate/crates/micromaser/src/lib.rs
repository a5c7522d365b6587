//! Micromaser heat extraction from correlated atomic fuel.
//!
//! A stream of identical multi-atom clusters crosses a lossy single-mode
//! cavity, each cluster interacting briefly through the resonant exchange
//! coupling. To second order in the collision strength the cavity dynamics
//! depends on the fuel state only through a few moments of the collective
//! ladder operators ([`PumpCoefficients`]): populations and heat-exchange
//! coherences drive an effective thermal chain, while one- and two-quantum
//! coherences add displacement and squeezing. Below the maser threshold the
//! photon field relaxes to a Bose-Einstein distribution whose temperature
//! is a closed form in the coefficients ([`analytic_temperature`],
//! [`qutrit_effective_temperature`]).
//!
//! Two independent numerical routes validate the closed forms: the
//! stationary state of the reduced pump-plus-loss master equation
//! ([`effective_lindblad_steady_state`]) and an exact repeated-collision
//! chain with no short-time approximation ([`collision_simulate`]). The
//! second-order collision propagator ([`propagator_second_order`]) is a
//! diagnostic that must converge to the exact exponential at third order.

pub mod cavity;
pub mod coefficients;
pub mod collision;
pub mod error;
pub mod fock;
pub mod propagator;
pub mod steady_state;
pub mod sweeps;
pub mod temperature;

pub use cavity::{CavityConfig, TemperatureReading, FOCK_TAIL_BOUND, HBAR, KB};
pub use coefficients::{pump_coefficients_4qubit, pump_coefficients_qutrit, PumpCoefficients};
pub use collision::{
    collision_offdiagonal_injection, collision_simulate, CollisionOutcome, CollisionSample,
};
pub use error::MicromaserError;
pub use propagator::{
    exact_propagator, propagator_second_order, truncation_deviation, FockQuadratic,
    SecondOrderPropagator,
};
pub use steady_state::effective_lindblad_steady_state;
pub use sweeps::{gadc_processed_coefficients, temperature_vs_ttr};
pub use temperature::{analytic_temperature, qutrit_effective_temperature};

/// Pump coefficients on `f64`.
pub type PumpCoefficients64 = PumpCoefficients<f64>;
/// Cavity description on `f64`.
pub type CavityConfig64 = CavityConfig<f64>;
/// Temperature record on `f64`.
pub type TemperatureReading64 = TemperatureReading<f64>;
/// Collision run result on `f64`.
pub type CollisionOutcome64 = CollisionOutcome<f64>;

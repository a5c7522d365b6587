//! Cavity description and the temperature record produced by the solvers.

use quantum_core::{CoreError, Scalar};

use crate::error::MicromaserError;

/// Reduced Planck constant in J s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant in J/K.
pub const KB: f64 = 1.380_649e-23;

/// Single-mode cavity receiving the injected clusters.
///
/// All solver math runs in natural units (energies in cavity quanta, rates
/// in units of the pump rate `mu`); `omega_c` enters only through the single
/// Kelvin conversion `T_s = hbar omega_c / k_B` applied at the output
/// boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityConfig<T: Scalar> {
    /// Resonance angular frequency in rad/s.
    pub omega_c: T,
    /// Cavity loss rate over the pump rate `mu = p (g tau)^2`.
    pub kappa_over_mu: T,
    /// Mean occupation of the environment the loss channel couples to.
    pub n_th: T,
    /// Fock-space cutoff; solvers enlarge it automatically until the
    /// steady-state weight at the boundary drops below [`FOCK_TAIL_BOUND`].
    pub fock_dim: usize,
}

/// Acceptable steady-state weight at the Fock cutoff boundary.
pub const FOCK_TAIL_BOUND: f64 = 1e-9;

impl<T: Scalar> Default for CavityConfig<T> {
    /// 10 GHz cavity, matched loss (`kappa/mu = 1`), a 160 mK environment
    /// (`n_th = 0.05`), and a 40-level Fock cutoff.
    fn default() -> Self {
        CavityConfig {
            omega_c: T::lit(2.0e10) * T::PI(),
            kappa_over_mu: T::one(),
            n_th: T::lit(0.05),
            fock_dim: 40,
        }
    }
}

impl<T: Scalar> CavityConfig<T> {
    /// Temperature scale `T_s = hbar omega_c / k_B` in Kelvin; one cavity
    /// quantum expressed as a temperature.
    pub fn t_s(&self) -> T {
        self.omega_c * T::lit(HBAR / KB)
    }

    /// Check the parameter ranges shared by every solver.
    ///
    /// # Errors
    /// Rejects a non-positive frequency, negative rates or occupations, and
    /// a Fock cutoff too small to hold a thermal tail.
    pub fn validate(&self) -> Result<(), MicromaserError> {
        if !(self.omega_c > T::zero()) {
            return Err(CoreError::OutOfRange {
                param: "omega_c",
                value: self.omega_c.as_f64(),
                min: 0.0,
                max: f64::INFINITY,
            }
            .into());
        }
        if self.kappa_over_mu < T::zero() {
            return Err(CoreError::OutOfRange {
                param: "kappa_over_mu",
                value: self.kappa_over_mu.as_f64(),
                min: 0.0,
                max: f64::INFINITY,
            }
            .into());
        }
        if self.n_th < T::zero() {
            return Err(CoreError::OutOfRange {
                param: "n_th",
                value: self.n_th.as_f64(),
                min: 0.0,
                max: f64::INFINITY,
            }
            .into());
        }
        if self.fock_dim < 2 {
            return Err(CoreError::OutOfRange {
                param: "fock_dim",
                value: self.fock_dim as f64,
                min: 2.0,
                max: f64::INFINITY,
            }
            .into());
        }
        Ok(())
    }
}

/// A steady-state cavity temperature with its provenance flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperatureReading<T: Scalar> {
    /// Temperature in Kelvin.
    pub kelvin: T,
    /// The same temperature in units of `T_s = hbar omega_c / k_B`.
    pub t_s_units: T,
    /// Boltzmann factor `exp(-T_s / T)` = gain/loss rate ratio of the
    /// effective birth-death chain.
    pub boltzmann_ratio: T,
    /// Mean photon number of the matching Bose-Einstein distribution.
    pub mean_occupation: T,
    /// True when the fuel also carries coherent amplitudes, so this number
    /// describes the thermal (detailed-balance) sector of a state that is
    /// not literally Gibbsian; the residual amplitudes are carried below.
    pub effective: bool,
    /// Magnitude of the one-quantum coherence drive `|lambda|`.
    pub displacement: T,
    /// Magnitude of the two-quanta coherence drive `|xi|`.
    pub squeezing: T,
}

impl<T: Scalar> TemperatureReading<T> {
    /// Build a reading from the gain/loss ratio of the effective chain.
    ///
    /// `ratio` must lie strictly inside `(0, 1)`; `ratio -> 0` is the
    /// zero-temperature limit, handled by the callers.
    pub(crate) fn from_ratio(
        ratio: T,
        t_s: T,
        effective: bool,
        displacement: T,
        squeezing: T,
    ) -> Self {
        let kelvin = t_s / (T::one() / ratio).ln();
        TemperatureReading {
            kelvin,
            t_s_units: kelvin / t_s,
            boltzmann_ratio: ratio,
            mean_occupation: ratio / (T::one() - ratio),
            effective,
            displacement,
            squeezing,
        }
    }

    /// Reading of a measured photon distribution: inverts the
    /// Bose-Einstein mean `n_bar = ratio / (1 - ratio)`.
    pub fn from_mean_occupation(n_bar: T, t_s: T) -> Self {
        TemperatureReading::from_ratio(
            n_bar / (n_bar + T::one()),
            t_s,
            false,
            T::zero(),
            T::zero(),
        )
    }
}

//! Closed-form steady-state cavity temperatures from pump coefficients.
//!
//! Below the maser threshold the cavity photon distribution relaxes to a
//! detailed-balance chain whose gain and loss per occupied slot are set by
//! the cluster rates and the loss channel:
//! `gain = r_e + (kappa/mu) n_th`, `loss = r_g + (kappa/mu)(n_th + 1)`.
//! The stationary distribution is Bose-Einstein with Boltzmann factor
//! `gain/loss`, read out here as a temperature in Kelvin.

use quantum_core::Scalar;

use crate::cavity::{CavityConfig, TemperatureReading};
use crate::coefficients::PumpCoefficients;
use crate::error::MicromaserError;

/// Gain/loss ratio of the effective birth-death chain, with the threshold
/// check `loss > gain` (equivalently `delta + kappa/mu > 0`).
fn balance_ratio<T: Scalar>(
    coeffs: &PumpCoefficients<T>,
    cav: &CavityConfig<T>,
) -> Result<T, MicromaserError> {
    let gain = coeffs.r_e + cav.kappa_over_mu * cav.n_th;
    let loss = coeffs.r_g + cav.kappa_over_mu * (cav.n_th + T::one());
    if !(loss > gain) || !(loss > T::zero()) {
        return Err(MicromaserError::BelowThreshold {
            delta: coeffs.delta.as_f64(),
            kappa_over_mu: cav.kappa_over_mu.as_f64(),
            excess: (loss - gain).as_f64(),
        });
    }
    // Negative gain cannot arise from a valid state; clamp so nonphysical
    // hand-built coefficients still map to the zero-temperature limit.
    Ok(gain.max(T::zero()) / loss)
}

/// Steady-state cavity temperature driven by a qubit-cluster fuel, from the
/// closed form
/// `T = T_s / ln[(R + delta + 2C + 2 (kappa/mu)(n_th+1)) / (R - delta + 2C + 2 (kappa/mu) n_th)]`.
///
/// The numerator and denominator are twice the loss and gain of the
/// detailed-balance chain, so the expression coincides with the ratio form
/// used for qutrit pairs. Coherent amplitudes on the fuel do not enter the
/// balance; when present they are carried on the reading (`effective` set,
/// magnitudes in `displacement`/`squeezing`) rather than silently dropped,
/// and the number returned describes the thermal sector alone.
///
/// # Errors
/// Rejects invalid cavity parameters and fuel above the maser threshold
/// (`delta + kappa/mu <= 0`), where no thermal steady state exists.
pub fn analytic_temperature<T: Scalar>(
    coeffs: &PumpCoefficients<T>,
    cav: &CavityConfig<T>,
) -> Result<TemperatureReading<T>, MicromaserError> {
    cav.validate()?;
    let two = T::lit(2.0);
    let num = coeffs.r_total + coeffs.delta + two * coeffs.c
        + two * cav.kappa_over_mu * (cav.n_th + T::one());
    let den =
        coeffs.r_total - coeffs.delta + two * coeffs.c + two * cav.kappa_over_mu * cav.n_th;
    if !(num > den) || !(num > T::zero()) {
        return Err(MicromaserError::BelowThreshold {
            delta: coeffs.delta.as_f64(),
            kappa_over_mu: cav.kappa_over_mu.as_f64(),
            excess: ((num - den) / two).as_f64(),
        });
    }
    let tol = T::tol_iterative();
    let hec = coeffs.is_heat_exchange_only(tol);
    Ok(TemperatureReading::from_ratio(
        den.max(T::zero()) / num,
        cav.t_s(),
        !hec,
        coeffs.lambda.norm(),
        coeffs.xi.norm(),
    ))
}

/// Effective steady-state temperature for qutrit-pair fuel, from the
/// detailed-balance ratio
/// `(r_e + (kappa/mu) n_th) / (r_d + (kappa/mu)(n_th + 1)) = exp(-T_s / T)`.
///
/// Qutrit pairs generically pump with `lambda != 0`, which adds a coherent
/// displacement on top of the thermal photon distribution. The reading is
/// flagged `effective` in that case: the temperature describes the
/// incoherent sector, and the residual amplitude is reported separately in
/// `displacement`.
///
/// # Errors
/// Rejects invalid cavity parameters and fuel above threshold
/// (`r_e >= r_d + kappa/mu`).
pub fn qutrit_effective_temperature<T: Scalar>(
    coeffs: &PumpCoefficients<T>,
    cav: &CavityConfig<T>,
) -> Result<TemperatureReading<T>, MicromaserError> {
    cav.validate()?;
    let ratio = balance_ratio(coeffs, cav)?;
    let tol = T::tol_iterative();
    let hec = coeffs.is_heat_exchange_only(tol);
    Ok(TemperatureReading::from_ratio(
        ratio,
        cav.t_s(),
        !hec,
        coeffs.lambda.norm(),
        coeffs.xi.norm(),
    ))
}

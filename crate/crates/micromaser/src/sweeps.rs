//! Exposure-time sweeps: thermal channel, coefficient extraction, and
//! analytic temperature composed over a grid.

use channels::{apply_all, gadc_strength, KrausChannel};
use ergotropy::CurveOutput;
use quantum_core::{DensityMatrix, Scalar};

use crate::cavity::CavityConfig;
use crate::coefficients::{pump_coefficients_4qubit, PumpCoefficients};
use crate::error::MicromaserError;
use crate::temperature::analytic_temperature;

/// Pump coefficients of a four-qubit fuel cluster after every qubit sat in
/// the thermal environment for `t_tr` seconds: channel strength
/// `p = 1 - exp(-gamma t_tr (1 + 2 n_th)/2)` applied per qubit, then the
/// exact coefficient sums.
///
/// # Errors
/// Rejects non-four-qubit fuel and invalid channel parameters.
pub fn gadc_processed_coefficients<T: Scalar>(
    rho: &DensityMatrix<T>,
    gamma: T,
    t_tr: T,
    n_th: T,
) -> Result<PumpCoefficients<T>, MicromaserError> {
    let p = gadc_strength(gamma, t_tr, n_th);
    let channel = KrausChannel::gadc(n_th, p)?;
    let processed = apply_all(&channel, rho)?;
    pump_coefficients_4qubit(&processed)
}

/// Steady-state cavity temperature of each fuel state over a grid of
/// transfer (exposure) times.
///
/// Every grid point composes the per-qubit thermal channel at strength
/// `gadc_strength(gamma, t_tr, cav.n_th)` with coefficient extraction and
/// the closed-form temperature. Rows are `[t_tr_s, T_first, T_second, ...]`
/// in the order the family is given; a note records any state whose
/// coherent amplitudes made the reading effective rather than literal.
///
/// # Errors
/// Rejects non-four-qubit members and fuel that crosses the maser
/// threshold anywhere on the grid.
pub fn temperature_vs_ttr<T: Scalar>(
    family: &[(&str, &DensityMatrix<T>)],
    t_tr_grid: &[T],
    gamma: T,
    cav: &CavityConfig<T>,
) -> Result<CurveOutput<T>, MicromaserError> {
    cav.validate()?;
    let mut rows = Vec::with_capacity(t_tr_grid.len());
    let mut notes = Vec::new();
    let mut flagged: Vec<&str> = Vec::new();
    for &t_tr in t_tr_grid {
        let mut row = Vec::with_capacity(1 + family.len());
        row.push(t_tr);
        for &(label, rho) in family {
            let coeffs = gadc_processed_coefficients(rho, gamma, t_tr, cav.n_th)?;
            let reading = analytic_temperature(&coeffs, cav)?;
            if reading.effective && !flagged.contains(&label) {
                flagged.push(label);
            }
            row.push(reading.kelvin);
        }
        rows.push(row);
    }
    for label in flagged {
        notes.push(format!(
            "{label}: coherent amplitudes present; temperature describes the thermal sector"
        ));
    }
    Ok(CurveOutput {
        parameter: "t_tr_s".to_string(),
        columns: family
            .iter()
            .map(|(label, _)| format!("T_{label}_K"))
            .collect(),
        rows,
        notes,
    })
}

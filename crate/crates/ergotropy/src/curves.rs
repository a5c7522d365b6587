//! Ergotropy sweeps over the register families, with the published
//! piecewise-linear forms carried alongside the computed values.

use quantum_core::Scalar;
use states::{fls_state, horodecki_state, smolin_state, spin_one_pair_hamiltonian};

use crate::error::ErgotropyError;
use crate::extract::ergotropy;

/// A swept curve: one parameter column followed by named value columns,
/// plus free-form notes recording flags raised during the sweep.
#[derive(Debug, Clone)]
pub struct CurveOutput<T: Scalar> {
    /// Name of the swept parameter (first CSV column).
    pub parameter: String,
    /// Names of the value columns, in row order after the parameter.
    pub columns: Vec<String>,
    /// Rows, each `[parameter, value, value, ...]`.
    pub rows: Vec<Vec<T>>,
    /// Flags and observations attached to the sweep as a whole.
    pub notes: Vec<String>,
}

impl<T: Scalar> CurveOutput<T> {
    /// Render as CSV with a mandatory header row and 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.parameter);
        for name in &self.columns {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for row in &self.rows {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&format!("{:.11e}", v.as_f64()));
            }
            out.push('\n');
        }
        out
    }
}

/// Ergotropy of the four-qubit flat-spectrum family over a grid of mixing
/// parameters, in units of the level splitting.
///
/// Columns: `ergotropy` (computed from the spectrum) and `closed_form`
/// (`5/4 - eps` up to the boundary at one half, `1/4 + eps` beyond it; the
/// two branches agree at the boundary).
///
/// # Errors
/// Rejects grid points outside `[0, 1]`; propagates eigensolver failures.
pub fn ergotropy_curve_fls<T: Scalar>(grid: &[T]) -> Result<CurveOutput<T>, ErgotropyError> {
    let h = states::spin_z_hamiltonian(4, T::one());
    let half = T::lit(0.5);
    let mut rows = Vec::with_capacity(grid.len());
    for &eps in grid {
        let rho = fls_state(eps)?;
        let w = ergotropy(&rho, &h)?.work;
        let closed = if eps <= half {
            T::lit(1.25) - eps
        } else {
            T::lit(0.25) + eps
        };
        rows.push(vec![eps, w, closed]);
    }
    Ok(CurveOutput {
        parameter: "eps".into(),
        columns: vec!["ergotropy".into(), "closed_form".into()],
        rows,
        notes: Vec::new(),
    })
}

/// The published linear forms for the two-qutrit family, evaluated on
/// half-open branches: `0.52144 - 0.071429 a` below `a = 2.5` and
/// `0.16667 + 0.071429 a` from there on.
pub fn horodecki_printed_branch<T: Scalar>(alpha: T) -> T {
    if alpha < T::lit(2.5) {
        T::lit(0.52144) - T::lit(0.071429) * alpha
    } else {
        T::lit(0.16667) + T::lit(0.071429) * alpha
    }
}

/// Ergotropy of the two-qutrit family over a grid of asymmetry parameters,
/// in units of the level splitting, against the spin-1 pair Hamiltonian.
///
/// Columns: `ergotropy` (computed from the spectrum) and `printed_branch`
/// (the published linear forms). The published branches do not meet at the
/// boundary; the jump there and the largest deviation of each branch from
/// the computed curve are recorded in the notes rather than reconciled.
///
/// # Errors
/// Rejects grid points outside `[2, 5]`; propagates eigensolver failures.
pub fn ergotropy_curve_horodecki<T: Scalar>(
    grid: &[T],
) -> Result<CurveOutput<T>, ErgotropyError> {
    let h = spin_one_pair_hamiltonian(T::one());
    let boundary = T::lit(2.5);
    let mut rows = Vec::with_capacity(grid.len());
    let mut max_dev_low = T::zero();
    let mut max_dev_high = T::zero();
    for &alpha in grid {
        let rho = horodecki_state(alpha)?;
        let w = ergotropy(&rho, &h)?.work;
        let printed = horodecki_printed_branch(alpha);
        let dev = (w - printed).abs();
        if alpha < boundary {
            max_dev_low = max_dev_low.max(dev);
        } else {
            max_dev_high = max_dev_high.max(dev);
        }
        rows.push(vec![alpha, w, printed]);
    }
    let jump = (horodecki_printed_branch(boundary - T::lit(1e-12))
        - horodecki_printed_branch(boundary))
    .abs();
    let notes = vec![
        format!(
            "printed branches disagree at the boundary 2.5 by {:.3e}",
            jump.as_f64()
        ),
        format!(
            "max |computed - printed|: {:.3e} below the boundary, {:.3e} at or above",
            max_dev_low.as_f64(),
            max_dev_high.as_f64()
        ),
    ];
    Ok(CurveOutput {
        parameter: "alpha".into(),
        columns: vec!["ergotropy".into(), "printed_branch".into()],
        rows,
        notes,
    })
}

/// Ergotropy of the four-qubit maximally correlated mixture, a reference
/// point for both qubit families: work `5/4` with passive energy `-5/4`,
/// in units of the level splitting.
///
/// # Errors
/// Propagates eigensolver failures.
pub fn smolin_reference<T: Scalar>() -> Result<crate::ErgotropyResult<T>, ErgotropyError> {
    let h = states::spin_z_hamiltonian(4, T::one());
    ergotropy(&smolin_state(), &h)
}

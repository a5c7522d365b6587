//! Ergotropy of a single state: optimal pairing of populations with energy
//! levels, the passive remainder, and the extraction unitary.

use num_complex::Complex;
use quantum_core::{DensityMatrix, HermitianOperator, Matrix, Scalar};

use crate::error::ErgotropyError;

/// Outcome of maximum cyclic work extraction.
#[derive(Debug, Clone)]
pub struct ErgotropyResult<T: Scalar> {
    /// Extractable work: the drop from the initial to the passive energy.
    pub work: T,
    /// Initial mean energy.
    pub e_initial: T,
    /// Passive-state mean energy.
    pub e_final: T,
    /// The passive state: the input spectrum rearranged so that larger
    /// populations sit on lower energy levels.
    pub passive_state: DensityMatrix<T>,
}

fn check_same_space<T: Scalar>(
    rho: &DensityMatrix<T>,
    h: &HermitianOperator<T>,
) -> Result<(), ErgotropyError> {
    if rho.space().dims() != h.space().dims() {
        return Err(ErgotropyError::Core(
            quantum_core::CoreError::DimensionMismatch {
                context: "state and Hamiltonian",
                expected: h.space().total_dim(),
                got: rho.dim(),
            },
        ));
    }
    Ok(())
}

/// Maximum work extractable from `rho` by cyclic unitary driving under `h`.
///
/// Populations sorted in descending order are paired with energies in
/// ascending order; the paired sum is the passive energy, and the work is
/// the initial energy minus it.
///
/// # Errors
/// Rejects a space mismatch; propagates eigensolver failures; reports work
/// that is negative beyond a small roundoff window (such inputs indicate an
/// inconsistency, since the pairing is optimal).
pub fn ergotropy<T: Scalar>(
    rho: &DensityMatrix<T>,
    h: &HermitianOperator<T>,
) -> Result<ErgotropyResult<T>, ErgotropyError> {
    check_same_space(rho, h)?;
    let rho_eig = rho.eig()?;
    let h_eig = h.eig()?;
    let d = rho.dim();

    let e_initial = rho.expectation(h);
    // Populations descending against energies ascending.
    let mut e_final = T::zero();
    for j in 0..d {
        e_final += rho_eig.values[d - 1 - j] * h_eig.values[j];
    }
    let mut work = e_initial - e_final;
    // Roundoff window: two orders below the strict tolerance.
    let window = T::tol_exact() * T::lit(1e-2);
    if work < T::zero() {
        if work < -window {
            return Err(ErgotropyError::NegativeWork {
                work: work.as_f64(),
            });
        }
        work = T::zero();
    }

    // Passive state: descending populations on the ascending energy basis.
    let mut passive = Matrix::zeros(d, d);
    for j in 0..d {
        let p = rho_eig.values[d - 1 - j];
        for r in 0..d {
            for c in 0..d {
                passive[(r, c)] += h_eig.vectors[(r, j)]
                        * h_eig.vectors[(c, j)].conj()
                        * Complex::new(p, T::zero());
            }
        }
    }
    let passive_state = DensityMatrix::with_tolerance(rho.space().clone(), passive, T::lit(10.0))?;

    Ok(ErgotropyResult {
        work,
        e_initial,
        e_final,
        passive_state,
    })
}

/// The unitary realizing the optimal extraction: it maps the eigenvector
/// with the j-th largest population onto the j-th lowest energy eigenvector,
/// so conjugating the state with it yields the passive state.
///
/// Within degenerate blocks the choice is not unique; any returned unitary
/// satisfies the conjugation property.
///
/// # Errors
/// Rejects a space mismatch; propagates eigensolver failures.
pub fn optimal_unitary<T: Scalar>(
    rho: &DensityMatrix<T>,
    h: &HermitianOperator<T>,
) -> Result<Matrix<T>, ErgotropyError> {
    check_same_space(rho, h)?;
    let rho_eig = rho.eig()?.reversed();
    let h_eig = h.eig()?;
    // U = sum_j |energy_j><population_j| = V_h V_rho^dag with matching order.
    Ok(&h_eig.vectors * &rho_eig.vectors.dagger())
}

//! Two-qutrit states and level schemes.
//!
//! Levels are ordered e, u, g (indices 0, 1, 2). Two level schemes coexist:
//! a spin-1 ladder (energies +w/2, 0, -w/2) under which the work-extraction
//! closed forms hold, and a V-type scheme (two degenerate excited levels
//! e, u at +w/2 over a ground level g at -w/2) that fixes the two
//! independent decay channels e->g and u->g of the damping dynamics.

use num_complex::Complex;
use quantum_core::{DensityMatrix, HermitianOperator, HilbertSpace, Matrix, Scalar};

use crate::basis::permute_local_levels;
use crate::error::StateError;

/// Index of the qutrit level e.
pub const LEVEL_E: usize = 0;
/// Index of the qutrit level u.
pub const LEVEL_U: usize = 1;
/// Index of the qutrit level g.
pub const LEVEL_G: usize = 2;

/// Basis index of a two-qutrit label, e.g. "ug" -> 1*3 + 2 = 5.
///
/// # Errors
/// Rejects labels that are not two characters from {e, u, g}.
pub fn qutrit_index(label: &str) -> Result<usize, StateError> {
    let level = |ch: char| match ch {
        'e' => Some(LEVEL_E),
        'u' => Some(LEVEL_U),
        'g' => Some(LEVEL_G),
        _ => None,
    };
    let bad = || StateError::BadLabel {
        label: label.to_string(),
        reason: "two-qutrit labels are two characters from e/u/g",
    };
    let mut chars = label.chars();
    let a = chars.next().and_then(level).ok_or_else(bad)?;
    let b = chars.next().and_then(level).ok_or_else(bad)?;
    if chars.next().is_some() {
        return Err(bad());
    }
    Ok(3 * a + b)
}

/// V-type qutrit level scheme: E_e = E_u = +omega/2, E_g = -omega/2.
#[derive(Debug, Clone, Copy)]
pub struct QutritLevelScheme<T: Scalar> {
    omega: T,
}

impl<T: Scalar> QutritLevelScheme<T> {
    pub fn new(omega: T) -> Self {
        Self { omega }
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    /// Energy of a level index (e and u are degenerate).
    pub fn energy(&self, level: usize) -> T {
        let half = self.omega * T::lit(0.5);
        if level == LEVEL_G {
            -half
        } else {
            half
        }
    }

    /// Single-qutrit Hamiltonian diag(+w/2, +w/2, -w/2).
    pub fn single_hamiltonian(&self) -> HermitianOperator<T> {
        let diag = [self.energy(0), self.energy(1), self.energy(2)];
        HermitianOperator::from_real_diag(HilbertSpace::qutrits(1), &diag)
            .expect("diagonal operator is Hermitian")
    }

    /// Two-qutrit Hamiltonian `H (x) I + I (x) H`.
    pub fn pair_hamiltonian(&self) -> HermitianOperator<T> {
        let e = [self.energy(0), self.energy(1), self.energy(2)];
        let diag: Vec<T> = (0..9).map(|i| e[i / 3] + e[i % 3]).collect();
        HermitianOperator::from_real_diag(HilbertSpace::qutrits(2), &diag)
            .expect("diagonal operator is Hermitian")
    }
}

/// Two-qutrit spin-1 Hamiltonian `(omega/2)(Lambda (x) I + I (x) Lambda)`
/// with `Lambda = diag(1, 0, -1)` in the (e, u, g) ordering. Spectrum
/// {-w, -w/2, -w/2, 0, 0, 0, +w/2, +w/2, +w}.
pub fn spin_one_pair_hamiltonian<T: Scalar>(omega: T) -> HermitianOperator<T> {
    let lam = [T::one(), T::zero(), -T::one()];
    let half = omega * T::lit(0.5);
    let diag: Vec<T> = (0..9).map(|i| half * (lam[i / 3] + lam[i % 3])).collect();
    HermitianOperator::from_real_diag(HilbertSpace::qutrits(2), &diag)
        .expect("diagonal operator is Hermitian")
}

/// Two-qutrit Horodecki state `rho_alpha`, alpha in [2, 5]: separable on
/// [2, 3], bound entangled on (3, 4], free entangled on (4, 5]. In the
/// basis (ee, eu, eg, ue, uu, ug, ge, gu, gg) the diagonal is
/// (2, a, 5-a, 5-a, 2, a, a, 5-a, 2)/21 and the symmetric corner entries
/// 2/21 couple ee, uu, gg.
///
/// # Errors
/// Rejects alpha outside [2, 5].
pub fn horodecki_state<T: Scalar>(alpha: T) -> Result<DensityMatrix<T>, StateError> {
    if !(T::lit(2.0)..=T::lit(5.0)).contains(&alpha) {
        return Err(quantum_core::CoreError::OutOfRange {
            param: "alpha",
            value: alpha.as_f64(),
            min: 2.0,
            max: 5.0,
        }
        .into());
    }
    let w = T::one() / T::lit(21.0);
    let a = alpha * w;
    let b = (T::lit(5.0) - alpha) * w;
    let two = T::lit(2.0) * w;
    let mut m = Matrix::zeros(9, 9);
    for (i, &v) in [two, a, b, b, two, a, a, b, two].iter().enumerate() {
        m[(i, i)] = Complex::new(v, T::zero());
    }
    for &(i, j) in &[(0usize, 4usize), (0, 8), (4, 8)] {
        m[(i, j)] = Complex::new(two, T::zero());
        m[(j, i)] = Complex::new(two, T::zero());
    }
    Ok(DensityMatrix::new(HilbertSpace::qutrits(2), m).expect("fixed entries form a state"))
}

/// Initial state of the distillability-sudden-death dynamics: the Horodecki
/// state with the u and g levels of the first qutrit exchanged. The exchange
/// aligns the state's coherence structure with the V-type decay channels
/// (both excited levels feeding the ground level); without it the dynamics
/// freezes the sign of the partially transposed block that carries the
/// negativity and no sudden death occurs at any damping strength.
///
/// # Errors
/// Rejects alpha outside [2, 5].
pub fn dsd_initial_state<T: Scalar>(alpha: T) -> Result<DensityMatrix<T>, StateError> {
    let rho = horodecki_state(alpha)?;
    let swap_ug = [LEVEL_E, LEVEL_G, LEVEL_U];
    let keep = [LEVEL_E, LEVEL_U, LEVEL_G];
    Ok(permute_local_levels(&rho, &[&swap_ug, &keep])?)
}

//! Computational/energy basis bookkeeping for qubit registers, the
//! collective spin Hamiltonian, and generic register-level utilities.

use num_complex::Complex;
use quantum_core::{
    permutation_matrix, CoreError, DensityMatrix, HermitianOperator, HilbertSpace, Matrix, Scalar,
};

use crate::error::StateError;

/// Correspondence between computational indices and energy labels of an
/// n-qubit register, with the excited state on `|0>`: a label string like
/// "eegg" maps to the binary index with e -> 0 and g -> 1.
#[derive(Debug, Clone)]
pub struct BasisMap {
    n_qubits: usize,
}

impl BasisMap {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// Computational index of a label string, e.g. "eegg" -> 0b0011 = 3.
    ///
    /// # Errors
    /// Rejects labels of the wrong length or with characters besides e/g.
    pub fn index_of(&self, label: &str) -> Result<usize, StateError> {
        if label.len() != self.n_qubits {
            return Err(StateError::BadLabel {
                label: label.to_string(),
                reason: "length differs from the register size",
            });
        }
        let mut idx = 0usize;
        for ch in label.chars() {
            idx <<= 1;
            match ch {
                'e' => {}
                'g' => idx |= 1,
                _ => {
                    return Err(StateError::BadLabel {
                        label: label.to_string(),
                        reason: "qubit levels are e and g",
                    })
                }
            }
        }
        Ok(idx)
    }

    /// Label string of a computational index.
    ///
    /// # Errors
    /// Rejects out-of-range indices.
    pub fn label_of(&self, index: usize) -> Result<String, StateError> {
        if index >= self.dim() {
            return Err(StateError::BadLabel {
                label: index.to_string(),
                reason: "index exceeds the register dimension",
            });
        }
        Ok((0..self.n_qubits)
            .rev()
            .map(|bit| if index >> bit & 1 == 0 { 'e' } else { 'g' })
            .collect())
    }

    /// Energy of a basis state in units of the qubit frequency:
    /// each e contributes +1/2 and each g contributes -1/2.
    pub fn energy(&self, index: usize) -> f64 {
        let ground = index.count_ones() as f64;
        (self.n_qubits as f64 - 2.0 * ground) / 2.0
    }

    /// Computational indices grouped by energy, highest manifold first;
    /// for four qubits the group sizes are 1, 4, 6, 4, 1.
    pub fn energy_groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.n_qubits + 1];
        for idx in 0..self.dim() {
            groups[idx.count_ones() as usize].push(idx);
        }
        groups
    }
}

/// Collective spin Hamiltonian of an n-qubit register,
/// `H = (omega/2) sum_i sigma_z^(i)` with `sigma_z |e> = +|e>`.
pub fn spin_z_hamiltonian<T: Scalar>(n_qubits: usize, omega: T) -> HermitianOperator<T> {
    let map = BasisMap::new(n_qubits);
    let diag: Vec<T> = (0..map.dim()).map(|i| omega * T::lit(map.energy(i))).collect();
    HermitianOperator::from_real_diag(HilbertSpace::qubits(n_qubits), &diag)
        .expect("diagonal operator is Hermitian")
}

/// Product of n single-qubit `|+>` states: every matrix entry equals `2^-n`.
pub fn plus_product<T: Scalar>(n_qubits: usize) -> DensityMatrix<T> {
    let dim = 1usize << n_qubits;
    let val = Complex::new(T::lit(1.0) / T::lit(dim as f64), T::zero());
    let m = Matrix::from_fn(dim, dim, |_, _| val);
    DensityMatrix::new_unchecked(HilbertSpace::qubits(n_qubits), m)
}

/// Maximally mixed state `I/d` on the given space.
pub fn maximally_mixed<T: Scalar>(space: &HilbertSpace) -> DensityMatrix<T> {
    let d = space.total_dim();
    let m = Matrix::identity(d).scale_re(T::one() / T::lit(d as f64));
    DensityMatrix::new_unchecked(space.clone(), m)
}

/// Remove every coherence: keep only the computational-basis diagonal.
pub fn dephase<T: Scalar>(rho: &DensityMatrix<T>) -> DensityMatrix<T> {
    let d = rho.dim();
    let m = rho.matrix();
    let out = Matrix::from_fn(d, d, |r, c| {
        if r == c {
            Complex::new(m[(r, r)].re, T::zero())
        } else {
            Complex::new(T::zero(), T::zero())
        }
    });
    DensityMatrix::new_unchecked(rho.space().clone(), out)
}

/// Conjugate a state by a product of local level permutations, one per
/// factor: `P rho P^dag` with `P = kron_k P(perms[k])`.
///
/// # Errors
/// Rejects permutation lists that do not match the factor structure.
pub fn permute_local_levels<T: Scalar>(
    rho: &DensityMatrix<T>,
    perms: &[&[usize]],
) -> Result<DensityMatrix<T>, CoreError> {
    let space = rho.space();
    if perms.len() != space.n_factors() {
        return Err(CoreError::DimensionMismatch {
            context: "permute_local_levels",
            expected: space.n_factors(),
            got: perms.len(),
        });
    }
    let mut p: Option<Matrix<T>> = None;
    for (k, perm) in perms.iter().enumerate() {
        if perm.len() != space.dims()[k] {
            return Err(CoreError::DimensionMismatch {
                context: "permute_local_levels factor",
                expected: space.dims()[k],
                got: perm.len(),
            });
        }
        let local = permutation_matrix::<T>(perm)?;
        p = Some(match p {
            None => local,
            Some(acc) => acc.kron(&local),
        });
    }
    let p = p.ok_or(CoreError::BadSpace {
        reason: "no factors",
    })?;
    let out = &(&p * rho.matrix()) * &p.dagger();
    // Conjugation by a permutation only relocates entries.
    Ok(DensityMatrix::new_unchecked(space.clone(), out))
}

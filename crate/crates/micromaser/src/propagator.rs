//! Short-time collision propagator for a four-qubit cluster, expanded to
//! second order in the coupling.
//!
//! One collision evolves cluster and cavity under the resonant exchange
//! Hamiltonian `H = g (a' J- + a J+)` for a time `tau`. For `g tau << 1`
//! the propagator truncates to
//! `U = 1 - i g tau H/g - (g tau)^2 / 2 (H/g)^2`, whose cluster-basis
//! entries are quadratic polynomials in the mode operators: the diagonal
//! and exchange entries carry `a'a` terms, the one-flip entries carry
//! single `a'`/`a` factors, and the two-flip entries carry `a'^2`/`a^2`.
//! This truncation is a validator: the production collision chain uses the
//! exact exponential, and the truncated form must approach it at third
//! order in `g tau`.

use num_complex::Complex;
use quantum_core::{
    matrix_exp_unitary, CoreError, HermitianOperator, HilbertSpace, Matrix, Scalar, C,
};

use crate::error::MicromaserError;

/// Cluster dimension: four qubits.
const CLUSTER_DIM: usize = 16;

/// A quadratic polynomial in the cavity mode operators:
/// `unit + number a'a + raise a' + lower a + raise2 a'^2 + lower2 a^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockQuadratic<T: Scalar> {
    /// Coefficient of the identity.
    pub unit: C<T>,
    /// Coefficient of the number operator `a'a`.
    pub number: C<T>,
    /// Coefficient of `a'`.
    pub raise: C<T>,
    /// Coefficient of `a`.
    pub lower: C<T>,
    /// Coefficient of `a'^2`.
    pub raise2: C<T>,
    /// Coefficient of `a^2`.
    pub lower2: C<T>,
}

impl<T: Scalar> FockQuadratic<T> {
    fn zero() -> Self {
        let z = Complex::new(T::zero(), T::zero());
        FockQuadratic {
            unit: z,
            number: z,
            raise: z,
            lower: z,
            raise2: z,
            lower2: z,
        }
    }

    /// Realize the polynomial on a Fock space truncated at `dim` levels.
    pub fn realize(&self, dim: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(dim, dim);
        for n in 0..dim {
            let nr = T::from_usize(n).expect("small integer");
            m[(n, n)] = self.unit + self.number.scale(nr);
            if n + 1 < dim {
                let amp = (nr + T::one()).sqrt();
                m[(n + 1, n)] += self.raise.scale(amp);
                m[(n, n + 1)] += self.lower.scale(amp);
            }
            if n + 2 < dim {
                let amp = ((nr + T::one()) * (nr + T::lit(2.0))).sqrt();
                m[(n + 2, n)] += self.raise2.scale(amp);
                m[(n, n + 2)] += self.lower2.scale(amp);
            }
        }
        m
    }
}

/// Collective lowering matrix on the cluster: one excited qubit dropped to
/// ground (bit 0 -> 1), unit amplitude per qubit.
fn collective_lowering() -> Vec<Vec<u32>> {
    let mut j = vec![vec![0u32; CLUSTER_DIM]; CLUSTER_DIM];
    for s in 0..CLUSTER_DIM {
        for b in 0..4 {
            if s & (1 << b) == 0 {
                j[s | (1 << b)][s] += 1;
            }
        }
    }
    j
}

fn mat_mul_u32(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = a.len();
    let mut out = vec![vec![0u32; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (k, &aik) in a[i].iter().enumerate() {
            if aik == 0 {
                continue;
            }
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += aik * b[k][j];
            }
        }
    }
    out
}

fn transpose_u32(a: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = a.len();
    let mut out = vec![vec![0u32; n]; n];
    for (i, row) in a.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            out[j][i] = v;
        }
    }
    out
}

/// The second-order propagator: a 16 x 16 matrix of mode-operator
/// polynomials indexed `(to, from)` in the cluster basis.
#[derive(Debug, Clone)]
pub struct SecondOrderPropagator<T: Scalar> {
    g_tau: T,
    entries: Vec<FockQuadratic<T>>,
}

impl<T: Scalar> SecondOrderPropagator<T> {
    /// Dimensionless collision strength this propagator was built at.
    pub fn g_tau(&self) -> T {
        self.g_tau
    }

    /// Polynomial entry mapping cluster state `from` to `to`.
    pub fn entry(&self, to: usize, from: usize) -> &FockQuadratic<T> {
        &self.entries[to * CLUSTER_DIM + from]
    }

    /// Realize the full propagator on `cluster (x) cavity`, cavity truncated
    /// at `fock_dim` levels; index = `cluster_state * fock_dim + photon`.
    pub fn realize(&self, fock_dim: usize) -> Matrix<T> {
        let dim = CLUSTER_DIM * fock_dim;
        let mut m = Matrix::zeros(dim, dim);
        for to in 0..CLUSTER_DIM {
            for from in 0..CLUSTER_DIM {
                let block = self.entry(to, from).realize(fock_dim);
                for r in 0..fock_dim {
                    for c in 0..fock_dim {
                        let v = block[(r, c)];
                        if v.norm_sqr() > T::zero() {
                            m[(to * fock_dim + r, from * fock_dim + c)] = v;
                        }
                    }
                }
            }
        }
        m
    }
}

/// Build the second-order collision propagator at strength `g_tau`.
///
/// Expanding `exp(-i g tau (a'J- + a J+))` and normal-ordering `a a'` gives,
/// entrywise in the cluster basis,
/// `U[t,s] = d_ts - (g tau)^2/2 (J+J-)[t,s]`
/// `       - (g tau)^2/2 ((J-J+) + (J+J-))[t,s] a'a`
/// `       - i g tau (J-[t,s] a' + J+[t,s] a)`
/// `       - (g tau)^2/2 ((J-^2)[t,s] a'^2 + (J+^2)[t,s] a^2)`.
///
/// # Errors
/// Rejects `g_tau` outside `[0, 0.1]`: the truncation is only meaningful in
/// the short-collision regime.
pub fn propagator_second_order<T: Scalar>(
    g_tau: T,
) -> Result<SecondOrderPropagator<T>, MicromaserError> {
    if !(T::zero()..=T::lit(0.1)).contains(&g_tau) {
        return Err(CoreError::OutOfRange {
            param: "g_tau",
            value: g_tau.as_f64(),
            min: 0.0,
            max: 0.1,
        }
        .into());
    }
    let jm = collective_lowering();
    let jp = transpose_u32(&jm);
    let jm2 = mat_mul_u32(&jm, &jm);
    let jp2 = mat_mul_u32(&jp, &jp);
    let jpjm = mat_mul_u32(&jp, &jm);
    let jmjp = mat_mul_u32(&jm, &jp);
    let half_sq = T::lit(0.5) * g_tau * g_tau;
    let lift = |v: u32| T::from_u32(v).expect("small integer");
    let mut entries = vec![FockQuadratic::zero(); CLUSTER_DIM * CLUSTER_DIM];
    for t in 0..CLUSTER_DIM {
        for s in 0..CLUSTER_DIM {
            let e = &mut entries[t * CLUSTER_DIM + s];
            let unit_re =
                if t == s { T::one() } else { T::zero() } - half_sq * lift(jpjm[t][s]);
            e.unit = Complex::new(unit_re, T::zero());
            e.number = Complex::new(-half_sq * lift(jmjp[t][s] + jpjm[t][s]), T::zero());
            e.raise = Complex::new(T::zero(), -g_tau * lift(jm[t][s]));
            e.lower = Complex::new(T::zero(), -g_tau * lift(jp[t][s]));
            e.raise2 = Complex::new(-half_sq * lift(jm2[t][s]), T::zero());
            e.lower2 = Complex::new(-half_sq * lift(jp2[t][s]), T::zero());
        }
    }
    Ok(SecondOrderPropagator { g_tau, entries })
}

/// Exact collision propagator `exp(-i g tau (a'J- + a J+))` on
/// `cluster (x) cavity`, with the cavity truncated at `fock_dim` levels;
/// index = `cluster_state * fock_dim + photon`.
///
/// The exchange Hamiltonian conserves total excitation (cluster quanta plus
/// photons), so the exponential is assembled sector by sector: each sector
/// holds at most sixteen basis states and is exponentiated exactly.
///
/// # Errors
/// Propagates eigensolver failures.
pub fn exact_propagator<T: Scalar>(
    g_tau: T,
    fock_dim: usize,
) -> Result<Matrix<T>, MicromaserError> {
    let jm = collective_lowering();
    let grade = |s: usize| 4 - s.count_ones() as usize;
    let dim = CLUSTER_DIM * fock_dim;
    let mut u = Matrix::zeros(dim, dim);
    for total in 0..=fock_dim + 3 {
        let members: Vec<(usize, usize)> = (0..CLUSTER_DIM)
            .filter(|&s| total >= grade(s) && total - grade(s) < fock_dim)
            .map(|s| (s, total - grade(s)))
            .collect();
        if members.is_empty() {
            continue;
        }
        let k = members.len();
        if k == 1 {
            // Singleton sector: no exchange partner, the phase is trivial.
            let (s, ns) = members[0];
            let idx = s * fock_dim + ns;
            u[(idx, idx)] = Complex::new(T::one(), T::zero());
            continue;
        }
        let mut h = Matrix::zeros(k, k);
        for (i, &(t, nt)) in members.iter().enumerate() {
            for (j, &(s, ns)) in members.iter().enumerate() {
                if nt == ns + 1 && jm[t][s] > 0 {
                    let v = T::from_u32(jm[t][s]).expect("small integer")
                        * (T::from_usize(ns).expect("small integer") + T::one()).sqrt();
                    h[(i, j)] = Complex::new(v, T::zero());
                    h[(j, i)] = Complex::new(v, T::zero());
                }
            }
        }
        let space = HilbertSpace::single(k, "sector")?;
        let block = matrix_exp_unitary(&HermitianOperator::new(space, h)?, g_tau)?;
        for (i, &(t, nt)) in members.iter().enumerate() {
            for (j, &(s, ns)) in members.iter().enumerate() {
                u[(t * fock_dim + nt, s * fock_dim + ns)] = block[(i, j)];
            }
        }
    }
    Ok(u)
}

/// Largest entry deviation between the exact collision propagator and its
/// second-order truncation, both realized on the same truncated space.
///
/// # Errors
/// As [`propagator_second_order`] and [`exact_propagator`].
pub fn truncation_deviation<T: Scalar>(
    g_tau: T,
    fock_dim: usize,
) -> Result<T, MicromaserError> {
    let second = propagator_second_order(g_tau)?.realize(fock_dim);
    let exact = exact_propagator(g_tau, fock_dim)?;
    Ok(exact.max_abs_diff(&second))
}

//! Stationary cavity state of the coarse-grained pump-plus-loss generator.
//!
//! For heat-exchange-only fuel the reduced master equation
//! `d rho/dt = (mu r_e + kappa n_th)/2 L_up[rho] + (mu r_g + kappa (n_th+1))/2 L_down[rho]`
//! (with `L_up = 2 a'rho a - a a'rho - rho a a'` and its mirror) closes on
//! the photon-number populations as a birth-death chain with gain
//! `G = r_e + (kappa/mu) n_th` and loss `L = r_g + (kappa/mu)(n_th+1)` per
//! slot. This module solves the chain's null space as a dense linear system
//! and validates the result against the Gibbs form it must take.

use quantum_core::{DensityMatrix, Scalar};

use crate::cavity::{CavityConfig, FOCK_TAIL_BOUND};
use crate::coefficients::PumpCoefficients;
use crate::error::MicromaserError;
use crate::fock;

/// Solve `a x = b` in place by Gaussian elimination with partial pivoting;
/// `a` is row-major `n x n`. Returns the solution in `b`.
pub(crate) fn linear_solve_real<T: Scalar>(a: &mut [T], b: &mut [T], n: usize) {
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if a[row * n + col].abs() > a[pivot * n + col].abs() {
                pivot = row;
            }
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            b.swap(col, pivot);
        }
        let diag = a[col * n + col];
        for row in col + 1..n {
            let factor = a[row * n + col] / diag;
            if factor == T::zero() {
                continue;
            }
            for k in col..n {
                let upper = a[col * n + k];
                a[row * n + k] -= factor * upper;
            }
            b[row] -= factor * b[col];
        }
    }
    for col in (0..n).rev() {
        let mut s = b[col];
        for k in col + 1..n {
            s -= a[col * n + k] * b[k];
        }
        b[col] = s / a[col * n + col];
    }
}

/// Stationary populations of the birth-death chain with per-slot gain `g`
/// and loss `l` on `dim` levels: the null vector of the generator with a
/// normalization row appended in place of the last balance equation.
pub(crate) fn birth_death_fixed_point<T: Scalar>(g: T, l: T, dim: usize) -> Vec<T> {
    let n = dim;
    let mut a = vec![T::zero(); n * n];
    for k in 0..n {
        let kr = T::from_usize(k).expect("small integer");
        if k + 1 < n {
            let up = g * (kr + T::one());
            a[(k + 1) * n + k] += up;
            a[k * n + k] -= up;
        }
        if k > 0 {
            let down = l * kr;
            a[(k - 1) * n + k] += down;
            a[k * n + k] -= down;
        }
    }
    let mut b = vec![T::zero(); n];
    for k in 0..n {
        a[(n - 1) * n + k] = T::one();
    }
    b[n - 1] = T::one();
    linear_solve_real(&mut a, &mut b, n);
    // Clamp solver noise; the chain is irreducible so the weights are
    // strictly positive in exact arithmetic.
    for p in &mut b {
        if *p < T::zero() {
            *p = T::zero();
        }
    }
    let total: T = b.iter().fold(T::zero(), |acc, &p| acc + p);
    for p in &mut b {
        *p = *p / total;
    }
    b
}

/// Stationary cavity state of the effective pump-plus-loss master equation,
/// for heat-exchange-only fuel.
///
/// The chain null space is solved numerically on the truncated Fock space;
/// the cutoff starts at `cav.fock_dim` and doubles (up to four times) until
/// the boundary weight drops below `1e-9`. The returned diagonal state is
/// validated to be Gibbsian: every occupied ratio `p_{n+1}/p_n` must match
/// the gain/loss ratio to ten digits.
///
/// # Errors
/// Rejects fuel with coherent amplitudes (`lambda` or `xi` nonzero), fuel
/// above the maser threshold, a cutoff that cannot hold the steady state,
/// and invalid cavity parameters.
pub fn effective_lindblad_steady_state<T: Scalar>(
    coeffs: &PumpCoefficients<T>,
    cav: &CavityConfig<T>,
) -> Result<DensityMatrix<T>, MicromaserError> {
    cav.validate()?;
    if !coeffs.is_heat_exchange_only(T::tol_iterative()) {
        return Err(MicromaserError::NotHeatExchange {
            lambda_abs: coeffs.lambda.norm().as_f64(),
            xi_abs: coeffs.xi.norm().as_f64(),
        });
    }
    let gain = (coeffs.r_e + cav.kappa_over_mu * cav.n_th).max(T::zero());
    let loss = coeffs.r_g + cav.kappa_over_mu * (cav.n_th + T::one());
    if !(loss > gain) {
        return Err(MicromaserError::BelowThreshold {
            delta: coeffs.delta.as_f64(),
            kappa_over_mu: cav.kappa_over_mu.as_f64(),
            excess: (loss - gain).as_f64(),
        });
    }
    let tail_bound = T::lit(FOCK_TAIL_BOUND);
    let mut dim = cav.fock_dim;
    for _ in 0..5 {
        let p = birth_death_fixed_point(gain, loss, dim);
        if p[dim - 1] < tail_bound {
            let ratio = gain / loss;
            let floor = T::lit(1e-12);
            for n in 0..dim - 1 {
                if p[n] > floor && (p[n + 1] / p[n] - ratio).abs() > T::lit(1e-10) {
                    return Err(MicromaserError::NoConvergence {
                        steps: dim,
                        residual: (p[n + 1] / p[n] - ratio).abs().as_f64(),
                    });
                }
            }
            return Ok(fock::diagonal_state(&p)?);
        }
        dim *= 2;
    }
    let p = birth_death_fixed_point(gain, loss, dim / 2);
    Err(MicromaserError::TruncationInsufficient {
        fock_dim: dim / 2,
        tail: p[dim / 2 - 1].as_f64(),
        want: FOCK_TAIL_BOUND,
    })
}

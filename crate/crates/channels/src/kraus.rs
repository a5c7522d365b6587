//! Kraus-operator channels applied to single factors of a register.
//!
//! Local basis convention: the excited level comes first, so a qubit is
//! ordered (e, g) and index 1 is the ground level.

use num_complex::Complex;
use quantum_core::{embed_local, DensityMatrix, Matrix, Scalar};

use crate::error::ChannelError;

/// A quantum channel given by a finite set of Kraus operators acting on one
/// local factor, `rho -> sum_k K_k rho K_k^dag`.
#[derive(Debug, Clone)]
pub struct KrausChannel<T: Scalar> {
    ops: Vec<Matrix<T>>,
    dim: usize,
}

impl<T: Scalar> KrausChannel<T> {
    /// Validated construction from an explicit operator list.
    ///
    /// # Errors
    /// Rejects an empty list, non-square or mismatched operators, and sets
    /// violating the completeness relation `sum_k K_k^dag K_k = I`.
    pub fn new(ops: Vec<Matrix<T>>) -> Result<Self, ChannelError> {
        let dim = match ops.first() {
            Some(k) => k.dim()?,
            None => {
                return Err(ChannelError::Core(quantum_core::CoreError::BadFactor {
                    what: "Kraus operator list",
                    index: 0,
                    count: 0,
                }))
            }
        };
        let mut sum = Matrix::zeros(dim, dim);
        for k in &ops {
            if k.dim()? != dim {
                return Err(ChannelError::Core(
                    quantum_core::CoreError::DimensionMismatch {
                        context: "Kraus operator",
                        expected: dim,
                        got: k.dim()?,
                    },
                ));
            }
            sum = &sum + &(&k.dagger() * k);
        }
        let dev = sum.max_abs_diff(&Matrix::identity(dim));
        if dev > T::tol_exact() {
            return Err(ChannelError::IncompleteKraus {
                max_dev: dev.as_f64(),
            });
        }
        Ok(Self { ops, dim })
    }

    /// The identity channel on a `dim`-level system.
    pub fn identity(dim: usize) -> Self {
        Self {
            ops: vec![Matrix::identity(dim)],
            dim,
        }
    }

    /// The complete-dephasing channel on a `dim`-level system: one projector
    /// per basis level, removing every off-diagonal element.
    pub fn dephasing(dim: usize) -> Self {
        let ops = (0..dim)
            .map(|i| {
                let mut k = Matrix::zeros(dim, dim);
                k[(i, i)] = Complex::new(T::one(), T::zero());
                k
            })
            .collect();
        Self { ops, dim }
    }

    /// The generalized amplitude damping channel on a qubit: relaxation
    /// toward a thermal environment at mean occupation `n_th` with strength
    /// `p`. Mixes a damping branch of weight `(n_th + 1)/(2 n_th + 1)` with
    /// an amplifying branch of weight `n_th/(2 n_th + 1)`.
    ///
    /// # Errors
    /// Rejects `n_th < 0` and `p` outside `[0, 1]`.
    pub fn gadc(n_th: T, p: T) -> Result<Self, ChannelError> {
        if n_th < T::zero() {
            return Err(ChannelError::Core(quantum_core::CoreError::OutOfRange {
                param: "n_th",
                value: n_th.as_f64(),
                min: 0.0,
                max: f64::INFINITY,
            }));
        }
        if !(T::zero()..=T::one()).contains(&p) {
            return Err(ChannelError::Core(quantum_core::CoreError::OutOfRange {
                param: "p",
                value: p.as_f64(),
                min: 0.0,
                max: 1.0,
            }));
        }
        let two = T::one() + T::one();
        let damp = (n_th + T::one()) / (two * n_th + T::one());
        let amp = n_th / (two * n_th + T::one());
        let keep = (T::one() - p).sqrt();
        let re = |x: T| Complex::new(x, T::zero());

        // Damping branch: decay survives on |g>, attenuates |e>.
        let mut m0 = Matrix::zeros(2, 2);
        m0[(0, 0)] = re(damp.sqrt() * keep);
        m0[(1, 1)] = re(damp.sqrt());
        // Amplifying branch: the mirror image.
        let mut m1 = Matrix::zeros(2, 2);
        m1[(0, 0)] = re(amp.sqrt());
        m1[(1, 1)] = re(amp.sqrt() * keep);
        // Quantum jumps downward and upward.
        let mut m2 = Matrix::zeros(2, 2);
        m2[(1, 0)] = re((damp * p).sqrt());
        let mut m3 = Matrix::zeros(2, 2);
        m3[(0, 1)] = re((amp * p).sqrt());

        Self::new(vec![m0, m1, m2, m3])
    }

    /// Dimension of the local factor the channel acts on.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The Kraus operators.
    pub fn ops(&self) -> &[Matrix<T>] {
        &self.ops
    }

    /// Apply the channel to a raw matrix on the local space.
    ///
    /// # Errors
    /// Rejects a dimension mismatch.
    pub fn apply(&self, m: &Matrix<T>) -> Result<Matrix<T>, ChannelError> {
        if m.dim()? != self.dim {
            return Err(ChannelError::Core(
                quantum_core::CoreError::DimensionMismatch {
                    context: "channel input",
                    expected: self.dim,
                    got: m.dim()?,
                },
            ));
        }
        let mut out = Matrix::zeros(self.dim, self.dim);
        for k in &self.ops {
            out = &out + &(&(k * m) * &k.dagger());
        }
        Ok(out)
    }
}

/// Channel strength accumulated over an exposure time: for damping rate
/// `gamma`, exposure `t_tr`, and bath occupation `n_th`,
/// `p = 1 - exp(-gamma t_tr (1 + 2 n_th)/2)`.
///
/// Non-negative inputs give `p` in `[0, 1]`.
pub fn gadc_strength<T: Scalar>(gamma: T, t_tr: T, n_th: T) -> T {
    let two = T::one() + T::one();
    T::one() - (-gamma * t_tr * (T::one() + two * n_th) / two).exp()
}

/// Apply a local channel to one factor of a register state.
///
/// # Errors
/// Rejects a factor index out of range or a channel/factor dimension
/// mismatch; propagates output-state validation failures.
pub fn apply_local<T: Scalar>(
    channel: &KrausChannel<T>,
    rho: &DensityMatrix<T>,
    factor: usize,
) -> Result<DensityMatrix<T>, ChannelError> {
    let space = rho.space().clone();
    let mut out = Matrix::zeros(space.total_dim(), space.total_dim());
    for k in &channel.ops {
        let big = embed_local(k, &space, factor)?;
        out = &out + &(&(&big * rho.matrix()) * &big.dagger());
    }
    Ok(DensityMatrix::new(space, out)?)
}

/// Apply the same local channel to every factor of a register state in turn.
///
/// # Errors
/// As [`apply_local`], for each factor.
pub fn apply_all<T: Scalar>(
    channel: &KrausChannel<T>,
    rho: &DensityMatrix<T>,
) -> Result<DensityMatrix<T>, ChannelError> {
    let mut out = rho.clone();
    for factor in 0..rho.space().n_factors() {
        out = apply_local(channel, &out, factor)?;
    }
    Ok(out)
}


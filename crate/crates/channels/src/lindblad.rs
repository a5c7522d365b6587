//! Lindblad generators and a fixed-step fourth-order Runge-Kutta integrator.
//!
//! Qutrit level convention matches the register builders: levels are ordered
//! (e, u, g), so the shared ground level sits at index 2.

use num_complex::Complex;
use quantum_core::{embed_local, DensityMatrix, HilbertSpace, Matrix, Scalar};

use crate::error::ChannelError;

/// Generator of a Markovian master equation,
/// `d rho/dt = -i [H, rho] + sum_j r_j (L_j rho L_j^dag - {L_j^dag L_j, rho}/2)`.
#[derive(Debug, Clone)]
pub struct LindbladGenerator<T: Scalar> {
    space: HilbertSpace,
    hamiltonian: Option<Matrix<T>>,
    /// Per jump: rate, jump operator, and its precomputed normal product.
    jumps: Vec<(T, Matrix<T>, Matrix<T>)>,
}

/// One point of an integrated trajectory.
#[derive(Debug, Clone)]
pub struct TrajectorySample<T: Scalar> {
    /// Time of the sample.
    pub t: T,
    /// Validated state at that time.
    pub state: DensityMatrix<T>,
}

impl<T: Scalar> LindbladGenerator<T> {
    /// Generator from an optional Hamiltonian and a list of weighted jump
    /// operators on the full space.
    ///
    /// # Errors
    /// Rejects negative rates and operators whose dimension does not match
    /// the space.
    pub fn new(
        space: HilbertSpace,
        hamiltonian: Option<Matrix<T>>,
        jumps: Vec<(T, Matrix<T>)>,
    ) -> Result<Self, ChannelError> {
        let d = space.total_dim();
        if let Some(h) = &hamiltonian {
            if h.dim()? != d {
                return Err(ChannelError::Core(
                    quantum_core::CoreError::DimensionMismatch {
                        context: "generator Hamiltonian",
                        expected: d,
                        got: h.dim()?,
                    },
                ));
            }
        }
        let mut built = Vec::with_capacity(jumps.len());
        for (rate, l) in jumps {
            if rate < T::zero() {
                return Err(ChannelError::Core(quantum_core::CoreError::OutOfRange {
                    param: "jump rate",
                    value: rate.as_f64(),
                    min: 0.0,
                    max: f64::INFINITY,
                }));
            }
            if l.dim()? != d {
                return Err(ChannelError::Core(
                    quantum_core::CoreError::DimensionMismatch {
                        context: "jump operator",
                        expected: d,
                        got: l.dim()?,
                    },
                ));
            }
            let normal = &l.dagger() * &l;
            built.push((rate, l, normal));
        }
        Ok(Self {
            space,
            hamiltonian,
            jumps: built,
        })
    }

    /// Spontaneous decay of two V-type three-level systems: on each factor,
    /// the two upper levels decay independently to the shared ground level,
    /// the first at `gamma_e` and the second at `gamma_u`.
    ///
    /// # Errors
    /// Rejects negative rates.
    pub fn qutrit_pair_decay(gamma_e: T, gamma_u: T) -> Result<Self, ChannelError> {
        let space = HilbertSpace::qutrits(2);
        let one = Complex::new(T::one(), T::zero());
        // |g><e| and |g><u| on a single qutrit, levels ordered (e, u, g).
        let mut drop_e = Matrix::zeros(3, 3);
        drop_e[(2, 0)] = one;
        let mut drop_u = Matrix::zeros(3, 3);
        drop_u[(2, 1)] = one;
        let mut jumps = Vec::with_capacity(4);
        for factor in 0..2 {
            jumps.push((gamma_e, embed_local(&drop_e, &space, factor)?));
            jumps.push((gamma_u, embed_local(&drop_u, &space, factor)?));
        }
        Self::new(space, None, jumps)
    }

    /// The space the generator acts on.
    pub fn space(&self) -> &HilbertSpace {
        &self.space
    }

    /// Action of the generator on a raw matrix.
    pub fn apply(&self, rho: &Matrix<T>) -> Matrix<T> {
        let d = self.space.total_dim();
        let mut out = Matrix::zeros(d, d);
        if let Some(h) = &self.hamiltonian {
            let comm = &(h * rho) - &(rho * h);
            out = &out + &comm.scale(Complex::new(T::zero(), -T::one()));
        }
        let half = T::one() / (T::one() + T::one());
        for (rate, l, normal) in &self.jumps {
            let gain = &(l * rho) * &l.dagger();
            let loss = (&(normal * rho) + &(rho * normal)).scale_re(half);
            out = &out + &(&gain - &loss).scale_re(*rate);
        }
        out
    }

    /// Step size resolving the fastest jump rate to one part in a thousand.
    /// Callers with a Hamiltonian or with all rates zero must pick their own.
    pub fn suggested_dt(&self) -> T {
        let mut fastest = T::zero();
        for (rate, _, _) in &self.jumps {
            if *rate > fastest {
                fastest = *rate;
            }
        }
        T::lit(1e-3) / fastest
    }
}

/// Integrate `d rho/dt = gen(rho)` from `rho0` to `t_end` with fixed-step
/// fourth-order Runge-Kutta, sampling every `stride` steps (and always at the
/// endpoints). The step count is rounded up so the grid lands on `t_end`
/// exactly with a uniform step no larger than `dt`.
///
/// Every returned sample is validated as a density matrix at a relaxed,
/// integrator-grade tolerance.
///
/// # Errors
/// Rejects non-positive `dt` or negative `t_end`, a space mismatch between
/// state and generator, and any sample that stops being a valid state.
pub fn lindblad_integrate<T: Scalar>(
    rho0: &DensityMatrix<T>,
    gen: &LindbladGenerator<T>,
    t_end: T,
    dt: T,
    stride: usize,
) -> Result<Vec<TrajectorySample<T>>, ChannelError> {
    if dt <= T::zero() || t_end < T::zero() {
        return Err(ChannelError::Core(quantum_core::CoreError::OutOfRange {
            param: "integration window",
            value: dt.as_f64(),
            min: 0.0,
            max: f64::INFINITY,
        }));
    }
    if rho0.space().dims() != gen.space().dims() {
        return Err(ChannelError::Core(
            quantum_core::CoreError::DimensionMismatch {
                context: "trajectory initial state",
                expected: gen.space().total_dim(),
                got: rho0.dim(),
            },
        ));
    }
    let stride = stride.max(1);
    // Integrator-grade validation: 1e3 times the strict tolerances.
    let tol_scale = T::lit(1e3);

    let mut samples = vec![TrajectorySample {
        t: T::zero(),
        state: rho0.clone(),
    }];
    if t_end == T::zero() {
        return Ok(samples);
    }

    let n_steps = (t_end / dt).ceil().as_f64() as usize;
    let h = t_end / T::lit(n_steps as f64);
    let sixth = h / T::lit(6.0);
    let two = T::one() + T::one();

    let mut m = rho0.matrix().clone();
    for step in 1..=n_steps {
        let k1 = gen.apply(&m);
        let k2 = gen.apply(&(&m + &k1.scale_re(h / two)));
        let k3 = gen.apply(&(&m + &k2.scale_re(h / two)));
        let k4 = gen.apply(&(&m + &k3.scale_re(h)));
        let slope = &(&k1 + &k4) + &(&k2 + &k3).scale_re(two);
        m = &m + &slope.scale_re(sixth);

        if step % stride == 0 || step == n_steps {
            let t = T::lit(step as f64) * h;
            let state =
                DensityMatrix::with_tolerance(rho0.space().clone(), m.clone(), tol_scale)
                    .map_err(|source| ChannelError::TrajectoryInvariant {
                        t: t.as_f64(),
                        source,
                    })?;
            samples.push(TrajectorySample { t, state });
        }
    }
    Ok(samples)
}

//! Hermitian eigendecomposition.
//!
//! Classic two-stage dense solver: unitary Householder reduction of the
//! complex Hermitian matrix to real symmetric tridiagonal form (a diagonal
//! phase similarity absorbs the residual subdiagonal phases), followed by the
//! implicit-shift QL iteration with eigenvector accumulation. This is the
//! EISPACK htridi/tql2 lineage, kept in one place so degenerate-subspace
//! behaviour is fully under our control.

use num_complex::Complex;

use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::scalar::{Scalar, C};

/// Eigenvalue ordering of a [`SpectralDecomposition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigOrder {
    Ascending,
    Descending,
}

/// Eigenvalues with matching orthonormal eigenvector columns.
///
/// Invariants (checked by the test suite, not on every construction):
/// reconstruction `max |A - V diag(values) V^dag|` and column orthonormality
/// both hold within the iterative tolerance of the scalar type.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T: Scalar> {
    /// Real eigenvalues, sorted according to `order`.
    pub values: Vec<T>,
    /// Column `j` is the eigenvector of `values[j]`.
    pub vectors: Matrix<T>,
    /// Sort direction of `values`.
    pub order: EigOrder,
}

impl<T: Scalar> SpectralDecomposition<T> {
    /// Same decomposition with the opposite eigenvalue ordering.
    pub fn reversed(mut self) -> Self {
        let n = self.values.len();
        self.values.reverse();
        let v = self.vectors.clone();
        for j in 0..n {
            for i in 0..v.rows() {
                self.vectors[(i, j)] = v[(i, n - 1 - j)];
            }
        }
        self.order = match self.order {
            EigOrder::Ascending => EigOrder::Descending,
            EigOrder::Descending => EigOrder::Ascending,
        };
        self
    }

    /// `V diag(values) V^dag`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let scaled = Matrix::from_fn(self.vectors.rows(), self.values.len(), |r, c| {
            self.vectors[(r, c)] * self.values[c]
        });
        &scaled * &self.vectors.dagger()
    }

    /// `max |V^dag V - I|`.
    pub fn orthonormality_deviation(&self) -> T {
        let g = &self.vectors.dagger() * &self.vectors;
        g.max_abs_diff(&Matrix::identity(self.values.len()))
    }

    /// Apply a real function to the eigenvalues and reassemble
    /// `V diag(f(values)) V^dag`.
    pub fn map_eigenvalues(&self, f: impl Fn(T) -> C<T>) -> Matrix<T> {
        let scaled = Matrix::from_fn(self.vectors.rows(), self.values.len(), |r, c| {
            self.vectors[(r, c)] * f(self.values[c])
        });
        &scaled * &self.vectors.dagger()
    }
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
///
/// # Errors
/// Rejects non-square or non-Hermitian input (deviation measured relative to
/// the largest element); reports non-convergence of the QL iteration, which
/// for Hermitian input indicates corrupted (non-finite) data.
pub fn eig_hermitian<T: Scalar>(a: &Matrix<T>) -> Result<SpectralDecomposition<T>, CoreError> {
    let n = a.dim()?;
    let herm_dev = a.hermiticity_deviation();
    let herm_tol = T::tol_exact() * (T::one() + a.max_abs());
    if herm_dev > herm_tol {
        return Err(CoreError::NotHermitian {
            max_dev: herm_dev.as_f64(),
        });
    }

    if n == 0 {
        return Ok(SpectralDecomposition {
            values: vec![],
            vectors: Matrix::zeros(0, 0),
            order: EigOrder::Ascending,
        });
    }

    let mut m = a.clone();
    let mut q: Matrix<T> = Matrix::identity(n);
    householder_tridiagonalize(&mut m, &mut q);

    // Real tridiagonal data: d = diagonal, e[i] couples d[i] and d[i+1].
    // A diagonal phase similarity rotates each subdiagonal element onto the
    // positive real axis; the phases fold into the accumulated unitary.
    let mut d: Vec<T> = (0..n).map(|i| m[(i, i)].re).collect();
    let mut e: Vec<T> = vec![T::zero(); n];
    let mut theta = Complex::new(T::one(), T::zero());
    for i in 1..n {
        let sub = m[(i, i - 1)];
        let mag = sub.norm();
        theta = if mag > T::zero() {
            let t_next = sub * theta / Complex::new(mag, T::zero());
            for r in 0..n {
                q[(r, i)] *= t_next;
            }
            t_next
        } else {
            for r in 0..n {
                q[(r, i)] *= theta;
            }
            theta
        };
        e[i - 1] = mag;
    }

    ql_implicit(&mut d, &mut e, &mut q)?;

    // Ascending sort, carrying eigenvector columns along.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("finite eigenvalues"));
    let values: Vec<T> = idx.iter().map(|&i| d[i]).collect();
    let vectors = Matrix::from_fn(n, n, |r, c| q[(r, idx[c])]);

    Ok(SpectralDecomposition {
        values,
        vectors,
        order: EigOrder::Ascending,
    })
}

/// In-place Householder reduction of Hermitian `m` to tridiagonal form,
/// accumulating the similarity transform into `q` (so `q^dag m_in q = m_out`
/// on exit, with `m_out` tridiagonal up to rounding).
fn householder_tridiagonalize<T: Scalar>(m: &mut Matrix<T>, q: &mut Matrix<T>) {
    let n = m.rows();
    let two = T::one() + T::one();
    let mut v: Vec<C<T>> = vec![Complex::new(T::zero(), T::zero()); n];
    let mut w: Vec<C<T>> = vec![Complex::new(T::zero(), T::zero()); n];

    for k in 0..n.saturating_sub(2) {
        let mut norm_sq = T::zero();
        for i in k + 1..n {
            norm_sq += m[(i, k)].norm_sqr();
        }
        let norm = norm_sq.sqrt();
        let x0 = m[(k + 1, k)];
        // Column already tridiagonal: nothing below the subdiagonal.
        if norm_sq - x0.norm_sqr() <= T::zero() {
            continue;
        }

        // Reflector v = x - alpha e0, with alpha phase-aligned to x0 so that
        // v^dag x is real and the reflection is well conditioned.
        let phase = if x0.norm() > T::zero() {
            x0 / Complex::new(x0.norm(), T::zero())
        } else {
            Complex::new(T::one(), T::zero())
        };
        let alpha = -phase * norm;
        v[k + 1] = x0 - alpha;
        for i in k + 2..n {
            v[i] = m[(i, k)];
        }
        let vtv: T = (k + 1..n).map(|i| v[i].norm_sqr()).fold(T::zero(), |a, b| a + b);
        if vtv <= T::zero() {
            continue;
        }
        let beta = two / vtv;

        // p = beta * M v restricted to the trailing block.
        for i in k + 1..n {
            let mut s = Complex::new(T::zero(), T::zero());
            for j in k + 1..n {
                s += m[(i, j)] * v[j];
            }
            w[i] = s * beta;
        }
        // w = p - (beta v^dag p / 2) v keeps the two-sided update Hermitian
        // and trace-free: with this choice v^dag w = 0 exactly.
        let mut vp = Complex::new(T::zero(), T::zero());
        for i in k + 1..n {
            vp += v[i].conj() * w[i];
        }
        let half_vp = vp * Complex::new(beta / two, T::zero());
        for i in k + 1..n {
            w[i] -= half_vp * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let upd = v[i] * w[j].conj() + w[i] * v[j].conj();
                m[(i, j)] -= upd;
            }
        }
        m[(k + 1, k)] = alpha;
        m[(k, k + 1)] = alpha.conj();
        for i in k + 2..n {
            m[(i, k)] = Complex::new(T::zero(), T::zero());
            m[(k, i)] = Complex::new(T::zero(), T::zero());
        }

        // q <- q (I - beta v v^dag)
        for r in 0..n {
            let mut s = Complex::new(T::zero(), T::zero());
            for j in k + 1..n {
                s += q[(r, j)] * v[j];
            }
            let s_beta = s * beta;
            for j in k + 1..n {
                let upd = s_beta * v[j].conj();
                q[(r, j)] -= upd;
            }
        }

        for i in k + 1..n {
            v[i] = Complex::new(T::zero(), T::zero());
            w[i] = Complex::new(T::zero(), T::zero());
        }
    }
}

/// Implicit-shift QL iteration on a real symmetric tridiagonal matrix,
/// rotating the (complex) columns of `z` along with it. `e[i]` couples
/// `d[i]` and `d[i+1]`; `e[n-1]` is workspace.
fn ql_implicit<T: Scalar>(d: &mut [T], e: &mut [T], z: &mut Matrix<T>) -> Result<(), CoreError> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let one = T::one();
    let two = one + one;
    const MAX_ITER: usize = 50;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_ITER {
                return Err(CoreError::EigNonConvergence {
                    row: l,
                    iterations: MAX_ITER,
                });
            }

            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(one);
            let denom = g + if g >= T::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / denom;
            let mut s = one;
            let mut c = one;
            let mut p = T::zero();
            let mut underflow = false;

            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    // Deflate: rotation chain annihilated early.
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                for k in 0..z.rows() {
                    let zi1 = z[(k, i + 1)];
                    let zi = z[(k, i)];
                    z[(k, i + 1)] = zi.scale(s) + zi1.scale(c);
                    z[(k, i)] = zi.scale(c) - zi1.scale(s);
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}

//! Operations tied to the tensor-product structure: Kronecker composition,
//! partial trace/transpose, local embeddings, trace norm, and the unitary
//! exponential of a Hermitian generator.

use num_complex::Complex;

use crate::eig::eig_hermitian;
use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::space::HilbertSpace;
use crate::states::{DensityMatrix, HermitianOperator};

/// Kronecker product of Hermitian operators, with concatenated space.
///
/// # Errors
/// Rejects an empty list.
pub fn tensor_operators<T: Scalar>(
    ops: &[&HermitianOperator<T>],
) -> Result<HermitianOperator<T>, CoreError> {
    let (space, mat) = tensor_parts(
        ops.iter().map(|o| (o.space(), o.matrix())),
        "tensor_operators",
    )?;
    HermitianOperator::new(space, mat)
}

/// Kronecker product of density matrices, with concatenated space.
///
/// # Errors
/// Rejects an empty list.
pub fn tensor_states<T: Scalar>(
    states: &[&DensityMatrix<T>],
) -> Result<DensityMatrix<T>, CoreError> {
    let (space, mat) = tensor_parts(
        states.iter().map(|s| (s.space(), s.matrix())),
        "tensor_states",
    )?;
    // A Kronecker product of valid states is valid by construction.
    Ok(DensityMatrix::new_unchecked(space, mat))
}

fn tensor_parts<'a, T: Scalar + 'a>(
    parts: impl Iterator<Item = (&'a HilbertSpace, &'a Matrix<T>)>,
    context: &'static str,
) -> Result<(HilbertSpace, Matrix<T>), CoreError> {
    let mut acc: Option<(HilbertSpace, Matrix<T>)> = None;
    for (space, mat) in parts {
        acc = Some(match acc {
            None => (space.clone(), mat.clone()),
            Some((s, m)) => (s.join(space), m.kron(mat)),
        });
    }
    acc.ok_or(CoreError::DimensionMismatch {
        context,
        expected: 1,
        got: 0,
    })
}

/// Trace out all factors not listed in `keep` (strictly ascending indices).
///
/// # Errors
/// Rejects bad factor selections.
pub fn partial_trace<T: Scalar>(
    rho: &DensityMatrix<T>,
    keep: &[usize],
) -> Result<DensityMatrix<T>, CoreError> {
    let space = rho.space();
    let out_space = space.select(keep)?;
    let dims = space.dims();
    let strides = space.strides();
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep.contains(k)).collect();

    let keep_dims: Vec<usize> = keep.iter().map(|&k| dims[k]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&k| dims[k]).collect();
    let d_keep: usize = keep_dims.iter().product();
    let d_traced: usize = traced_dims.iter().product();

    // Base offset of each kept multi-index and each traced multi-index in the
    // flat row index; a full index is the sum of one of each.
    let keep_offsets = enumerate_offsets(&keep_dims, &keep.iter().map(|&k| strides[k]).collect::<Vec<_>>());
    let traced_offsets = enumerate_offsets(
        &traced_dims,
        &traced.iter().map(|&k| strides[k]).collect::<Vec<_>>(),
    );

    let m = rho.matrix();
    let mut out = Matrix::zeros(d_keep, d_keep);
    for (r, &ro) in keep_offsets.iter().enumerate() {
        for (c, &co) in keep_offsets.iter().enumerate() {
            let mut s = Complex::new(T::zero(), T::zero());
            for &to in traced_offsets.iter().take(d_traced) {
                s += m[(ro + to, co + to)];
            }
            out[(r, c)] = s;
        }
    }
    // Partial trace of a valid state is exact linear arithmetic on it.
    Ok(DensityMatrix::new_unchecked(out_space, out))
}

/// Flat row-index offsets of every multi-index over `dims`, with the given
/// per-digit strides, enumerated in lexicographic order.
fn enumerate_offsets(dims: &[usize], strides: &[usize]) -> Vec<usize> {
    let total: usize = dims.iter().product();
    let mut offsets = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut off = 0usize;
        for k in (0..dims.len()).rev() {
            off += (idx % dims[k]) * strides[k];
            idx /= dims[k];
        }
        offsets.push(off);
    }
    offsets
}

/// Transpose the listed factors of a density matrix; the result is Hermitian
/// with unit trace but in general not positive.
///
/// # Errors
/// Rejects out-of-range factor indices.
pub fn partial_transpose<T: Scalar>(
    rho: &DensityMatrix<T>,
    transposed: &[usize],
) -> Result<Matrix<T>, CoreError> {
    let space = rho.space();
    let n_fac = space.n_factors();
    for &t in transposed {
        if t >= n_fac {
            return Err(CoreError::BadFactor {
                what: "partial_transpose factor",
                index: t,
                count: n_fac,
            });
        }
    }
    let dims = space.dims();
    let strides = space.strides();
    let d = space.total_dim();
    let m = rho.matrix();
    let mut out = Matrix::zeros(d, d);
    // Swap row/column digits on every transposed factor.
    for r in 0..d {
        for c in 0..d {
            let mut r2 = 0usize;
            let mut c2 = 0usize;
            for k in 0..n_fac {
                let rd = (r / strides[k]) % dims[k];
                let cd = (c / strides[k]) % dims[k];
                if transposed.contains(&k) {
                    r2 += cd * strides[k];
                    c2 += rd * strides[k];
                } else {
                    r2 += rd * strides[k];
                    c2 += cd * strides[k];
                }
            }
            out[(r2, c2)] = m[(r, c)];
        }
    }
    Ok(out)
}

/// Trace norm (sum of singular values) of a general rectangular matrix,
/// computed from the spectrum of the Hermitian embedding `[[0, A], [A^dag, 0]]`
/// whose eigenvalues come in pairs at plus and minus each singular value.
///
/// The embedding keeps small singular values accurate to machine precision,
/// where the Gram-matrix route would square them away below roundoff.
///
/// # Errors
/// Propagates eigensolver failures.
pub fn trace_norm<T: Scalar>(a: &Matrix<T>) -> Result<T, CoreError> {
    let (rows, cols) = (a.rows(), a.cols());
    let n = rows + cols;
    let mut h = Matrix::zeros(n, n);
    for r in 0..rows {
        for c in 0..cols {
            h[(r, rows + c)] = a[(r, c)];
            h[(rows + c, r)] = a[(r, c)].conj();
        }
    }
    let eig = eig_hermitian(&h)?;
    let mut s = T::zero();
    for &v in &eig.values {
        if v > T::zero() {
            s += v;
        }
    }
    Ok(s)
}

/// `exp(-i H t)` via spectral decomposition, with a unitarity check on the
/// reconstruction.
///
/// # Errors
/// Propagates eigensolver failures; reports a failed unitarity check.
pub fn matrix_exp_unitary<T: Scalar>(
    h: &HermitianOperator<T>,
    t: T,
) -> Result<Matrix<T>, CoreError> {
    let eig = h.eig()?;
    let u = eig.map_eigenvalues(|lam| {
        let angle = -lam * t;
        Complex::new(angle.cos(), angle.sin())
    });
    let dev = (&u.dagger() * &u).max_abs_diff(&Matrix::identity(u.rows()));
    if dev > T::tol_iterative() {
        return Err(CoreError::NotUnitary {
            max_dev: dev.as_f64(),
        });
    }
    Ok(u)
}

/// Embed a local operator acting on one factor: `I (x) .. (x) op (x) .. (x) I`.
///
/// # Errors
/// Rejects a bad factor index or an operator of the wrong local dimension.
pub fn embed_local<T: Scalar>(
    op: &Matrix<T>,
    space: &HilbertSpace,
    factor: usize,
) -> Result<Matrix<T>, CoreError> {
    let d_local = space.dim_of(factor)?;
    if op.rows() != d_local || op.cols() != d_local {
        return Err(CoreError::DimensionMismatch {
            context: "embed_local operator",
            expected: d_local,
            got: op.rows(),
        });
    }
    let left: usize = space.dims()[..factor].iter().product();
    let right: usize = space.dims()[factor + 1..].iter().product();
    Ok(Matrix::identity(left)
        .kron(op)
        .kron(&Matrix::identity(right)))
}

/// Reorder the tensor factors of a state: destination slot `j` receives the
/// factor `perm[j]` of the input.
///
/// # Errors
/// Rejects non-bijective factor lists.
pub fn permute_factors<T: Scalar>(
    rho: &DensityMatrix<T>,
    perm: &[usize],
) -> Result<DensityMatrix<T>, CoreError> {
    let space = rho.space();
    let n_fac = space.n_factors();
    if perm.len() != n_fac {
        return Err(CoreError::DimensionMismatch {
            context: "permute_factors",
            expected: n_fac,
            got: perm.len(),
        });
    }
    let mut seen = vec![false; n_fac];
    for &p in perm {
        if p >= n_fac || seen[p] {
            return Err(CoreError::BadFactor {
                what: "permute_factors source",
                index: p,
                count: n_fac,
            });
        }
        seen[p] = true;
    }
    let dims = space.dims();
    let new_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let new_labels: Vec<String> = perm.iter().map(|&p| space.labels()[p].clone()).collect();
    let new_space = HilbertSpace::new(new_dims, new_labels)?;

    let strides = space.strides();
    let new_strides = new_space.strides();
    let d = space.total_dim();
    let m = rho.matrix();
    let mut out = Matrix::zeros(d, d);
    for r in 0..d {
        let r2: usize = (0..n_fac)
            .map(|j| ((r / strides[perm[j]]) % dims[perm[j]]) * new_strides[j])
            .sum();
        for c in 0..d {
            let c2: usize = (0..n_fac)
                .map(|j| ((c / strides[perm[j]]) % dims[perm[j]]) * new_strides[j])
                .sum();
            out[(r2, c2)] = m[(r, c)];
        }
    }
    Ok(DensityMatrix::new_unchecked(new_space, out))
}

/// Permutation matrix `P` with `P |i> = |perm[i]>`.
///
/// # Errors
/// Rejects non-bijective index lists.
pub fn permutation_matrix<T: Scalar>(perm: &[usize]) -> Result<Matrix<T>, CoreError> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(CoreError::BadFactor {
                what: "permutation image",
                index: p,
                count: n,
            });
        }
        seen[p] = true;
    }
    let mut m = Matrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m[(p, i)] = Complex::new(T::one(), T::zero());
    }
    Ok(m)
}

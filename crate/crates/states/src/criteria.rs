//! Entanglement criteria: negativity from the partial transpose and the
//! realignment (computable cross norm) parameter. The two are complementary
//! on bound entangled states: negativity is blind to them by definition,
//! while a positive realignment parameter can still witness entanglement.

use quantum_core::{partial_transpose, trace_norm, CoreError, DensityMatrix, Matrix, Scalar};

use crate::error::StateError;

fn check_cut<T: Scalar>(rho: &DensityMatrix<T>, b_side: &[usize]) -> Result<(), StateError> {
    let n = rho.space().n_factors();
    // select() enforces a strictly ascending in-range list.
    rho.space().select(b_side)?;
    if b_side.is_empty() || b_side.len() == n {
        return Err(CoreError::BadFactor {
            what: "bipartition side",
            index: b_side.len(),
            count: n,
        }
        .into());
    }
    Ok(())
}

/// Negativity `N = (||rho^PT||_1 - 1)/2` across the bipartition whose B side
/// is the listed factors. Zero (up to rounding) exactly on PPT states.
///
/// # Errors
/// Rejects an empty, full, or ill-ordered bipartition side.
pub fn negativity<T: Scalar>(rho: &DensityMatrix<T>, b_side: &[usize]) -> Result<T, StateError> {
    check_cut(rho, b_side)?;
    let pt = partial_transpose(rho, b_side)?;
    let half = T::lit(0.5);
    Ok((trace_norm(&pt)? - T::one()) * half)
}

/// Realignment parameter `||R(rho)||_1 - 1`, where the reshuffle R maps the
/// entry at row (i, j), column (k, l) of the A x B system to row (i, k),
/// column (j, l). Positive values witness entanglement (including bound
/// entanglement); separable states satisfy `||R||_1 <= 1`.
///
/// # Errors
/// Rejects an empty, full, or ill-ordered bipartition side.
pub fn realignment_parameter<T: Scalar>(
    rho: &DensityMatrix<T>,
    b_side: &[usize],
) -> Result<T, StateError> {
    check_cut(rho, b_side)?;
    let space = rho.space();
    let dims = space.dims();
    let strides = space.strides();
    let a_side: Vec<usize> = (0..space.n_factors())
        .filter(|k| !b_side.contains(k))
        .collect();
    let da: usize = a_side.iter().map(|&k| dims[k]).product();
    let db: usize = b_side.iter().map(|&k| dims[k]).product();

    // Flatten the digits of a global index over one side of the cut.
    let flatten = |idx: usize, side: &[usize]| -> usize {
        side.iter()
            .fold(0usize, |acc, &k| acc * dims[k] + (idx / strides[k]) % dims[k])
    };

    let d = space.total_dim();
    let m = rho.matrix();
    let mut r = Matrix::zeros(da * da, db * db);
    for row in 0..d {
        let (ar, br) = (flatten(row, &a_side), flatten(row, b_side));
        for col in 0..d {
            let (ac, bc) = (flatten(col, &a_side), flatten(col, b_side));
            r[(ar * da + ac, br * db + bc)] = m[(row, col)];
        }
    }
    Ok(trace_norm(&r)? - T::one())
}

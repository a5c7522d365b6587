//! JSON import/export of density matrices as
//! `{dims: [...], re: [[...]], im: [[...]]}` with row-major 2D arrays.

use quantum_core::{C64, DensityMatrix64, HilbertSpace, Matrix64};
use serde::{Deserialize, Serialize};

use crate::error::StateError;

#[derive(Serialize, Deserialize)]
struct StateJson {
    dims: Vec<usize>,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// Serialize a state to pretty-printed JSON (shortest round-trip floats).
///
/// # Errors
/// Propagates serializer failures.
pub fn to_json(rho: &DensityMatrix64) -> Result<String, StateError> {
    let d = rho.dim();
    let m = rho.matrix();
    let component = |f: fn(&C64) -> f64| -> Vec<Vec<f64>> {
        (0..d)
            .map(|r| (0..d).map(|c| f(&m[(r, c)])).collect())
            .collect()
    };
    let dto = StateJson {
        dims: rho.space().dims().to_vec(),
        re: component(|z| z.re),
        im: component(|z| z.im),
    };
    Ok(serde_json::to_string_pretty(&dto)?)
}

/// Parse and validate a state from the JSON layout written by [`to_json`].
///
/// # Errors
/// Rejects malformed JSON, inconsistent shapes, and matrices that fail the
/// density-matrix invariants.
pub fn from_json(text: &str) -> Result<DensityMatrix64, StateError> {
    let dto: StateJson = serde_json::from_str(text)?;
    let space = HilbertSpace::of_dims(&dto.dims)?;
    let d = space.total_dim();
    let shape_ok = dto.re.len() == d
        && dto.im.len() == d
        && dto.re.iter().all(|row| row.len() == d)
        && dto.im.iter().all(|row| row.len() == d);
    if !shape_ok {
        return Err(quantum_core::CoreError::DimensionMismatch {
            context: "state json arrays",
            expected: d,
            got: dto.re.len(),
        }
        .into());
    }
    let m = Matrix64::from_fn(d, d, |r, c| C64::new(dto.re[r][c], dto.im[r][c]));
    Ok(DensityMatrix64::new(space, m)?)
}

//! Tensor-product bookkeeping for composite Hilbert spaces.

use crate::error::CoreError;

/// Ordered list of local factor dimensions with per-factor labels.
///
/// The total dimension is the product of the factors; every factor has
/// dimension at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSpace {
    dims: Vec<usize>,
    labels: Vec<String>,
}

impl HilbertSpace {
    /// Space from explicit dimensions and labels.
    ///
    /// # Errors
    /// Rejects empty factor lists, factors of dimension < 2, and
    /// label/dimension count mismatch.
    pub fn new(dims: Vec<usize>, labels: Vec<String>) -> Result<Self, CoreError> {
        if dims.is_empty() {
            return Err(CoreError::BadSpace {
                reason: "no factors",
            });
        }
        if dims.iter().any(|&d| d < 2) {
            return Err(CoreError::BadSpace {
                reason: "factor dimension below 2",
            });
        }
        if dims.len() != labels.len() {
            return Err(CoreError::BadSpace {
                reason: "label count differs from factor count",
            });
        }
        Ok(Self { dims, labels })
    }

    /// Space from dimensions with generated labels `f0, f1, ...`.
    pub fn of_dims(dims: &[usize]) -> Result<Self, CoreError> {
        let labels = (0..dims.len()).map(|i| format!("f{i}")).collect();
        Self::new(dims.to_vec(), labels)
    }

    /// `n` qubits labelled `q0..q{n-1}`.
    pub fn qubits(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("q{i}")).collect();
        Self::new(vec![2; n], labels).expect("n >= 1 qubits")
    }

    /// `n` qutrits labelled `t0..t{n-1}`.
    pub fn qutrits(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("t{i}")).collect();
        Self::new(vec![3; n], labels).expect("n >= 1 qutrits")
    }

    /// Single factor of dimension `d` (e.g. a truncated bosonic mode).
    pub fn single(d: usize, label: &str) -> Result<Self, CoreError> {
        Self::new(vec![d], vec![label.to_string()])
    }

    /// Concatenation `self (x) other`.
    pub fn join(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Self { dims, labels }
    }

    pub fn n_factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Dimension of one factor.
    ///
    /// # Errors
    /// Fails if the index is out of range.
    pub fn dim_of(&self, factor: usize) -> Result<usize, CoreError> {
        self.dims
            .get(factor)
            .copied()
            .ok_or(CoreError::BadFactor {
                what: "factor index",
                index: factor,
                count: self.dims.len(),
            })
    }

    /// Sub-space formed by the given (strictly ascending) factor indices.
    ///
    /// # Errors
    /// Fails on out-of-range or non-ascending selections.
    pub fn select(&self, keep: &[usize]) -> Result<Self, CoreError> {
        if keep.is_empty() {
            return Err(CoreError::BadSpace {
                reason: "empty factor selection",
            });
        }
        for w in keep.windows(2) {
            if w[1] <= w[0] {
                return Err(CoreError::BadSpace {
                    reason: "factor selection must be strictly ascending",
                });
            }
        }
        let mut dims = Vec::with_capacity(keep.len());
        let mut labels = Vec::with_capacity(keep.len());
        for &k in keep {
            dims.push(self.dim_of(k)?);
            labels.push(self.labels[k].clone());
        }
        Self::new(dims, labels)
    }

    /// Row-major strides of the factor digits: index `i` decomposes as
    /// `i = sum_k digit_k * stride_k` with `digit_k < dims[k]`.
    pub fn strides(&self) -> Vec<usize> {
        let n = self.dims.len();
        let mut s = vec![1usize; n];
        for k in (0..n.saturating_sub(1)).rev() {
            s[k] = s[k + 1] * self.dims[k + 1];
        }
        s
    }
}

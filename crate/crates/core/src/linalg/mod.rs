//! Exact dense linear algebra and sparse index tensors over a [`Scalar`] field.
//!
//! [`Scalar`]: crate::scalar::Scalar

mod matrix;
mod tensor;

pub use matrix::{determinant, invert, minimal_polynomial, nullspace, solve, LinalgError, Matrix};
pub use tensor::{apply_generator, GenMap, Tensor};

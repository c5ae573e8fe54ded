//! Constructors for the stock algebra families: matrix algebras, semisimple
//! block sums, group algebras from Cayley tables, u_q(sl2) at a root of
//! unity, and Taft algebras, each with its standard Frobenius form.

mod blocks;
mod group;
mod matrix;
mod taft;
mod uqsl2;
mod words;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::frobenius::FrobError;
use crate::linalg::LinalgError;
use crate::scalar::ScalarError;

pub use blocks::{
    block_twist, blocks_algebra, semisimple_special_form, weakly_symmetric_block_form,
    BlockPrediction,
};
pub use group::{
    conjugacy_classes, conjugation_sum, cyclic, group_algebra, group_standard_form, s3,
    s3_cycle_alias, GroupTable,
};
pub use matrix::{matrix_algebra, matrix_frobenius, MatrixPrediction};
pub use taft::{taft_algebra, taft_standard_form, taft_word_context};
pub use uqsl2::{
    cartan_element, casimir_n3, circulant_matrix, degree_zero_part, normal_order, pbw_exponents,
    pbw_index, uqsl2, uqsl2_cartan_twist, uqsl2_integral_form, uqsl2_ktwist_eps,
    uqsl2_symmetric_form, uqsl2_word_context, CartanPrediction, Letter,
};
pub use words::{parse_element, WordContext};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BuilderError {
    #[error("element is not invertible")]
    NotInvertible,
    #[error("bad group table: {0}")]
    BadGroupTable(String),
    #[error("bad block specification: {0}")]
    BadBlockSpec(String),
    #[error("order {0} out of range for this family")]
    UnsupportedOrder(u32),
    #[error("word parse error at byte {pos}: {msg}")]
    Word { pos: usize, msg: String },
    #[error("builder invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Frob(#[from] FrobError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

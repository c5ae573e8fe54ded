//! Exact-arithmetic workbench for finite-dimensional Frobenius algebras.
//!
//! The crate computes, over Q or a cyclotomic field Q(zeta_n):
//!
//! - structure-constant algebras with exact element arithmetic, centers,
//!   commutator subspaces and inverses ([`algebra`]);
//! - Frobenius structures given by a linear form with invertible Gram matrix:
//!   coproducts, the central lollipop element B, F-dimensions eps(B^j), exact
//!   rational Hilbert series, Nakayama automorphisms, twisting and a
//!   symmetry classifier ([`frobenius`]);
//! - ready-made families: matrix algebras, semisimple block sums, group
//!   algebras from Cayley tables, the quantum groups u_q(sl2) at small roots
//!   of unity and Taft algebras ([`builders`]);
//! - planar string diagrams over the Frobenius signature: parsing, face
//!   counting, canonical forms and exact evaluation as sparse tensors,
//!   plus a fuzzing harness for the canonical-form law ([`diagrams`]).
//!
//! Everything is exact; no floating point anywhere. Batch work (fuzzing,
//! table validation) is data-parallel via rayon when the default `parallel`
//! feature is on, with a sequential fallback otherwise (see [`exec`]).

pub mod algebra;
pub mod builders;
pub mod diagrams;
pub mod exec;
pub mod frobenius;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use algebra::{Algebra, AlgebraError, Element};
pub use frobenius::{Classification, FrobError, FrobeniusStructure, RationalSeries};
pub use linalg::{Matrix, Tensor};
pub use scalar::{FieldSpec, Scalar, ScalarError};

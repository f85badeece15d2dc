//! Exact linear algebra over the integers.
//!
//! Everything here works with arbitrary-precision entries. The cohomology
//! computations that sit on top of this crate start from matrices with
//! entries in `{0, ±1, ±2}`, but intermediate values in elimination grow
//! without bound, so machine integers are never used for the arithmetic.

mod echelon;
mod error;
mod matrix;
mod quotient;
mod smith;
mod sparse;

pub use echelon::{kernel_basis, rank, solve_in_lattice, ColumnEchelon, LatticeSolver};
pub use error::LinalgError;
pub use matrix::{IntegerMatrix, DEFAULT_ELEMENT_BUDGET};
pub use quotient::{quotient_group, quotient_group_sparse, QuotientStructure};
pub use smith::{smith_normal_form, SmithForm};
pub use sparse::SparseMatrix;

pub use num_bigint::BigInt;

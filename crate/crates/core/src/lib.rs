//! Exact algebra of the natural (entrywise) product.
//!
//! Matrices, partitioned super matrices and matrix-coefficient polynomials
//! over `Z`, `Q`, `Zn` and the nonnegative cones, with a small finite
//! structure analyzer on top.

pub mod error;
pub mod json;
pub mod matpoly;
pub mod matrix;
pub mod random;
pub mod scalar;
pub mod structures;
pub mod supermatrix;
pub mod text;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use matpoly::{solve_binomial, solve_quadratic, MatPoly, RootSet};
pub use matrix::{trivial_idempotent_count, trivial_idempotents, Matrix, Shape, SupportMask};
pub use scalar::{Domain, Scalar};
pub use supermatrix::{PartitionType, SuperMatrix};

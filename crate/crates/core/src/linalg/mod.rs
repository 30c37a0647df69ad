//! Exact linear algebra over ℚ: matrices, reduced row echelon forms and
//! canonically represented subspaces.

pub mod matrix;
pub mod rational;
pub mod subspace;

pub use matrix::{rref, rref_with_pivots, solve, solve_left, MatrixQ};
pub use rational::{parse_rational, Rational};
pub use subspace::{coordinates_in, kernel, kernel_in, preimage, Kind, Subspace};

//! Exact rational scalars, dense matrices and fraction-free elimination.

mod elim;
mod matrix;
pub(crate) mod rational;

pub use elim::{in_column_space, in_column_space_with, inverse, kernel_basis, kernel_basis_with, rank, rank_with, solve, solve_with};
pub use matrix::{RatMatrix, RatVector};
pub use rational::{format_rational, parse_rational, Rational};

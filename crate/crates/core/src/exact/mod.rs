//! Exact rational arithmetic, linear algebra and strict feasibility.

pub mod feasibility;
pub mod matrix;
pub mod rational;

pub use feasibility::{strict_feasibility, verify_result, FeasibilityResult};
pub use matrix::{rank, solve_linear, RationalMatrix};
pub use rational::{parse_rational, Rational};

//! Exact arithmetic: rationals, cyclotomic numbers, roots of unity, matrices.

pub mod cyclotomic;
pub mod matrix;
pub mod rational;
pub mod unity;

pub use cyclotomic::{root_of_unity, CycNum, CyclotomicField};
pub use matrix::{rank_nullspace, span_rref, Echelon, ExactMatrix};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use unity::UnityRoot;

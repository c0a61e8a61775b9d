//! Exact computations for rational Cherednik algebras of the complex
//! reflection group G12.

pub mod amatrix;
pub mod arith;
pub mod category;
pub mod chars;
pub mod cherednik;
pub mod error;
pub mod group;
pub mod hecke;

pub use error::{Error, Result};
pub use group::{IrrepLabel, G12};

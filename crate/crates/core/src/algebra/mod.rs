//! Exact rational linear algebra and LP feasibility.

mod lp;
mod matrix;

pub use lp::{Constraint, LinearProgram, LpVerdict, Relation};
pub use matrix::RationalMatrix;

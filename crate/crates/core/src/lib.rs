//! Exact computation of degree-type complexity measures of Boolean functions.
//!
//! The crate computes degree, nondeterministic degree, rational degree and
//! sign degree with explicit polynomial witnesses, block sensitivity,
//! influence and decision-tree complexity, and builds decision trees from
//! hitting sets of nondeterministic representations. All arithmetic is exact
//! over the rationals.
//!
//! Conventions used everywhere:
//! - variable `x_{i+1}` is bit `i` of a point mask (see [`cube`]);
//! - the Rust API uses 0-based variable indices, text formats are 1-based;
//! - monomials are ordered by size, then by mask value.

pub mod algebra;
pub mod boolfn;
pub mod cube;
pub mod degrees;
pub mod dtree;
pub mod error;
pub mod harness;
pub mod limits;
pub mod poly;
pub mod symmetry;

pub use boolfn::{BooleanFunction, PartialBooleanFunction};
pub use error::{Error, Result};
pub use poly::{MultilinearPoly, Rational, UnivariatePoly};

//! The hard cap on arities for which exact (exponential-time) computations run.

use crate::error::{Error, Result};

/// Default cap on `n` for exact computations.
pub const DEFAULT_MAX_N: usize = 5;

/// Largest arity any truth table or polynomial may have. Masks are `u32`.
pub const MAX_ARITY: usize = 24;

/// The active cap: `BOOLDEG_MAX_N` if set to a valid integer, else [`DEFAULT_MAX_N`].
pub fn exact_cap() -> usize {
    std::env::var("BOOLDEG_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.min(MAX_ARITY))
        .unwrap_or(DEFAULT_MAX_N)
}

pub fn check_cap(n: usize) -> Result<()> {
    let cap = exact_cap();
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

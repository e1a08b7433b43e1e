//! Symmetrization and the analytic checks built on it.

mod bernoulli;
mod block;
mod checks;

pub use bernoulli::{bernoulli_expectation, bernoulli_symmetrize};
pub use block::{block_average, minsky_papert, minsky_papert_symmetrize, SymmetrizedPoly};
pub use checks::{
    corollary_approx_check, counterexample_symmetrization, markov_grid_check, nonzero_probability,
    ApproxVerdict, CounterexampleCheck, MarkovVerdict,
};

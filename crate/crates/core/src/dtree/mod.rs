//! Decision trees built from hitting sets of nondeterministic witnesses.

mod build;
mod hitting;
mod tree;

pub use build::{build_tree, build_tree_with, TraceEntry, TreeBuild};
pub use hitting::{greedy_disjoint_maxonomials, hitting_set, HittingSet, Side};
pub use tree::{DecisionTree, TreeVerdict};

//! Boolean and partial Boolean functions, named families and combinatorial
//! measures.

mod families;
mod function;
pub mod io;
mod measures;

pub use families::{Family, FamilyFunction, FamilyParams};
pub use function::{BooleanFunction, PartialBooleanFunction};
pub use measures::{
    block_sensitivity_at, block_sensitivity_at_point, decision_tree_complexity, influence,
    min_block_sensitivity, min_block_sensitivity_overall, total_influence, BlockPacking,
};

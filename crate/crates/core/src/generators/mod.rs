//! Instance generators.

pub mod comb;
pub mod enumerate;
pub mod gadgets;
pub mod random;
pub mod reduction;

pub use comb::{gen_skewed_comb, validate_comb, SkewedComb};
pub use enumerate::{all_trees, canonical_form};
pub use gadgets::{build_gadget, GadgetKind, GadgetSpec};
pub use random::{gen_caterpillar, gen_tree_bounded_pw, StrayProfile};
pub use reduction::{materialize_demo, materialize_reduction, reduction_sizes, DemoScale, ReductionSizes};

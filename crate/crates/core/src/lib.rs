//! Bandwidth approximation for trees and caterpillars.
//!
//! The caterpillar algorithm either returns a layout of bandwidth at most
//! `48 b^3` or proves that the bandwidth exceeds `b`. The tree algorithm
//! lifts this to trees of pathwidth `p` with ratio `(768 b^3)^p`. Exact
//! oracles for small trees and instance generators are included for
//! verification.

pub mod cat_approx;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod tree_approx;

pub use error::{Error, Result};
pub use graph::{Layout, SparseLayout, Tree};

//! Extremal relations between the number of leaves and the diameter of a
//! tree.
//!
//! * [`formulas`]: closed forms for the minimum leaf count `L(n, d)`, the
//!   minimum diameter `D(n, f)`, their maximum counterparts, and the
//!   classical lower bound `⌈2(n-1)/d⌉`.
//! * [`witnesses`]: trees attaining each extremum.
//! * [`spiderize`]: rewrites any tree into a spider with the same order,
//!   diameter and leaf set.
//! * [`stem`]: structure relative to a designated path, including the
//!   depth-based diametral path test.
//! * [`oracle`]: exhaustive Prüfer enumeration used as ground truth.

pub mod error;
pub mod formulas;
pub mod oracle;
pub mod spiderize;
pub mod stem;
pub mod tree;
pub mod witnesses;

pub use error::{Error, Result};
pub use formulas::{
    feasible_leaf_diameter, feasible_order_leaves, lesniak_bound, max_diameter, max_leaves,
    min_diameter, min_leaves, Count, ExtremalQuery,
};
pub use oracle::{build_table, prufer_decode, verify_sweep, ExtremalTable, VerifyReport};
pub use spiderize::{is_spider, rewire_once, spiderize, RewireStep, RewireTrace};
pub use stem::{decompose, first_big_vertex, is_diametral_by_lemma1, StemDecomposition};
pub use tree::{read_tree, write_tree, Tree, TreePath};
pub use witnesses::{
    max_diameter_tree, max_leaf_tree, min_diameter_spider, min_leaf_spider, spider_to_tree, Spider,
};

/// Vertex id in `0..n`.
pub type Vertex = usize;

/// Query evaluated in machine words, as used for concrete trees.
pub type Query = ExtremalQuery<usize>;
/// Query evaluated in 128-bit integers, for orders beyond any buildable tree.
pub type WideQuery = ExtremalQuery<u128>;

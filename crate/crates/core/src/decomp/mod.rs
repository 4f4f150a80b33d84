//! Structural decompositions used by the kernels.

mod bipartite;
mod blocks;
mod chordal;
mod degeneracy;
mod treedecomp;

pub use bipartite::{is_bipartite, Bipartiteness};
pub use blocks::{block_decomposition, BlockDecomposition};
pub use chordal::{chordality_check, lex_bfs, Chordality, PerfectEliminationOrdering};
pub use degeneracy::{degeneracy_ordering, later_closed_neighborhood, DegeneracyOrdering};
pub use treedecomp::{
    heuristic_tree_decomposition, reduce_bag_count, validate_tree_decomposition, TreeDecomposition,
    Violation,
};

//! Adversarial constructions that keep twins short, with diagnostics for
//! the combinatorial facts that bound their twins.
//!
//! * [`extremal`]: bipartite colorings showing the popular-subset sizes are sharp.
//! * [`composite`]: a two-level coloring that colors edges between blocks by a
//!   string and edges inside a block by a block-specific permutation.
//! * [`blocks`]: the 2-coloring induced by concatenating descending runs of
//!   lengths `3^{x_k}`, with its twin block graphs.

pub mod blocks;
pub mod composite;
pub mod extremal;

pub use blocks::{
    block_coloring, check_block_claims, skew_sum_permutation, twin_block_graph, uncovered_blocks, verify_block_claims,
    BlockClaim, BlockClaimSummary, BlockGraph, BlockProfile, ClaimViolation, Component, ComponentKind,
};
pub use composite::{
    check_twin_bound, composite_coloring, decompose_composite_twin, CompositeDecomposition, CompositeSpec,
    TwinBoundCheck,
};
pub use extremal::{extremal_no_matchable, extremal_partition};

//! Twins in edge-colorings of complete ordered graphs.
//!
//! A *twin* of an edge-coloring `c` of `K_n` on the ordered vertex set
//! `1..=n` is a pair of disjoint increasing index lists `I`, `J` of equal
//! length whose consecutive edges carry the same colors position by
//! position. This crate provides:
//!
//! * the basic objects and validity checks ([`coloring`], [`sequences`]);
//! * reductions from string-twins and permutation weak-twins ([`reductions`]);
//! * constructive builders with guaranteed sizes ([`builder`]);
//! * exact maximum-twin search and exhaustive minima ([`oracle`]);
//! * adversarial constructions and the structural facts behind them
//!   ([`constructions`]);
//! * seeded generators ([`random`]) and text formats ([`io`]).

pub mod builder;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod io;
pub mod oracle;
pub mod random;
pub mod reductions;
pub mod sequences;

pub use coloring::{
    extend_twin, find_matchable_orientation, is_c_matching, relabel_palette, validate_twin, Color, EdgeColoring,
    MatchOrientation, Side, TwinPair, TwinVerdict,
};
pub use error::{Result, TwinError};
pub use sequences::{LetterString, Permutation, SignSequence};

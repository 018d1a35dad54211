//! Fixed, seeded inputs shared by the benchmarks.

use twin_core::random::{random_coloring, random_permutation};
use twin_core::{EdgeColoring, Permutation};

pub const SEED: u64 = 0x5eed;

pub fn coloring(n: usize, r: u32) -> EdgeColoring {
    random_coloring(n, r, SEED ^ (n as u64) << 8 ^ r as u64)
}

pub fn permutation_pair(len: usize) -> (Permutation, Permutation) {
    (random_permutation(len, SEED), random_permutation(len, SEED + 1))
}

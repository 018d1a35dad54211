//! Seeded generators for colorings, strings and permutations.
//!
//! Every draw goes through ChaCha8 seeded with [`rng`]; uniform integer
//! ranges use `rand`'s unbiased sampling, and permutations use a
//! Fisher-Yates shuffle. The same seed always yields the same object.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{edge_count, Color, EdgeColoring};
use crate::sequences::{LetterString, Permutation};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for case `index` under `master`. Cases are independent of how many
/// other cases exist.
pub fn case_seed(master: u64, index: u64) -> u64 {
    // SplitMix64 finalizer over the mixed pair.
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn coloring_with(n: usize, r: Color, rng: &mut impl Rng) -> EdgeColoring {
    let colors = (0..edge_count(n)).map(|_| rng.gen_range(1..=r)).collect();
    EdgeColoring::from_colors(n, r, colors).expect("palette must be positive")
}

pub fn string_with(n: usize, r: Color, rng: &mut impl Rng) -> LetterString {
    let letters = (0..n).map(|_| rng.gen_range(1..=r)).collect();
    LetterString::new(r, letters).expect("palette must be positive")
}

pub fn permutation_with(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut values: Vec<usize> = (1..=n).collect();
    values.shuffle(rng);
    Permutation::new(values).expect("shuffle of 1..=n")
}

/// Uniform r-coloring of `K_n`.
///
/// # Panics
/// If `r == 0`.
pub fn random_coloring(n: usize, r: Color, seed: u64) -> EdgeColoring {
    coloring_with(n, r, &mut rng(seed))
}

/// Uniform string in `[r]^n`.
///
/// # Panics
/// If `r == 0`.
pub fn random_string(n: usize, r: Color, seed: u64) -> LetterString {
    string_with(n, r, &mut rng(seed))
}

pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    permutation_with(n, &mut rng(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(random_coloring(12, 3, 7), random_coloring(12, 3, 7));
        assert_ne!(random_coloring(12, 3, 7), random_coloring(12, 3, 8));
        assert_eq!(random_string(50, 4, 1), random_string(50, 4, 1));
        assert_eq!(random_permutation(30, 9), random_permutation(30, 9));
    }

    #[test]
    fn permutation_is_valid() {
        for seed in 0..20 {
            let p = random_permutation(17, seed);
            assert!(Permutation::new(p.values().to_vec()).is_ok());
        }
    }

    #[test]
    fn letter_frequencies_within_three_sigma() {
        // Binomial(1e5, 1/2): sigma = sqrt(1e5 / 4) ~= 158.11, so 3 sigma ~= 474.3.
        let n = 100_000;
        for seed in [0, 1, 42] {
            let x = random_string(n, 2, seed);
            let ones = x.letters().iter().filter(|&&l| l == 1).count() as f64;
            let sigma = (n as f64 * 0.25).sqrt();
            assert!((ones - n as f64 / 2.0).abs() <= 3.0 * sigma, "seed {seed}: {ones}");
        }
    }

    #[test]
    fn case_seeds_are_distinct() {
        let seeds: std::collections::HashSet<u64> = (0..1000).map(|i| case_seed(5, i)).collect();
        assert_eq!(seeds.len(), 1000);
        assert_eq!(case_seed(5, 3), case_seed(5, 3));
    }
}

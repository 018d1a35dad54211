//! Strings over `[r]`, permutations, sign sequences, and their twin notions.

use serde::{Deserialize, Serialize};

use crate::coloring::{structural_verdict, Color, TwinVerdict};
use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLetterString")]
pub struct LetterString {
    palette: Color,
    letters: Vec<Color>,
}

#[derive(Deserialize)]
struct RawLetterString {
    palette: Color,
    letters: Vec<Color>,
}

impl TryFrom<RawLetterString> for LetterString {
    type Error = crate::error::TwinError;

    fn try_from(raw: RawLetterString) -> Result<Self> {
        LetterString::new(raw.palette, raw.letters)
    }
}

impl LetterString {
    pub fn new(palette: Color, letters: Vec<Color>) -> Result<Self> {
        if palette == 0 {
            return invalid("palette size must be positive");
        }
        if let Some(bad) = letters.iter().find(|&&l| l == 0 || l > palette) {
            return invalid(format!("letter {bad} outside 1..={palette}"));
        }
        Ok(Self { palette, letters })
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn letters(&self) -> &[Color] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Color {
        self.letters[i - 1]
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return invalid(format!("{values:?} is not a permutation of 1..={n}"));
            }
        }
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (1..=n).collect() }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `pi(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    /// The `k`-th (0-based) permutation of `[n]` in lexicographic order.
    pub fn unrank(n: usize, mut k: u64) -> Permutation {
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut fact: Vec<u64> = vec![1; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1].saturating_mul(i as u64);
        }
        let mut values = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let idx = (k / fact[i]) as usize;
            k %= fact[i];
            values.push(pool.remove(idx));
        }
        Permutation { values }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = crate::error::TwinError;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

/// `+1` for an ascent, `-1` for a descent, one entry per consecutive pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignSequence(pub Vec<i8>);

pub fn sign_sequence(pi: &Permutation) -> SignSequence {
    SignSequence(pi.values.windows(2).map(|w| if w[0] < w[1] { 1 } else { -1 }).collect())
}

/// String-twin check: disjoint increasing `I`, `J` with `x(i_t) = x(j_t)` for all `t`.
pub fn validate_string_twin(x: &LetterString, left: &[usize], right: &[usize]) -> Result<TwinVerdict> {
    if let Some(v) = structural_verdict(left, right, x.len())? {
        return Ok(v);
    }
    Ok(match left.iter().zip(right).position(|(&i, &j)| x.at(i) != x.at(j)) {
        Some(p) => TwinVerdict::Mismatch { position: p + 1 },
        None => TwinVerdict::Valid,
    })
}

/// Weak-twin check: the restrictions of `pi` to `I` and `J` have the same sign sequence.
pub fn validate_weak_twin(pi: &Permutation, left: &[usize], right: &[usize]) -> Result<TwinVerdict> {
    if let Some(v) = structural_verdict(left, right, pi.len())? {
        return Ok(v);
    }
    let ascent = |a: &[usize]| pi.at(a[0]) < pi.at(a[1]);
    Ok(match left.windows(2).zip(right.windows(2)).position(|(a, b)| ascent(a) != ascent(b)) {
        Some(p) => TwinVerdict::Mismatch { position: p + 1 },
        None => TwinVerdict::Valid,
    })
}

/// Length of a longest common subsequence of the two value sequences.
pub fn lcs_length(a: &Permutation, b: &Permutation) -> Result<usize> {
    if a.len() != b.len() {
        return invalid(format!("permutation lengths differ: {} vs {}", a.len(), b.len()));
    }
    Ok(lcs_of_slices(&a.values, &b.values))
}

/// Classic quadratic LCS table, two rolling rows.
pub fn lcs_of_slices<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + 1 } else { cur[j].max(prev[j + 1]) };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

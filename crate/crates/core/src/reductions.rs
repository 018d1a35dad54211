//! Encodings of permutations and strings as 2-colorings / r-colorings whose
//! twins correspond to weak-twins and string-twins.

use crate::coloring::EdgeColoring;
use crate::error::{invalid, Result};
use crate::sequences::{LetterString, Permutation};

/// Color of an ascending pair in [`coloring_from_permutation`].
pub const ASCENT: u32 = 1;
/// Color of a descending pair in [`coloring_from_permutation`].
pub const DESCENT: u32 = 2;

/// `c{i < j} = 1` iff `pi(i) < pi(j)`, else 2. Twins of the result are exactly
/// the weak-twins of `pi`.
pub fn coloring_from_permutation(pi: &Permutation) -> Result<EdgeColoring> {
    if pi.len() < 2 {
        return invalid(format!("permutation of length {} has no edges", pi.len()));
    }
    EdgeColoring::from_fn(pi.len(), 2, |i, j| if pi.at(i) < pi.at(j) { ASCENT } else { DESCENT })
}

/// `c{i < j} = x(i)`. `(I, J)` is a twin of the result iff dropping both
/// maxima leaves a string-twin of `x`.
pub fn coloring_from_string(x: &LetterString) -> Result<EdgeColoring> {
    if x.len() < 2 {
        return invalid(format!("string of length {} has no edges", x.len()));
    }
    EdgeColoring::from_fn(x.len(), x.palette(), |i, _| x.at(i))
}

use crate::builder::BipartiteColoring;
use crate::coloring::Color;
use crate::error::{invalid, precondition, Result};

/// A = `1..=size_a`, B the next `size_b` labels, `c(a, b) = a`. With at most
/// `r` A-vertices every A-vertex has its own color, so no B-pair is matchable
/// through two distinct A-vertices.
pub fn extremal_no_matchable(size_a: usize, size_b: usize, r: Color) -> Result<BipartiteColoring> {
    if size_a > r as usize {
        return precondition(format!("|A| = {size_a} exceeds palette {r}"));
    }
    let a: Vec<usize> = (1..=size_a).collect();
    let b: Vec<usize> = (size_a + 1..=size_a + size_b).collect();
    BipartiteColoring::from_fn(a, b, r, |a, _| a as Color)
}

/// `|A| = r + 1`, `|B| = rk` split into `r` runs of `k`; run `i` is colored `i`
/// towards all of A. Matchable B-pairs stay within a run.
pub fn extremal_partition(r: usize, k: usize) -> Result<BipartiteColoring> {
    if r == 0 || k == 0 {
        return invalid("r and k must be positive");
    }
    let a: Vec<usize> = (1..=r + 1).collect();
    let b: Vec<usize> = (r + 2..=r + 1 + r * k).collect();
    let first_b = r + 2;
    BipartiteColoring::from_fn(a, b, r as Color, |_, b| ((b - first_b) / k + 1) as Color)
}

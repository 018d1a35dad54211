//! Edge colorings of the complete ordered graph on `[n]`, twins, and
//! c-matchings.
//!
//! All vertex indices are 1-based. A coloring stores one color per
//! unordered pair `{i < j}` in a dense upper-triangular array.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Result, TwinError};

pub type Color = u32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    palette: Color,
    colors: Vec<Color>,
}

/// Number of edges of `K_n`.
pub fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `{i < j}` in upper-triangular row-major order.
#[inline]
fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    let row = i - 1;
    row * n - row * (row + 1) / 2 + (j - i - 1)
}

impl EdgeColoring {
    /// Builds a coloring from a rule evaluated on every pair `i < j`.
    pub fn from_fn(n: usize, palette: Color, mut rule: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let mut colors = Vec::with_capacity(edge_count(n));
        for i in 1..=n {
            for j in i + 1..=n {
                colors.push(rule(i, j));
            }
        }
        Self::from_colors(n, palette, colors)
    }

    /// Wraps colors listed in upper-triangular order: `{1,2}, {1,3}, ..., {n-1,n}`.
    pub fn from_colors(n: usize, palette: Color, colors: Vec<Color>) -> Result<Self> {
        if palette == 0 {
            return invalid("palette size must be positive");
        }
        if colors.len() != edge_count(n) {
            return invalid(format!("expected {} edge colors for n = {n}, got {}", edge_count(n), colors.len()));
        }
        if let Some(bad) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return invalid(format!("color {bad} outside palette 1..={palette}"));
        }
        Ok(Self { n, palette, colors })
    }

    pub fn monochromatic(n: usize, palette: Color) -> Result<Self> {
        Self::from_colors(n, palette, vec![1; edge_count(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    /// Colors in upper-triangular order.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// The color of the edge `{i, j}`; argument order does not matter.
    pub fn color(&self, i: usize, j: usize) -> Result<Color> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(TwinError::Loop(i));
        }
        Ok(self.color_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn color_unchecked(&self, i: usize, j: usize) -> Color {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.colors[tri_index(self.n, a, b)]
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(TwinError::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }

    /// The coloring obtained by reversing vertex order, `i -> n + 1 - i`.
    pub fn reversed(&self) -> EdgeColoring {
        let n = self.n;
        Self::from_fn(n, self.palette, |i, j| self.color_unchecked(n + 1 - j, n + 1 - i))
            .expect("reversal preserves palette")
    }

    /// Restriction to the vertex list `vertices` (relabelled `1..=len` in list order).
    pub fn induced(&self, vertices: &[usize]) -> Result<EdgeColoring> {
        for &v in vertices {
            self.check_index(v)?;
        }
        let mut colors = Vec::with_capacity(edge_count(vertices.len()));
        for (p, &a) in vertices.iter().enumerate() {
            for &b in &vertices[p + 1..] {
                if a == b {
                    return Err(TwinError::Loop(a));
                }
                colors.push(self.color_unchecked(a, b));
            }
        }
        Self::from_colors(vertices.len(), self.palette, colors)
    }

    /// Dense `(n + 1) x (n + 1)` symmetric table; row/column 0 and the diagonal are 0.
    pub fn dense_table(&self) -> Vec<Color> {
        let stride = self.n + 1;
        let mut table = vec![0; stride * stride];
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let c = self.color_unchecked(i, j);
                table[i * stride + j] = c;
                table[j * stride + i] = c;
            }
        }
        table
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(n={}, r={}, {:?})", self.n, self.palette, self.colors)
    }
}

/// Applies the palette bijection `sigma`, where `sigma[k - 1]` is the image of color `k`.
pub fn relabel_palette(c: &EdgeColoring, sigma: &[Color]) -> Result<EdgeColoring> {
    let r = c.palette as usize;
    if sigma.len() != r {
        return invalid(format!("permutation of length {} for palette {r}", sigma.len()));
    }
    let mut seen = vec![false; r];
    for &s in sigma {
        if s == 0 || s as usize > r || std::mem::replace(&mut seen[s as usize - 1], true) {
            return invalid(format!("{sigma:?} is not a bijection of 1..={r}"));
        }
    }
    let colors = c.colors.iter().map(|&k| sigma[k as usize - 1]).collect();
    Ok(EdgeColoring { n: c.n, palette: c.palette, colors })
}

/// A candidate twin: two index lists of (intended) equal length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwinPair {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl TwinPair {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Self {
        Self { left, right }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.left.len().min(self.right.len())
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// `{max(I), max(J)}` as stored, `(max I, max J)`.
    pub fn maxima(&self) -> Option<(usize, usize)> {
        Some((*self.left.last()?, *self.right.last()?))
    }

    pub fn swapped(&self) -> TwinPair {
        TwinPair::new(self.right.clone(), self.left.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of a twin validity check, naming the first violated condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwinVerdict {
    Valid,
    SizeMismatch {
        left: usize,
        right: usize,
    },
    /// `position` is the 1-based slot whose index does not exceed its predecessor.
    NotIncreasing {
        side: Side,
        position: usize,
    },
    /// Smallest index shared by both sides.
    Overlap {
        index: usize,
    },
    /// First 1-based position `t` at which the compared values differ.
    Mismatch {
        position: usize,
    },
}

impl TwinVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TwinVerdict::Valid)
    }
}

/// Range, size, monotonicity and disjointness checks shared by all twin notions.
/// Returns `Ok(None)` when the pair is structurally sound.
pub(crate) fn structural_verdict(left: &[usize], right: &[usize], n: usize) -> Result<Option<TwinVerdict>> {
    for &i in left.iter().chain(right) {
        if i == 0 || i > n {
            return Err(TwinError::IndexOutOfRange { index: i, n });
        }
    }
    if left.len() != right.len() {
        return Ok(Some(TwinVerdict::SizeMismatch { left: left.len(), right: right.len() }));
    }
    for (side, seq) in [(Side::Left, left), (Side::Right, right)] {
        if let Some(p) = seq.windows(2).position(|w| w[0] >= w[1]) {
            return Ok(Some(TwinVerdict::NotIncreasing { side, position: p + 2 }));
        }
    }
    // Both sorted: merge to find the smallest common index.
    let (mut a, mut b) = (0, 0);
    while a < left.len() && b < right.len() {
        match left[a].cmp(&right[b]) {
            std::cmp::Ordering::Less => a += 1,
            std::cmp::Ordering::Greater => b += 1,
            std::cmp::Ordering::Equal => {
                return Ok(Some(TwinVerdict::Overlap { index: left[a] }));
            }
        }
    }
    Ok(None)
}

/// Checks that `t` is a twin of `c`: equal sizes, disjoint, and
/// `c(i_t, i_{t+1}) = c(j_t, j_{t+1})` for every consecutive position.
pub fn validate_twin(c: &EdgeColoring, t: &TwinPair) -> Result<TwinVerdict> {
    if let Some(v) = structural_verdict(&t.left, &t.right, c.n)? {
        return Ok(v);
    }
    let mismatch = t
        .left
        .windows(2)
        .zip(t.right.windows(2))
        .position(|(a, b)| c.color_unchecked(a[0], a[1]) != c.color_unchecked(b[0], b[1]));
    Ok(match mismatch {
        Some(p) => TwinVerdict::Mismatch { position: p + 1 },
        None => TwinVerdict::Valid,
    })
}

/// Records which element of one 2-set is paired with which element of another:
/// `from.0` pairs with `to.0` and `from.1` with `to.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatchOrientation {
    pub from: (usize, usize),
    pub to: (usize, usize),
}

impl MatchOrientation {
    pub fn new(from: (usize, usize), to: (usize, usize)) -> Result<Self> {
        if from.0 == from.1 || to.0 == to.1 {
            return invalid(format!("{from:?} -> {to:?} does not pair two 2-sets"));
        }
        Ok(Self { from, to })
    }

    /// The partner of `x` (an element of `from`).
    pub fn partner(&self, x: usize) -> Option<usize> {
        if x == self.from.0 {
            Some(self.to.0)
        } else if x == self.from.1 {
            Some(self.to.1)
        } else {
            None
        }
    }

    pub fn transposed(&self) -> MatchOrientation {
        MatchOrientation { from: self.to, to: self.from }
    }
}

/// `(x1, x2), (y1, y2)` form a c-matching iff `c{x1, y1} = c{x2, y2}`.
pub fn is_c_matching(c: &EdgeColoring, p: (usize, usize), q: (usize, usize)) -> Result<bool> {
    Ok(c.color(p.0, q.0)? == c.color(p.1, q.1)?)
}

fn sorted_pair(u: (usize, usize)) -> Result<(usize, usize)> {
    match u.0.cmp(&u.1) {
        std::cmp::Ordering::Less => Ok(u),
        std::cmp::Ordering::Greater => Ok((u.1, u.0)),
        std::cmp::Ordering::Equal => invalid(format!("{u:?} is not a 2-set")),
    }
}

/// Looks for an ordering of the 2-sets `u`, `v` that forms a c-matching.
/// Tries `min u <-> min v` first, then `min u <-> max v`.
pub fn find_matchable_orientation(
    c: &EdgeColoring,
    u: (usize, usize),
    v: (usize, usize),
) -> Result<Option<MatchOrientation>> {
    let u = sorted_pair(u)?;
    let v = sorted_pair(v)?;
    for x in [u.0, u.1, v.0, v.1] {
        c.check_index(x)?;
    }
    if u.0 == v.0 || u.0 == v.1 || u.1 == v.0 || u.1 == v.1 {
        return invalid(format!("2-sets {u:?} and {v:?} overlap"));
    }
    for to in [(v.0, v.1), (v.1, v.0)] {
        if c.color_unchecked(u.0, to.0) == c.color_unchecked(u.1, to.1) {
            return Ok(Some(MatchOrientation { from: u, to }));
        }
    }
    Ok(None)
}

/// Extends a twin by one position into the 2-set `v`, which lies entirely
/// above the twin and is c-matched with `{max I, max J}` by `o`.
pub fn extend_twin(c: &EdgeColoring, t: &TwinPair, v: (usize, usize), o: &MatchOrientation) -> Result<TwinPair> {
    if !validate_twin(c, t)?.is_valid() {
        return precondition("twin to extend is not valid");
    }
    let Some((max_i, max_j)) = t.maxima() else {
        return precondition("twin to extend is empty");
    };
    let v = sorted_pair(v)?;
    c.check_index(v.1)?;
    if v.0 <= max_i.max(max_j) {
        return precondition(format!("min(v) = {} does not exceed max(u) = {}", v.0, max_i.max(max_j)));
    }
    let (Some(next_i), Some(next_j)) = (o.partner(max_i), o.partner(max_j)) else {
        return precondition(format!("orientation {o:?} does not start from ({max_i}, {max_j})"));
    };
    if sorted_pair((next_i, next_j))? != v {
        return precondition(format!("orientation {o:?} does not end in {v:?}"));
    }
    if !is_c_matching(c, (max_i, max_j), (next_i, next_j))? {
        return precondition(format!("{o:?} is not a c-matching"));
    }
    let mut out = t.clone();
    out.left.push(next_i);
    out.right.push(next_j);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rainbow_k4() -> EdgeColoring {
        EdgeColoring::from_colors(4, 6, (1..=6).collect()).unwrap()
    }

    #[test]
    fn color_lookup() {
        let mono = EdgeColoring::monochromatic(5, 1).unwrap();
        assert_eq!(mono.color(2, 5).unwrap(), 1);
        let c = EdgeColoring::from_fn(3, 2, |i, j| if (i, j) == (1, 2) { 2 } else { 1 }).unwrap();
        assert_eq!(c.color(2, 1).unwrap(), 2);
        assert_eq!(c.color(3, 3), Err(TwinError::Loop(3)));
        assert!(matches!(c.color(0, 1), Err(TwinError::IndexOutOfRange { .. })));
        assert!(matches!(c.color(1, 4), Err(TwinError::IndexOutOfRange { .. })));
    }

    #[test]
    fn triangular_layout_is_row_major() {
        let c = rainbow_k4();
        let expected = [((1, 2), 1), ((1, 3), 2), ((1, 4), 3), ((2, 3), 4), ((2, 4), 5), ((3, 4), 6)];
        for ((i, j), col) in expected {
            assert_eq!(c.color(i, j).unwrap(), col);
        }
    }

    #[test]
    fn rejects_bad_colors() {
        assert!(EdgeColoring::from_colors(3, 2, vec![1, 2, 3]).is_err());
        assert!(EdgeColoring::from_colors(3, 2, vec![1, 0, 1]).is_err());
        assert!(EdgeColoring::from_colors(3, 2, vec![1, 1]).is_err());
    }

    #[test]
    fn twin_verdicts() {
        let mono = EdgeColoring::monochromatic(4, 1).unwrap();
        let t = TwinPair::new(vec![1, 2], vec![3, 4]);
        assert_eq!(validate_twin(&mono, &t).unwrap(), TwinVerdict::Valid);
        let overlap = TwinPair::new(vec![1, 3], vec![2, 3]);
        assert_eq!(validate_twin(&mono, &overlap).unwrap(), TwinVerdict::Overlap { index: 3 });
        let uneven = TwinPair::new(vec![1, 3], vec![2]);
        assert!(matches!(validate_twin(&mono, &uneven).unwrap(), TwinVerdict::SizeMismatch { .. }));
        let unsorted = TwinPair::new(vec![3, 1], vec![2, 4]);
        assert_eq!(
            validate_twin(&mono, &unsorted).unwrap(),
            TwinVerdict::NotIncreasing { side: Side::Left, position: 2 }
        );
        assert!(validate_twin(&mono, &TwinPair::new(vec![1], vec![5])).is_err());

        let rb = rainbow_k4();
        assert_eq!(validate_twin(&rb, &t).unwrap(), TwinVerdict::Mismatch { position: 1 });
        assert!(validate_twin(&rb, &TwinPair::empty()).unwrap().is_valid());
        assert!(validate_twin(&rb, &TwinPair::new(vec![4], vec![1])).unwrap().is_valid());
    }

    #[test]
    fn c_matching() {
        let mono = EdgeColoring::monochromatic(4, 1).unwrap();
        assert!(is_c_matching(&mono, (1, 2), (3, 4)).unwrap());
        let c = EdgeColoring::from_fn(4, 2, |i, j| if (i, j) == (2, 4) { 2 } else { 1 }).unwrap();
        assert!(!is_c_matching(&c, (1, 2), (3, 4)).unwrap());
        assert_eq!(is_c_matching(&c, (1, 2), (1, 4)), Err(TwinError::Loop(1)));
    }

    #[test]
    fn matchable_orientation() {
        let mono = EdgeColoring::monochromatic(4, 1).unwrap();
        let o = find_matchable_orientation(&mono, (1, 2), (3, 4)).unwrap().unwrap();
        assert_eq!(o, MatchOrientation { from: (1, 2), to: (3, 4) });
        assert_eq!(find_matchable_orientation(&rainbow_k4(), (1, 2), (3, 4)).unwrap(), None);
        assert!(find_matchable_orientation(&mono, (1, 2), (2, 3)).is_err());

        // Only the crossed pairing {1,4},{2,3} matches.
        let c = EdgeColoring::from_fn(4, 3, |i, j| match (i, j) {
            (1, 4) | (2, 3) => 3,
            (1, 3) => 1,
            _ => 2,
        })
        .unwrap();
        let o = find_matchable_orientation(&c, (2, 1), (3, 4)).unwrap().unwrap();
        assert_eq!(o, MatchOrientation { from: (1, 2), to: (4, 3) });
    }

    #[test]
    fn extension() {
        let mono = EdgeColoring::monochromatic(6, 1).unwrap();
        let t = TwinPair::new(vec![1], vec![2]);
        let o = MatchOrientation::new((1, 2), (3, 4)).unwrap();
        assert_eq!(extend_twin(&mono, &t, (3, 4), &o).unwrap(), TwinPair::new(vec![1, 3], vec![2, 4]));
        let o = MatchOrientation::new((1, 2), (2, 5)).unwrap();
        assert!(matches!(extend_twin(&mono, &t, (2, 5), &o), Err(TwinError::Precondition(_))));

        let c = EdgeColoring::from_fn(4, 2, |i, j| if (i, j) == (2, 4) { 2 } else { 1 }).unwrap();
        let o = MatchOrientation::new((1, 2), (3, 4)).unwrap();
        assert!(matches!(extend_twin(&c, &t, (3, 4), &o), Err(TwinError::Precondition(_))));
        // The crossed orientation works: c{1,4} = c{2,3} = 1.
        let o = MatchOrientation::new((2, 1), (3, 4)).unwrap();
        assert_eq!(extend_twin(&c, &t, (3, 4), &o).unwrap(), TwinPair::new(vec![1, 4], vec![2, 3]));
    }

    #[test]
    fn relabel() {
        let c = EdgeColoring::from_colors(3, 2, vec![1, 2, 2]).unwrap();
        assert_eq!(relabel_palette(&c, &[1, 2]).unwrap(), c);
        let once = relabel_palette(&c, &[2, 1]).unwrap();
        assert_eq!(once.colors(), &[2, 1, 1]);
        assert_eq!(relabel_palette(&once, &[2, 1]).unwrap(), c);
        assert!(relabel_palette(&c, &[1, 1]).is_err());
        assert!(relabel_palette(&c, &[1]).is_err());
    }

    #[test]
    fn reversal_maps_edges() {
        let c = rainbow_k4();
        let rev = c.reversed();
        for i in 1..=4 {
            for j in i + 1..=4 {
                assert_eq!(rev.color(i, j).unwrap(), c.color(5 - i, 5 - j).unwrap());
            }
        }
        assert_eq!(rev.reversed(), c);
    }
}

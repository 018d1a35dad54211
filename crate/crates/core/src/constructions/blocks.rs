use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coloring::{structural_verdict, Color, EdgeColoring, TwinPair, TwinVerdict};
use crate::error::{invalid, Result, TwinError};
use crate::oracle::{fold_twins, ColoringRule};
use crate::sequences::{LetterString, Permutation};

/// Longest profile the constructors will materialize.
pub const MAX_PROFILE_LEN: usize = 1 << 24;

/// Consecutive blocks `E_1, ..., E_m` of sizes `3^{x_k}` covering `[L_m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBlockProfile")]
pub struct BlockProfile {
    r: Color,
    x: LetterString,
    weights: Vec<usize>,
    /// `L_0 = 0, L_1, ..., L_m`.
    prefix_sums: Vec<usize>,
    /// `block_of[i - 1] = k_i`.
    block_of: Vec<usize>,
}

#[derive(Deserialize)]
struct RawBlockProfile {
    x: LetterString,
}

impl TryFrom<RawBlockProfile> for BlockProfile {
    type Error = TwinError;

    fn try_from(raw: RawBlockProfile) -> Result<Self> {
        BlockProfile::new(raw.x)
    }
}

impl BlockProfile {
    pub fn new(x: LetterString) -> Result<Self> {
        let too_long = || TwinError::Resource {
            what: "block profile length",
            required: u128::MAX,
            budget: MAX_PROFILE_LEN as u128,
        };
        let mut weights = Vec::with_capacity(x.len());
        let mut prefix_sums = vec![0usize];
        for &letter in x.letters() {
            let w = 3usize.checked_pow(letter).ok_or_else(too_long)?;
            let total = prefix_sums.last().unwrap().checked_add(w).ok_or_else(too_long)?;
            if total > MAX_PROFILE_LEN {
                return Err(TwinError::Resource {
                    what: "block profile length",
                    required: total as u128,
                    budget: MAX_PROFILE_LEN as u128,
                });
            }
            weights.push(w);
            prefix_sums.push(total);
        }
        let block_of = weights.iter().enumerate().flat_map(|(k, &w)| std::iter::repeat_n(k + 1, w)).collect();
        Ok(Self { r: x.palette(), x, weights, prefix_sums, block_of })
    }

    pub fn palette(&self) -> Color {
        self.r
    }

    pub fn x(&self) -> &LetterString {
        &self.x
    }

    /// Number of blocks `m`.
    pub fn m(&self) -> usize {
        self.weights.len()
    }

    /// `L_m`, the number of points.
    pub fn len(&self) -> usize {
        *self.prefix_sums.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn prefix_sums(&self) -> &[usize] {
        &self.prefix_sums
    }

    /// `k_i`, the block containing point `i`.
    pub fn block(&self, i: usize) -> usize {
        self.block_of[i - 1]
    }

    /// `E_k` as an inclusive range of points.
    pub fn block_range(&self, k: usize) -> std::ops::RangeInclusive<usize> {
        self.prefix_sums[k - 1] + 1..=self.prefix_sums[k]
    }

    fn color(&self, i: usize, j: usize) -> Color {
        if self.block(i) == self.block(j) {
            1
        } else {
            2
        }
    }
}

/// Each block written in decreasing order, later blocks taking larger values:
/// `π(L_{k-1} + t) = L_k + 1 - t`.
pub fn skew_sum_permutation(profile: &BlockProfile) -> Permutation {
    let values = (1..=profile.len())
        .map(|i| {
            let k = profile.block(i);
            let t = i - profile.prefix_sums[k - 1];
            profile.prefix_sums[k] + 1 - t
        })
        .collect();
    Permutation::new(values).expect("blocks are reversed in place")
}

/// Color 1 inside a block, 2 across blocks.
pub fn block_coloring(profile: &BlockProfile) -> Result<EdgeColoring> {
    if profile.len() < 2 {
        return invalid(format!("block coloring needs L_m >= 2, got {}", profile.len()));
    }
    EdgeColoring::from_fn(profile.len(), 2, |i, j| profile.color(i, j))
}

/// Twin check against the block coloring without materializing it.
pub fn validate_block_twin(profile: &BlockProfile, t: &TwinPair) -> Result<TwinVerdict> {
    if let Some(v) = structural_verdict(&t.left, &t.right, profile.len())? {
        return Ok(v);
    }
    let mismatch = t
        .left
        .windows(2)
        .zip(t.right.windows(2))
        .position(|(a, b)| profile.color(a[0], a[1]) != profile.color(b[0], b[1]));
    Ok(match mismatch {
        Some(p) => TwinVerdict::Mismatch { position: p + 1 },
        None => TwinVerdict::Valid,
    })
}

fn require_twin(profile: &BlockProfile, t: &TwinPair) -> Result<()> {
    let verdict = validate_block_twin(profile, t)?;
    if verdict.is_valid() {
        Ok(())
    } else {
        invalid(format!("not a twin of the block coloring: {verdict:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    /// One vertex, no edge.
    Singleton,
    /// One vertex carrying a loop.
    Loop,
    /// At least two vertices `v_1 < ... < v_q`, edges exactly `{v_t, v_{t+1}}`.
    Path,
    /// Anything else.
    Irregular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

/// The graph on blocks `[m]` joining the blocks of `i_t` and `j_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockGraph {
    pub m: usize,
    /// Distinct edges `(u, v)` with `u <= v`; `u == v` is a loop.
    pub edges: BTreeSet<(usize, usize)>,
    /// Components ordered by smallest vertex.
    pub components: Vec<Component>,
}

impl BlockGraph {
    /// Number of components over the whole vertex set.
    pub fn chi(&self) -> usize {
        self.components.len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn classify(vertices: &[usize], edges: &BTreeSet<(usize, usize)>) -> ComponentKind {
    let inside: BTreeSet<(usize, usize)> =
        edges.iter().copied().filter(|&(a, _)| vertices.binary_search(&a).is_ok()).collect();
    if let [v] = vertices {
        return if inside.contains(&(*v, *v)) { ComponentKind::Loop } else { ComponentKind::Singleton };
    }
    let path: BTreeSet<(usize, usize)> = vertices.windows(2).map(|w| (w[0], w[1])).collect();
    if inside == path {
        ComponentKind::Path
    } else {
        ComponentKind::Irregular
    }
}

pub fn twin_block_graph(profile: &BlockProfile, t: &TwinPair) -> Result<BlockGraph> {
    require_twin(profile, t)?;
    Ok(block_graph_unchecked(profile, t))
}

fn block_graph_unchecked(profile: &BlockProfile, t: &TwinPair) -> BlockGraph {
    let m = profile.m();
    let edges: BTreeSet<(usize, usize)> = t
        .left
        .iter()
        .zip(&t.right)
        .map(|(&i, &j)| {
            let (u, v) = (profile.block(i), profile.block(j));
            (u.min(v), u.max(v))
        })
        .collect();
    let mut parent: Vec<usize> = (0..=m).collect();
    for &(u, v) in &edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent[ru.max(rv)] = ru.min(rv);
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    for v in 1..=m {
        let root = find(&mut parent, v);
        groups[root].push(v);
    }
    let components = groups
        .into_iter()
        .filter(|g| !g.is_empty())
        .map(|vertices| {
            let kind = classify(&vertices, &edges);
            Component { vertices, kind }
        })
        .collect();
    BlockGraph { m, edges, components }
}

/// Blocks not contained in `I ∪ J`.
pub fn uncovered_blocks(profile: &BlockProfile, t: &TwinPair) -> Result<BTreeSet<usize>> {
    require_twin(profile, t)?;
    Ok(uncovered_unchecked(profile, t))
}

fn uncovered_unchecked(profile: &BlockProfile, t: &TwinPair) -> BTreeSet<usize> {
    let mut covered = vec![0usize; profile.m() + 1];
    for &i in t.left.iter().chain(&t.right) {
        covered[profile.block(i)] += 1;
    }
    (1..=profile.m()).filter(|&k| covered[k] < profile.weights[k - 1]).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockClaim {
    /// Components are singletons, loops or paths on consecutive sorted vertices.
    ComponentShape,
    /// A one-vertex component is never fully covered.
    LoopParity,
    /// A path vertex heavier than both neighbours is never fully covered.
    Dominance,
    /// A fully covered path has equal letters at its two ends.
    PathEndpoints,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimViolation {
    pub claim: BlockClaim,
    pub twin: TwinPair,
    pub detail: String,
}

/// Checks the four structural claims for one twin of the block coloring.
pub fn check_block_claims(profile: &BlockProfile, t: &TwinPair) -> Result<Vec<ClaimViolation>> {
    require_twin(profile, t)?;
    Ok(claims_unchecked(profile, t))
}

fn claims_unchecked(profile: &BlockProfile, t: &TwinPair) -> Vec<ClaimViolation> {
    let g = block_graph_unchecked(profile, t);
    let k_set = uncovered_unchecked(profile, t);
    let x = |k: usize| profile.x.at(k);
    let mut out = Vec::new();
    let mut flag = |claim, detail: String| out.push(ClaimViolation { claim, twin: t.clone(), detail });
    for comp in &g.components {
        let vs = &comp.vertices;
        match comp.kind {
            ComponentKind::Irregular => {
                flag(BlockClaim::ComponentShape, format!("component {vs:?} is not a path"));
            }
            ComponentKind::Singleton | ComponentKind::Loop => {
                if !k_set.contains(&vs[0]) {
                    flag(BlockClaim::LoopParity, format!("block {} is fully covered", vs[0]));
                }
            }
            ComponentKind::Path => {
                let (first, last) = (vs[0], vs[vs.len() - 1]);
                if vs.iter().all(|v| !k_set.contains(v)) && x(first) != x(last) {
                    flag(
                        BlockClaim::PathEndpoints,
                        format!("covered path {vs:?} has end letters {} and {}", x(first), x(last)),
                    );
                }
            }
        }
    }
    for k2 in 1..=g.m {
        let nbrs: Vec<usize> = g.neighbors(k2).collect();
        let heavier_than = |k: usize| x(k2) > x(k);
        let below = nbrs.iter().any(|&k1| k1 < k2 && heavier_than(k1));
        let above = nbrs.iter().any(|&k3| k3 > k2 && heavier_than(k3));
        if below && above && !k_set.contains(&k2) {
            flag(BlockClaim::Dominance, format!("dominant block {k2} is fully covered"));
        }
    }
    out
}

/// Outcome of checking every twin of one block coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockClaimSummary {
    pub twins_checked: u64,
    pub violation_count: u64,
    /// The first few violations in enumeration order.
    pub violations: Vec<ClaimViolation>,
}

const KEPT_VIOLATIONS: usize = 8;

/// Enumerates all twins of the block coloring (including the empty twin)
/// and checks the claims on each. Profiles longer than `max_len` are refused.
pub fn verify_block_claims(profile: &BlockProfile, max_len: usize) -> Result<BlockClaimSummary> {
    if profile.len() > max_len {
        return Err(TwinError::Resource {
            what: "block profile length for exhaustive twin enumeration",
            required: profile.len() as u128,
            budget: max_len as u128,
        });
    }
    let empty = BlockClaimSummary {
        twins_checked: 1,
        violation_count: 0,
        violations: claims_unchecked(profile, &TwinPair::empty()),
    };
    let empty = BlockClaimSummary { violation_count: empty.violations.len() as u64, ..empty };
    if profile.len() < 2 {
        return Ok(empty);
    }
    let rule = ColoringRule::new(&block_coloring(profile)?);
    let zero = || BlockClaimSummary { twins_checked: 0, violation_count: 0, violations: Vec::new() };
    let merge = |mut a: BlockClaimSummary, b: BlockClaimSummary| {
        a.twins_checked += b.twins_checked;
        a.violation_count += b.violation_count;
        let room = KEPT_VIOLATIONS.saturating_sub(a.violations.len());
        a.violations.extend(b.violations.into_iter().take(room));
        a
    };
    let rest = fold_twins(
        &rule,
        zero,
        |acc, t| {
            acc.twins_checked += 1;
            let found = claims_unchecked(profile, t);
            acc.violation_count += found.len() as u64;
            let room = KEPT_VIOLATIONS.saturating_sub(acc.violations.len());
            acc.violations.extend(found.into_iter().take(room));
        },
        merge,
    );
    Ok(merge(empty, rest))
}

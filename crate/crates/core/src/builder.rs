//! Constructive twin builders.
//!
//! Both builders grow a *ladder*: at level `t` they hold a small vertex set
//! `U_t` such that every pair of `U_t` is the pair of maxima of some twin of
//! size `t`. Each pair stores a parent pair one level down and the
//! c-matching that extends the parent's twin, so a twin of any level can be
//! rebuilt by walking parent pointers.
//!
//! * [`build_twin_general`] works for any palette size `r` and spends a fresh
//!   interval of `r^2 + 1` vertices per level, guaranteeing `floor(n / (r^2 + 1))`.
//! * [`build_twin_binary`] is specialised to two colors, keeps a triangle
//!   `U_t` and exposes only four new vertices per level, guaranteeing `floor(n / 4)`.

use std::collections::BTreeMap;

use crate::coloring::{validate_twin, Color, EdgeColoring, MatchOrientation, TwinPair};
use crate::error::{invalid, precondition, Result, TwinError};

/// An r-coloring of the complete bipartite graph between two disjoint vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteColoring {
    a: Vec<usize>,
    b: Vec<usize>,
    palette: Color,
    /// Row-major: `colors[ai * b.len() + bi]`.
    colors: Vec<Color>,
}

impl BipartiteColoring {
    pub fn from_fn(
        a: Vec<usize>,
        b: Vec<usize>,
        palette: Color,
        mut rule: impl FnMut(usize, usize) -> Color,
    ) -> Result<Self> {
        if a.iter().any(|x| b.contains(x)) {
            return invalid("bipartition sides overlap");
        }
        let mut colors = Vec::with_capacity(a.len() * b.len());
        for &x in &a {
            for &y in &b {
                let k = rule(x, y);
                if k == 0 || k > palette {
                    return invalid(format!("color {k} outside 1..={palette}"));
                }
                colors.push(k);
            }
        }
        Ok(Self { a, b, palette, colors })
    }

    /// The cross edges of `c` between `a` and `b`.
    pub fn induced(c: &EdgeColoring, a: &[usize], b: &[usize]) -> Result<Self> {
        for &v in a.iter().chain(b) {
            c.check_index(v)?;
        }
        Self::from_fn(a.to_vec(), b.to_vec(), c.palette(), |x, y| c.color_unchecked(x, y))
    }

    pub fn a_side(&self) -> &[usize] {
        &self.a
    }

    pub fn b_side(&self) -> &[usize] {
        &self.b
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    fn at(&self, ai: usize, bi: usize) -> Color {
        self.colors[ai * self.b.len() + bi]
    }

    /// Color of the cross edge `{a, b}`, by vertex label.
    pub fn color(&self, a: usize, b: usize) -> Option<Color> {
        let ai = self.a.iter().position(|&x| x == a)?;
        let bi = self.b.iter().position(|&y| y == b)?;
        Some(self.at(ai, bi))
    }

    /// Embeds into a coloring of `K_N`, `N` the largest label; edges inside a
    /// side (and unused vertices) get color 1.
    pub fn embed(&self) -> EdgeColoring {
        let n = self.a.iter().chain(&self.b).copied().max().unwrap_or(0);
        EdgeColoring::from_fn(n, self.palette, |i, j| self.color(i, j).or_else(|| self.color(j, i)).unwrap_or(1))
            .expect("colors already validated")
    }

    /// A 2-set `v` of the A side with `{b1, b2}`, `v` c-matchable, if one exists.
    pub fn matchable_via_a(&self, b1: usize, b2: usize) -> Option<MatchOrientation> {
        let i1 = self.b.iter().position(|&y| y == b1)?;
        let i2 = self.b.iter().position(|&y| y == b2)?;
        if i1 == i2 {
            return None;
        }
        for (p, &a1) in self.a.iter().enumerate() {
            for (q, &a2) in self.a.iter().enumerate() {
                if p != q && self.at(p, i1) == self.at(q, i2) {
                    return Some(MatchOrientation { from: (a1, a2), to: (b1, b2) });
                }
            }
        }
        None
    }
}

/// Result of [`popular_subset`]: a color `i` and the B-vertices assigned to it,
/// each with two distinct A-vertices joined to it in color `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PopularSubset {
    pub color: Color,
    pub members: Vec<usize>,
    pub witnesses: BTreeMap<usize, (usize, usize)>,
}

/// Finds a color `i` and at least `k + 1` B-vertices that are all `i`-popular.
///
/// Each `b` is assigned the smallest color it is popular for (one exists by
/// pigeonhole since `|A| = r + 1`); the smallest color whose class has more
/// than `k` members wins. Members are returned in B-list order and witnesses
/// are the first two A-vertices of that color.
pub fn popular_subset(bc: &BipartiteColoring, r: usize, k: usize) -> Result<PopularSubset> {
    if r == 0 || k == 0 {
        return invalid("r and k must be positive");
    }
    if bc.a.len() != r + 1 || bc.b.len() != r * k + 1 {
        return precondition(format!(
            "need |A| = {} and |B| = {}, got {} and {}",
            r + 1,
            r * k + 1,
            bc.a.len(),
            bc.b.len()
        ));
    }
    if bc.colors.iter().any(|&col| col as usize > r) {
        return precondition(format!("coloring uses colors beyond 1..={r}"));
    }
    let mut classes: Vec<Vec<(usize, (usize, usize))>> = vec![Vec::new(); r + 1];
    for (bi, &b) in bc.b.iter().enumerate() {
        let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
        for (ai, &a) in bc.a.iter().enumerate() {
            by_color[bc.at(ai, bi) as usize].push(a);
        }
        let (col, group) =
            by_color.iter().enumerate().find(|(_, group)| group.len() >= 2).expect("pigeonhole: |A| > r");
        let wit = (group[0], group[1]);
        classes[col].push((b, wit));
    }
    let (color, class) =
        classes.into_iter().enumerate().find(|(_, class)| class.len() > k).expect("pigeonhole: |B| > rk");
    Ok(PopularSubset {
        color: color as Color,
        members: class.iter().map(|&(b, _)| b).collect(),
        witnesses: class.into_iter().collect(),
    })
}

/// Picks distinct `a1, a2` with `c(a1, b1) = c(a2, b2) = i`; `a2` avoids `a1`.
/// The orientation pairs `a1` with `b1` and `a2` with `b2`.
pub fn matchable_pair_via(pop: &PopularSubset, b1: usize, b2: usize) -> Result<(usize, usize, MatchOrientation)> {
    if b1 == b2 {
        return invalid(format!("{b1} is not a 2-set"));
    }
    let (Some(&(a1, _)), Some(&(w, w2))) = (pop.witnesses.get(&b1), pop.witnesses.get(&b2)) else {
        return invalid(format!("{b1} or {b2} is not in the popular subset"));
    };
    let a2 = if w != a1 { w } else { w2 };
    Ok((a1, a2, MatchOrientation { from: (a1, a2), to: (b1, b2) }))
}

/// How a ladder pair was reached from the level below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Pair of the previous level (sorted).
    pub parent: (usize, usize),
    /// c-matching from the parent pair onto this pair.
    pub orientation: MatchOrientation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Level {
    pub members: Vec<usize>,
    /// Keyed by sorted pair; empty at level 1.
    pub witnesses: BTreeMap<(usize, usize), Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LadderState {
    levels: Vec<Level>,
}

fn sorted(p: (usize, usize)) -> (usize, usize) {
    if p.0 <= p.1 {
        p
    } else {
        (p.1, p.0)
    }
}

impl LadderState {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Level `t`, 1-based.
    pub fn level(&self, t: usize) -> Option<&Level> {
        t.checked_sub(1).and_then(|i| self.levels.get(i))
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    fn push(&mut self, level: Level) {
        self.levels.push(level);
    }

    /// Rebuilds the twin of size `t` whose maxima are `pair`.
    pub fn reconstruct(&self, t: usize, pair: (usize, usize)) -> Result<TwinPair> {
        let mut chain = Vec::with_capacity(t);
        let mut cur = sorted(pair);
        for s in (2..=t).rev() {
            let level = self.level(s).ok_or_else(|| TwinError::InvalidArgument(format!("no level {s}")))?;
            let w = level
                .witnesses
                .get(&cur)
                .ok_or_else(|| TwinError::InvalidArgument(format!("{cur:?} has no witness at level {s}")))?;
            chain.push(w.orientation);
            cur = w.parent;
        }
        let base = self.level(1).ok_or_else(|| TwinError::InvalidArgument("empty ladder".into()))?;
        if !(base.members.contains(&cur.0) && base.members.contains(&cur.1)) {
            return invalid(format!("{cur:?} is not a level-1 pair"));
        }
        let mut twin = TwinPair::new(vec![cur.0], vec![cur.1]);
        for o in chain.iter().rev() {
            let (i, j) = twin.maxima().expect("non-empty");
            let (Some(ni), Some(nj)) = (o.partner(i), o.partner(j)) else {
                return invalid(format!("orientation {o:?} does not start at ({i}, {j})"));
            };
            twin.left.push(ni);
            twin.right.push(nj);
        }
        Ok(twin)
    }

    /// Checks every pair of every level: its twin is valid, has the level's
    /// size, and ends in that pair.
    pub fn verify(&self, c: &EdgeColoring) -> Result<()> {
        for (idx, level) in self.levels.iter().enumerate() {
            let t = idx + 1;
            for (p, &u) in level.members.iter().enumerate() {
                for &v in &level.members[p + 1..] {
                    let twin = self.reconstruct(t, (u, v))?;
                    if !validate_twin(c, &twin)?.is_valid() || twin.len() != t {
                        return invalid(format!("level {t} pair ({u}, {v}) rebuilds {twin:?}"));
                    }
                    if twin.maxima().map(sorted) != Some(sorted((u, v))) {
                        return invalid(format!("level {t} pair ({u}, {v}) has maxima {:?}", twin.maxima()));
                    }
                }
            }
        }
        Ok(())
    }

    fn finish(self) -> BuildOutcome {
        let twin = match self.levels.last() {
            Some(level) if level.members.len() >= 2 => self
                .reconstruct(self.depth(), (level.members[0], level.members[1]))
                .expect("ladder is internally consistent"),
            _ => TwinPair::empty(),
        };
        BuildOutcome { twin, ladder: self }
    }
}

#[derive(Clone, Debug)]
pub struct BuildOutcome {
    pub twin: TwinPair,
    pub ladder: LadderState,
}

impl BuildOutcome {
    pub fn depth(&self) -> usize {
        self.ladder.depth()
    }
}

fn base_ladder(n: usize, width: usize) -> LadderState {
    let mut ladder = LadderState::default();
    if n >= 2 {
        ladder.push(Level { members: (1..=width.min(n)).collect(), witnesses: BTreeMap::new() });
    }
    ladder
}

/// Guaranteed size: `max(floor(n / (r^2 + 1)), min(1, floor(n / 2)))`.
pub fn general_bound(n: usize, r: usize) -> usize {
    (n / (r * r + 1)).max(usize::from(n >= 2))
}

/// Builds a twin of size at least `floor(n / (r^2 + 1))` in any r-coloring.
pub fn build_twin_general(c: &EdgeColoring) -> BuildOutcome {
    let n = c.n();
    let r = c.palette() as usize;
    let width = r * r + 1;
    let levels = n / width;
    if levels == 0 {
        return base_ladder(n, 2).finish();
    }
    let mut ladder = base_ladder(n, r + 1);
    for t in 2..=levels {
        let prev = &ladder.levels.last().expect("level 1 exists").members;
        let block: Vec<usize> = (t * width - r * r..=t * width).collect();
        debug_assert!(prev.iter().all(|&u| u < block[0]));
        let bc = BipartiteColoring::induced(c, prev, &block).expect("indices in range");
        let mut pop = popular_subset(&bc, r, r).expect("sizes match by construction");
        pop.members.sort_unstable();
        pop.members.truncate(r + 1);
        let mut witnesses = BTreeMap::new();
        for (p, &b1) in pop.members.iter().enumerate() {
            for &b2 in &pop.members[p + 1..] {
                let (a1, a2, orientation) = matchable_pair_via(&pop, b1, b2).expect("members have witnesses");
                witnesses.insert((b1, b2), Witness { parent: sorted((a1, a2)), orientation });
            }
        }
        ladder.push(Level { members: pop.members, witnesses });
    }
    ladder.finish()
}

/// Guaranteed size of [`build_twin_binary`]: `floor(n / 4)` for `n >= 4`.
pub fn binary_bound(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 | 3 => 1,
        _ => n / 4,
    }
}

/// Builds a twin of size at least `floor(n / 4)` in a 2-coloring.
pub fn build_twin_binary(c: &EdgeColoring) -> Result<BuildOutcome> {
    if c.palette() != 2 {
        return precondition(format!("binary builder needs palette 2, got {}", c.palette()));
    }
    let n = c.n();
    if n < 4 {
        return Ok(base_ladder(n, 2).finish());
    }
    let mut ladder = base_ladder(n, 3);
    loop {
        let (x, y, z) = match ladder.levels.last().expect("level 1 exists").members[..] {
            [x, y, z] => (x, y, z),
            _ => unreachable!("binary ladder levels are triples"),
        };
        if z + 4 > n {
            break;
        }
        let level = binary_step(c, x, y, z);
        debug_assert!(level.members.iter().all(|&v| v <= z + 4));
        ladder.push(level);
    }
    Ok(ladder.finish())
}

/// One level of the binary builder from the triangle `{x < y < z}`.
fn binary_step(c: &EdgeColoring, x: usize, y: usize, z: usize) -> Level {
    let col = |i, j| c.color_unchecked(i, j);
    let (mut ones, mut twos, mut split) = (Vec::new(), Vec::new(), Vec::new());
    for l in z..=z + 4 {
        match (col(x, l), col(y, l)) {
            (1, 1) => ones.push(l),
            (2, 2) => twos.push(l),
            _ => split.push(l),
        }
    }
    let mut witnesses = BTreeMap::new();
    let mut link = |parent: (usize, usize), from: (usize, usize), to: (usize, usize)| {
        witnesses.insert(sorted(to), Witness { parent: sorted(parent), orientation: MatchOrientation { from, to } });
    };
    // Same-class pairs extend {x, y} directly: c(x, p) = c(y, q).
    let (class, target) = if ones.len() >= twos.len() { (&ones, 1) } else { (&twos, 2) };
    let members = match split.len() {
        0 => {
            let pick = &class[..3];
            for (p, &u) in pick.iter().enumerate() {
                for &v in &pick[p + 1..] {
                    link((x, y), (x, y), (u, v));
                }
            }
            pick.to_vec()
        }
        1 | 2 => {
            let (a, a2, s) = (class[0], class[1], split[0]);
            link((x, y), (x, y), (a, a2));
            // Exactly one of x, y reaches s in the class color.
            let (o, other) = if col(x, s) == target { (x, y) } else { (y, x) };
            link((x, y), (o, other), (s, a));
            link((x, y), (o, other), (s, a2));
            vec![a, a2, s]
        }
        _ => {
            let mut fresh = split.iter().copied().filter(|&s| s != z);
            let (s1, s2) = (fresh.next().unwrap(), fresh.next().unwrap());
            let l = (z + 1..=z + 4).find(|&v| v != s1 && v != s2).unwrap();
            // For s split and l != z: some o in {x, y} has c(o, s) = c(z, l).
            for (s, l) in [(s1, s2), (s1, l), (s2, l)] {
                let o = if col(x, s) == col(z, l) { x } else { y };
                link((o, z), (o, z), (s, l));
            }
            vec![s1, s2, l]
        }
    };
    let mut members = members;
    members.sort_unstable();
    Level { members, witnesses }
}

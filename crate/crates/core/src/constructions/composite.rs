use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::coloring::{validate_twin, Color, EdgeColoring, TwinPair};
use crate::error::{invalid, precondition, Result, TwinError};
use crate::oracle::{max_string_twin, max_twin_with, Budget, Engine};
use crate::random::{rng, string_with};
use crate::sequences::{lcs_length, LetterString, Permutation};

/// Parameters of the two-level coloring on `n = m * r★` vertices.
///
/// Vertices come in `m` consecutive blocks of width `r★ = r / 2`. Across
/// blocks the color is `x` at the lower block; inside a block it is
/// `r★ + π(offset)` for the permutation `π` that `y` assigns to the block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCompositeSpec")]
pub struct CompositeSpec {
    r: Color,
    r_star: usize,
    big_r: usize,
    m: usize,
    x: LetterString,
    y: LetterString,
    perms: Vec<Permutation>,
}

#[derive(Deserialize)]
struct RawCompositeSpec {
    r: Color,
    r_star: Option<usize>,
    big_r: Option<usize>,
    m: Option<usize>,
    x: LetterString,
    y: LetterString,
    perms: Vec<Permutation>,
}

impl TryFrom<RawCompositeSpec> for CompositeSpec {
    type Error = TwinError;

    fn try_from(raw: RawCompositeSpec) -> Result<Self> {
        let spec = CompositeSpec::new(raw.r, raw.x, raw.y, raw.perms)?;
        let derived = [("r_star", raw.r_star, spec.r_star), ("big_r", raw.big_r, spec.big_r), ("m", raw.m, spec.m)];
        for (name, given, actual) in derived {
            if given.is_some_and(|g| g != actual) {
                return invalid(format!("{name} = {} disagrees with derived value {actual}", given.unwrap_or(0)));
            }
        }
        Ok(spec)
    }
}

impl CompositeSpec {
    pub fn new(r: Color, x: LetterString, y: LetterString, perms: Vec<Permutation>) -> Result<Self> {
        if r == 0 || !r.is_multiple_of(2) {
            return precondition(format!("composite palette must be even and positive, got {r}"));
        }
        let r_star = (r / 2) as usize;
        let big_r = (r as usize).pow(2);
        let m = x.len();
        if m == 0 {
            return precondition("block count must be positive");
        }
        if y.len() != m {
            return precondition(format!("x has length {m} but y has length {}", y.len()));
        }
        if x.palette() as usize != r_star {
            return precondition(format!("x must be over [{r_star}], palette is {}", x.palette()));
        }
        if y.palette() as usize != big_r {
            return precondition(format!("y must be over [{big_r}], palette is {}", y.palette()));
        }
        if perms.len() != big_r {
            return precondition(format!("expected {big_r} permutations, got {}", perms.len()));
        }
        if let Some(p) = perms.iter().find(|p| p.len() != r_star) {
            return precondition(format!("permutation of length {} where {r_star} is required", p.len()));
        }
        Ok(Self { r, r_star, big_r, m, x, y, perms })
    }

    /// Uniform `x ∈ [r★]^m`, `y ∈ [R]^m` and `R` uniform permutations of `[r★]`.
    pub fn random(r: Color, m: usize, seed: u64) -> Result<Self> {
        if r == 0 || !r.is_multiple_of(2) {
            return precondition(format!("composite palette must be even and positive, got {r}"));
        }
        let r_star = r / 2;
        let big_r = r * r;
        let mut g = rng(seed);
        let x = string_with(m, r_star, &mut g);
        let y = string_with(m, big_r, &mut g);
        let perms = (0..big_r)
            .map(|_| {
                let mut v: Vec<usize> = (1..=r_star as usize).collect();
                v.shuffle(&mut g);
                Permutation::new(v).expect("shuffled identity")
            })
            .collect();
        Self::new(r, x, y, perms)
    }

    pub fn r(&self) -> Color {
        self.r
    }

    pub fn r_star(&self) -> usize {
        self.r_star
    }

    pub fn big_r(&self) -> usize {
        self.big_r
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.m * self.r_star
    }

    pub fn x(&self) -> &LetterString {
        &self.x
    }

    pub fn y(&self) -> &LetterString {
        &self.y
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// Φ: the block containing vertex `k`.
    pub fn block_of(&self, k: usize) -> usize {
        k.div_ceil(self.r_star)
    }

    /// Ψ: the offset of vertex `k` inside its block.
    pub fn offset_of(&self, k: usize) -> usize {
        k - (self.block_of(k) - 1) * self.r_star
    }

    /// Permutation assigned to block `a`.
    pub fn block_perm(&self, a: usize) -> &Permutation {
        &self.perms[self.y.at(a) as usize - 1]
    }

    /// Color of `{k, k2}` for `k < k2`.
    pub fn color(&self, k: usize, k2: usize) -> Color {
        let a = self.block_of(k);
        if a < self.block_of(k2) {
            self.x.at(a)
        } else {
            (self.r_star + self.block_perm(a).at(self.offset_of(k))) as Color
        }
    }

    /// Largest LCS over pairs of distinct permutation slots.
    pub fn max_pairwise_lcs(&self) -> usize {
        let mut best = 0;
        for (i, p) in self.perms.iter().enumerate() {
            for q in &self.perms[i + 1..] {
                best = best.max(lcs_length(p, q).expect("equal lengths"));
            }
        }
        best
    }
}

pub fn composite_coloring(spec: &CompositeSpec) -> Result<EdgeColoring> {
    let n = spec.n();
    if n < 2 {
        return invalid(format!("composite coloring needs n >= 2, got {n}"));
    }
    EdgeColoring::from_fn(n, spec.r, |i, j| spec.color(i, j))
}

/// Block-level decomposition of a twin `(I, J)` of a composite coloring.
///
/// Positions `t` and classes `h` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositeDecomposition {
    pub ell: usize,
    /// Φ(I), increasing.
    pub a: Vec<usize>,
    /// Φ(J), increasing.
    pub b: Vec<usize>,
    /// `parts[h - 1]` lists the positions `t` with `Φ(i_t) = a_h`.
    pub parts: Vec<Vec<usize>>,
    /// Φ(j_t) for every position.
    pub phi_j: Vec<usize>,
    pub h1: Vec<usize>,
    pub h2: Vec<usize>,
    pub h3: Vec<usize>,
}

pub fn decompose_composite_twin(spec: &CompositeSpec, t: &TwinPair) -> Result<CompositeDecomposition> {
    let c = composite_coloring(spec)?;
    let verdict = validate_twin(&c, t)?;
    if !verdict.is_valid() {
        return invalid(format!("not a twin of the composite coloring: {verdict:?}"));
    }
    let phi_i: Vec<usize> = t.left.iter().map(|&i| spec.block_of(i)).collect();
    let phi_j: Vec<usize> = t.right.iter().map(|&j| spec.block_of(j)).collect();
    let mut a = phi_i.clone();
    a.dedup();
    let mut b = phi_j.clone();
    b.dedup();
    let parts: Vec<Vec<usize>> = a.iter().map(|&ah| (1..=t.len()).filter(|&p| phi_i[p - 1] == ah).collect()).collect();
    let (mut h1, mut h2, mut h3) = (Vec::new(), Vec::new(), Vec::new());
    for (h, (&ah, &bh)) in a.iter().zip(&b).enumerate() {
        let class = if ah == bh {
            &mut h1
        } else if spec.y.at(ah) == spec.y.at(bh) {
            &mut h2
        } else {
            &mut h3
        };
        class.push(h + 1);
    }
    Ok(CompositeDecomposition { ell: t.len(), a, b, parts, phi_j, h1, h2, h3 })
}

impl CompositeDecomposition {
    pub fn l(&self) -> usize {
        self.a.len()
    }

    pub fn part(&self, h: usize) -> &[usize] {
        &self.parts[h - 1]
    }

    /// `Σ |E_h|` over H₁, H₂, H₃.
    pub fn contributions(&self) -> [usize; 3] {
        [&self.h1, &self.h2, &self.h3].map(|hs| hs.iter().map(|&h| self.part(h).len()).sum())
    }

    /// Partition and interval facts that hold for every twin.
    pub fn structural_issues(&self, spec: &CompositeSpec) -> Vec<String> {
        let mut issues = Vec::new();
        let l = self.l();
        if self.b.len() != l {
            issues.push(format!("|Φ(I)| = {l} but |Φ(J)| = {}", self.b.len()));
        }
        let mut classes: Vec<usize> = [&self.h1, &self.h2, &self.h3].into_iter().flatten().copied().collect();
        classes.sort_unstable();
        if classes != (1..=l).collect::<Vec<_>>() {
            issues.push(format!("H1, H2, H3 do not partition [{l}]"));
        }
        let positions: Vec<usize> = self.parts.iter().flatten().copied().collect();
        if positions != (1..=self.ell).collect::<Vec<_>>() {
            issues.push(format!("the parts E_h do not partition [{}] in order", self.ell));
        }
        for (h, part) in self.parts.iter().enumerate() {
            if part.windows(2).any(|w| w[1] != w[0] + 1) {
                issues.push(format!("E_{} is not an interval", h + 1));
            }
            if part.len() > spec.r_star() {
                issues.push(format!("|E_{}| = {} exceeds r★ = {}", h + 1, part.len(), spec.r_star()));
            }
            if let Some(&bh) = self.b.get(h) {
                if part.iter().any(|&p| self.phi_j[p - 1] != bh) {
                    issues.push(format!("positions of E_{} leave block b_{}", h + 1, h + 1));
                }
            }
        }
        let total: usize = self.contributions().iter().sum();
        if total != self.ell {
            issues.push(format!("Σ|E_h| = {total} but ℓ = {}", self.ell));
        }
        issues
    }

    /// The size bounds on H₁, H₂, H₃ given the string-twin sizes of `x` and `y`.
    pub fn bound_issues(&self, spec: &CompositeSpec, f_string_x: usize, f_string_y: usize) -> Vec<String> {
        let mut issues = Vec::new();
        if self.h1.len() > spec.m() {
            issues.push(format!("|H1| = {} > m = {}", self.h1.len(), spec.m()));
        }
        for &h in &self.h1 {
            if self.part(h).len() > 1 {
                issues.push(format!("|E_{h}| = {} > 1 for h in H1", self.part(h).len()));
            }
        }
        if self.h2.len() > 2 * f_string_y {
            issues.push(format!("|H2| = {} > 2 f(y) = {}", self.h2.len(), 2 * f_string_y));
        }
        if self.h3.len() > 2 * f_string_x + 1 {
            issues.push(format!("|H3| = {} > 2 f(x) + 1 = {}", self.h3.len(), 2 * f_string_x + 1));
        }
        for &h in &self.h3 {
            let (pa, pb) = (spec.block_perm(self.a[h - 1]), spec.block_perm(self.b[h - 1]));
            let lcs = lcs_length(pa, pb).expect("equal lengths");
            if self.part(h).len() > lcs + 1 {
                issues.push(format!("|E_{h}| = {} > LCS + 1 = {}", self.part(h).len(), lcs + 1));
            }
        }
        issues
    }
}

/// Both sides of the composite twin bound, each term from this crate's oracles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinBoundCheck {
    pub f_c: usize,
    pub witness: TwinPair,
    pub f_string_x: usize,
    pub f_string_y: usize,
    pub max_lcs: usize,
    pub rhs: usize,
}

impl TwinBoundCheck {
    pub fn holds(&self) -> bool {
        self.f_c <= self.rhs
    }
}

pub fn check_twin_bound(spec: &CompositeSpec, budget: &Budget) -> Result<TwinBoundCheck> {
    let c = composite_coloring(spec)?;
    let best = max_twin_with(&c, Engine::Compressed, budget)?;
    let f_string_x = max_string_twin(spec.x()).size;
    let f_string_y = max_string_twin(spec.y()).size;
    let max_lcs = spec.max_pairwise_lcs();
    let rhs = spec.m() + 2 * f_string_y * spec.r() as usize + (2 * f_string_x + 1) * (max_lcs + 1);
    Ok(TwinBoundCheck { f_c: best.size, witness: best.witness, f_string_x, f_string_y, max_lcs, rhs })
}

//! Exact maximum-twin search and exhaustive extremal minima.
//!
//! A twin is grown one synchronized step at a time: both chains receive a new
//! index above their current last index, and a [`TwinRule`] decides whether
//! the step is allowed. The three twin notions (coloring twins, string-twins,
//! weak-twins) differ only in their rule.
//!
//! Two engines compute the maximum size:
//!
//! * [`Engine::Plain`] memoizes on `(used set, last of I, last of J)`. It is
//!   simple and serves as the reference.
//! * [`Engine::Compressed`] memoizes on [`SearchState`]. A future index of the
//!   chain with the smaller last index can only collide with indices of the
//!   other chain lying above it, and the other chain can collide with nothing
//!   already used, so only the other chain's indices inside the window
//!   between the two last indices need to be remembered.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::coloring::{edge_count, Color, EdgeColoring, TwinPair};
use crate::error::{Result, TwinError};
use crate::sequences::{LetterString, Permutation};

/// Largest instance either engine accepts (index sets are `u128` masks).
pub const MAX_SEARCH_N: usize = 127;

/// Step predicate defining a twin notion on `[n]`.
pub trait TwinRule: Sync {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the singletons `(i), (j)` start a twin.
    fn start(&self, i: usize, j: usize) -> bool;

    /// Whether one chain may step `a -> p` while the other steps `b -> q`.
    /// Must be symmetric under exchanging the two chains.
    fn step(&self, a: usize, p: usize, b: usize, q: usize) -> bool;
}

/// Twins of an edge coloring.
pub struct ColoringRule {
    n: usize,
    table: Vec<Color>,
}

impl ColoringRule {
    pub fn new(c: &EdgeColoring) -> Self {
        Self { n: c.n(), table: c.dense_table() }
    }
}

impl TwinRule for ColoringRule {
    fn len(&self) -> usize {
        self.n
    }

    fn start(&self, _: usize, _: usize) -> bool {
        true
    }

    #[inline]
    fn step(&self, a: usize, p: usize, b: usize, q: usize) -> bool {
        let s = self.n + 1;
        self.table[a * s + p] == self.table[b * s + q]
    }
}

/// String-twins: letters agree position by position.
pub struct StringRule<'a>(pub &'a LetterString);

impl TwinRule for StringRule<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn start(&self, i: usize, j: usize) -> bool {
        self.0.at(i) == self.0.at(j)
    }

    fn step(&self, _: usize, p: usize, _: usize, q: usize) -> bool {
        self.0.at(p) == self.0.at(q)
    }
}

/// Weak-twins: ascents and descents agree position by position.
pub struct SignRule<'a>(pub &'a Permutation);

impl TwinRule for SignRule<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn start(&self, _: usize, _: usize) -> bool {
        true
    }

    fn step(&self, a: usize, p: usize, b: usize, q: usize) -> bool {
        (self.0.at(a) < self.0.at(p)) == (self.0.at(b) < self.0.at(q))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    Plain,
    #[default]
    Compressed,
}

/// Explicit limits on search and enumeration work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Memo entries per single maximum-twin search.
    pub max_states: usize,
    /// Objects enumerated by the exhaustive minima.
    pub max_enumerations: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_states: 1 << 26, max_enumerations: 1 << 21 }
    }
}

/// Memo key of the compressed engine.
///
/// `low` and `high` are the last indices of the two chains (`low < high`);
/// `window` has bit `v - low - 1` set for every index `v` in `(low, high]`
/// used by the chain ending at `high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchState {
    pub low: u8,
    pub high: u8,
    pub window: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxTwin {
    pub size: usize,
    pub witness: TwinPair,
}

/// `f(c)` with a witness, using the compressed engine without a state limit.
///
/// # Panics
/// If `n > MAX_SEARCH_N`.
pub fn max_twin(c: &EdgeColoring) -> MaxTwin {
    unbounded(max_twin_with(c, Engine::Compressed, &Budget::default().unlimited()))
}

pub fn max_twin_with(c: &EdgeColoring, engine: Engine, budget: &Budget) -> Result<MaxTwin> {
    search(&ColoringRule::new(c), engine, budget)
}

pub fn max_string_twin(x: &LetterString) -> MaxTwin {
    unbounded(search(&StringRule(x), Engine::Compressed, &Budget::default().unlimited()))
}

pub fn max_weak_twin(pi: &Permutation) -> MaxTwin {
    unbounded(search(&SignRule(pi), Engine::Compressed, &Budget::default().unlimited()))
}

impl Budget {
    fn unlimited(self) -> Budget {
        Budget { max_states: usize::MAX, ..self }
    }
}

fn unbounded(r: Result<MaxTwin>) -> MaxTwin {
    r.unwrap_or_else(|e| panic!("unbounded search failed: {e}"))
}

/// Maximum twin under an arbitrary rule.
pub fn search<R: TwinRule>(rule: &R, engine: Engine, budget: &Budget) -> Result<MaxTwin> {
    let n = rule.len();
    if n > MAX_SEARCH_N {
        return Err(TwinError::Resource {
            what: "exact twin search vertex count",
            required: n as u128,
            budget: MAX_SEARCH_N as u128,
        });
    }
    match engine {
        Engine::Plain => PlainSearch::new(rule, budget.max_states).run(),
        Engine::Compressed => CompressedSearch::new(rule, budget.max_states).run(),
    }
}

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn state_limit(limit: usize) -> TwinError {
    TwinError::Resource { what: "exact twin search states", required: limit as u128 + 1, budget: limit as u128 }
}

struct PlainSearch<'r, R> {
    rule: &'r R,
    limit: usize,
    memo: HashMap<(u128, u8, u8), u8>,
}

impl<'r, R: TwinRule> PlainSearch<'r, R> {
    fn new(rule: &'r R, limit: usize) -> Self {
        Self { rule, limit, memo: HashMap::new() }
    }

    /// Longest extension beyond the state `(used, last_i, last_j)`.
    fn extend(&mut self, used: u128, a: usize, b: usize) -> Result<u8> {
        if let Some(&v) = self.memo.get(&(used, a as u8, b as u8)) {
            return Ok(v);
        }
        let n = self.rule.len();
        let mut best = 0;
        for p in a + 1..=n {
            if used & bit(p) != 0 {
                continue;
            }
            for q in b + 1..=n {
                if q == p || used & bit(q) != 0 || !self.rule.step(a, p, b, q) {
                    continue;
                }
                best = best.max(1 + self.extend(used | bit(p) | bit(q), p, q)?);
            }
        }
        if self.memo.len() >= self.limit {
            return Err(state_limit(self.limit));
        }
        self.memo.insert((used, a as u8, b as u8), best);
        Ok(best)
    }

    fn run(mut self) -> Result<MaxTwin> {
        let n = self.rule.len();
        let mut best: Option<(u8, usize, usize)> = None;
        for i in 1..=n {
            for j in 1..=n {
                if i == j || !self.rule.start(i, j) {
                    continue;
                }
                let v = 1 + self.extend(bit(i) | bit(j), i, j)?;
                if best.is_none_or(|(b, _, _)| v > b) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((size, i, j)) = best else {
            return Ok(MaxTwin { size: 0, witness: TwinPair::empty() });
        };
        let mut twin = TwinPair::new(vec![i], vec![j]);
        let (mut used, mut a, mut b, mut left) = (bit(i) | bit(j), i, j, size - 1);
        'walk: while left > 0 {
            for p in a + 1..=n {
                for q in b + 1..=n {
                    if p == q || used & (bit(p) | bit(q)) != 0 || !self.rule.step(a, p, b, q) {
                        continue;
                    }
                    if self.extend(used | bit(p) | bit(q), p, q)? + 1 == left {
                        twin.left.push(p);
                        twin.right.push(q);
                        used |= bit(p) | bit(q);
                        (a, b, left) = (p, q, left - 1);
                        continue 'walk;
                    }
                }
            }
            unreachable!("memoized value has a realizing step");
        }
        Ok(MaxTwin { size: size as usize, witness: twin })
    }
}

struct CompressedSearch<'r, R> {
    rule: &'r R,
    limit: usize,
    memo: HashMap<SearchState, u8>,
}

/// A step from `(low, high, window)`: the low chain moves to `p`, the high
/// chain to `q`. Returns the successor and whether the chains swapped roles.
fn advance(s: SearchState, p: usize, q: usize) -> (SearchState, bool) {
    let low = s.low as usize;
    if p < q {
        let window = (s.window >> (p - low)) | bit(q - p - 1);
        (SearchState { low: p as u8, high: q as u8, window }, false)
    } else {
        (SearchState { low: q as u8, high: p as u8, window: bit(p - q - 1) }, true)
    }
}

impl<'r, R: TwinRule> CompressedSearch<'r, R> {
    fn new(rule: &'r R, limit: usize) -> Self {
        Self { rule, limit, memo: HashMap::new() }
    }

    /// Steps `(p, q)` permitted from `s`, low chain first.
    fn moves(&self, s: SearchState) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.rule.len();
        let (low, high) = (s.low as usize, s.high as usize);
        (low + 1..=n)
            .filter(move |&p| p > high || s.window & bit(p - low - 1) == 0)
            .flat_map(move |p| (high + 1..=n).map(move |q| (p, q)))
            .filter(move |&(p, q)| p != q && self.rule.step(low, p, high, q))
    }

    fn extend(&mut self, s: SearchState) -> Result<u8> {
        if let Some(&v) = self.memo.get(&s) {
            return Ok(v);
        }
        let mut best = 0;
        let moves: Vec<_> = self.moves(s).collect();
        for (p, q) in moves {
            best = best.max(1 + self.extend(advance(s, p, q).0)?);
        }
        if self.memo.len() >= self.limit {
            return Err(state_limit(self.limit));
        }
        self.memo.insert(s, best);
        Ok(best)
    }

    fn run(mut self) -> Result<MaxTwin> {
        let n = self.rule.len();
        let mut best: Option<(u8, usize, usize)> = None;
        for i in 1..=n {
            for j in i + 1..=n {
                if !self.rule.start(i, j) {
                    continue;
                }
                let s = SearchState { low: i as u8, high: j as u8, window: bit(j - i - 1) };
                let v = 1 + self.extend(s)?;
                if best.is_none_or(|(b, _, _)| v > b) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((size, i, j)) = best else {
            return Ok(MaxTwin { size: 0, witness: TwinPair::empty() });
        };
        // `low_is_left` tracks which output side the low chain belongs to.
        let mut twin = TwinPair::new(vec![i], vec![j]);
        let mut s = SearchState { low: i as u8, high: j as u8, window: bit(j - i - 1) };
        let mut low_is_left = true;
        for left in (1..size).rev() {
            let moves: Vec<_> = self.moves(s).collect();
            let mut chosen = None;
            for (p, q) in moves {
                let (next, swapped) = advance(s, p, q);
                if self.extend(next)? == left - 1 {
                    chosen = Some((p, q, next, swapped));
                    break;
                }
            }
            let (p, q, next, swapped) = chosen.expect("memoized value has a realizing step");
            let (to_left, to_right) = if low_is_left { (p, q) } else { (q, p) };
            twin.left.push(to_left);
            twin.right.push(to_right);
            low_is_left ^= swapped;
            s = next;
        }
        Ok(MaxTwin { size: size as usize, witness: twin })
    }
}

/// Calls `visit` on every non-empty twin (ordered pair `(I, J)`) of the rule
/// whose first indices are `(i, j)`.
pub fn for_each_twin_from<R: TwinRule>(rule: &R, i: usize, j: usize, visit: &mut impl FnMut(&TwinPair)) {
    if i == j || !rule.start(i, j) {
        return;
    }
    fn dfs<R: TwinRule>(rule: &R, used: u128, twin: &mut TwinPair, visit: &mut impl FnMut(&TwinPair)) {
        visit(twin);
        let n = rule.len();
        let (a, b) = twin.maxima().expect("non-empty");
        for p in a + 1..=n {
            if used & bit(p) != 0 {
                continue;
            }
            for q in b + 1..=n {
                if q == p || used & bit(q) != 0 || !rule.step(a, p, b, q) {
                    continue;
                }
                twin.left.push(p);
                twin.right.push(q);
                dfs(rule, used | bit(p) | bit(q), twin, visit);
                twin.left.pop();
                twin.right.pop();
            }
        }
    }
    let mut twin = TwinPair::new(vec![i], vec![j]);
    dfs(rule, bit(i) | bit(j), &mut twin, visit);
}

/// Folds over every non-empty twin, sharded across workers by the first
/// index pair. Partial results are combined in a fixed order.
pub fn fold_twins<R, T, F, M>(rule: &R, init: impl Fn() -> T + Sync + Send, fold: F, merge: M) -> T
where
    R: TwinRule,
    T: Send,
    F: Fn(&mut T, &TwinPair) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    let n = rule.len();
    let starts: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    starts
        .par_iter()
        .map(|&(i, j)| {
            let mut acc = init();
            for_each_twin_from(rule, i, j, &mut |t| fold(&mut acc, t));
            acc
        })
        .collect::<Vec<T>>()
        .into_iter()
        .fold(init(), &merge)
}

/// A minimum of an extremal function together with a minimizing object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal<T> {
    pub value: usize,
    pub minimizer: T,
    pub witness: TwinPair,
    pub enumerated: u128,
}

fn checked_count(base: u128, exp: usize, what: &'static str, budget: &Budget) -> Result<u128> {
    let mut total: u128 = 1;
    for _ in 0..exp {
        total = total.saturating_mul(base);
        if total > budget.max_enumerations {
            break;
        }
    }
    if total > budget.max_enumerations {
        return Err(TwinError::Resource {
            what,
            required: base.saturating_pow(exp as u32),
            budget: budget.max_enumerations,
        });
    }
    Ok(total)
}

/// Digits of `index` in base `base`, most significant first, shifted to `1..=base`.
fn digits(mut index: u128, base: u128, len: usize) -> Vec<Color> {
    let mut out = vec![1; len];
    for slot in out.iter_mut().rev() {
        *slot = (index % base) as Color + 1;
        index /= base;
    }
    out
}

/// Parallel exhaustive minimum over `count` indexed objects; ties go to the
/// smallest index.
fn minimize<T, B, S>(count: u128, build: B, score: S) -> Result<(usize, u128, MaxTwin)>
where
    B: Fn(u128) -> T + Sync,
    S: Fn(&T) -> Result<MaxTwin> + Sync,
{
    let best = (0..count as u64)
        .into_par_iter()
        .map(|k| score(&build(k as u128)).map(|m| (m.size, k as u128, m)))
        .try_reduce_with(|a, b| Ok(if (b.0, b.1) < (a.0, a.1) { b } else { a }));
    match best {
        Some(r) => r,
        None => Ok((0, 0, MaxTwin { size: 0, witness: TwinPair::empty() })),
    }
}

/// `F_r(n)`: the minimum of `f(c)` over all r-colorings of `K_n`.
pub fn exact_f(n: usize, r: Color, budget: &Budget) -> Result<Extremal<EdgeColoring>> {
    if r == 0 {
        return Err(TwinError::InvalidArgument("palette size must be positive".into()));
    }
    let edges = edge_count(n);
    let count = checked_count(r as u128, edges, "colorings to enumerate", budget)?;
    let build = |k| EdgeColoring::from_colors(n, r, digits(k, r as u128, edges)).expect("digits lie in the palette");
    let (value, k, best) = minimize(count, build, |c| max_twin_with(c, Engine::Compressed, budget))?;
    Ok(Extremal { value, minimizer: build(k), witness: best.witness, enumerated: count })
}

/// `F^weak(n)`: the minimum of `f^weak` over `S_n`.
pub fn exact_f_weak(n: usize, budget: &Budget) -> Result<Extremal<Permutation>> {
    let count = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX);
    if count > budget.max_enumerations {
        return Err(TwinError::Resource {
            what: "permutations to enumerate",
            required: count,
            budget: budget.max_enumerations,
        });
    }
    let build = |k: u128| Permutation::unrank(n, k as u64);
    let (value, k, best) = minimize(count, build, |pi| search(&SignRule(pi), Engine::Compressed, budget))?;
    Ok(Extremal { value, minimizer: build(k), witness: best.witness, enumerated: count })
}

/// `F_r^string(n)`: the minimum of `f^string` over `[r]^n`.
pub fn exact_f_string(n: usize, r: Color, budget: &Budget) -> Result<Extremal<LetterString>> {
    if r == 0 {
        return Err(TwinError::InvalidArgument("palette size must be positive".into()));
    }
    let count = checked_count(r as u128, n, "strings to enumerate", budget)?;
    let build = |k| LetterString::new(r, digits(k, r as u128, n)).expect("digits lie in the palette");
    let (value, k, best) = minimize(count, build, |x| search(&StringRule(x), Engine::Compressed, budget))?;
    Ok(Extremal { value, minimizer: build(k), witness: best.witness, enumerated: count })
}

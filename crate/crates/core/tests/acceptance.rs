//! Acceptance criteria 1-10. Run with `cargo test -p twin-core --test acceptance`.
//!
//! Each criterion prints one line: `PASS`, `FAIL`, or `FLAG` for the
//! statistical probe, whose nonzero count calls for investigation but does
//! not fail the run. Expected values come from brute-force code in this file,
//! not from the library under test.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;

use twin_core::builder::{build_twin_binary, build_twin_general};
use twin_core::constructions::{
    check_twin_bound, composite_coloring, decompose_composite_twin, twin_block_graph, uncovered_blocks,
    verify_block_claims, BlockProfile, CompositeSpec,
};
use twin_core::oracle::{
    exact_f, exact_f_string, exact_f_weak, fold_twins, max_string_twin, max_twin, max_twin_with, max_weak_twin, Budget,
    ColoringRule, Engine,
};
use twin_core::random::{case_seed, random_coloring, rng};
use twin_core::reductions::{coloring_from_permutation, coloring_from_string};
use twin_core::sequences::lcs_length;
use twin_core::{relabel_palette, EdgeColoring, LetterString, Permutation, TwinPair};

const MASTER_SEED: u64 = 20_240_601;

// Pinned limits.
const GUARANTEE_SAMPLES: u64 = 500;
const GUARANTEE_GRID: [(usize, u32, usize); 3] = [(40, 2, 8), (50, 2, 10), (30, 3, 3)];
const GUARANTEE_LIMIT: Duration = Duration::from_secs(60);
const BINARY_N: usize = 60;
const BINARY_MIN: usize = 15;
const BINARY_LIMIT: Duration = Duration::from_secs(60);
const REDUCTION_LIMIT: Duration = Duration::from_secs(60);
const TABLES_LIMIT: Duration = Duration::from_secs(600);
const ENGINE_SAMPLES: u64 = 1000;
const ENGINE_LIMIT: Duration = Duration::from_secs(300);
const TWINBOUND_SPECS: u64 = 50;
const BLOCK_MAX_LEN: usize = 15;
const BLOCK_LIMIT: Duration = Duration::from_secs(600);
const LCS_PAIRS: u64 = 200;
const LCS_LEN: usize = 100;
const LCS_THRESHOLD: usize = 30;
const INVARIANCE_SAMPLES: u64 = 100;

// Extremal values. Small rows are confirmed by brute force over every object
// and every candidate pair; larger rows by a depth-first search showing each
// object reaches the value plus brute force on the minimizer.
const F2: [(usize, usize); 5] = [(2, 1), (3, 1), (4, 1), (5, 2), (6, 2)];
const F_WEAK: [(usize, usize); 7] = [(2, 1), (3, 1), (4, 1), (5, 2), (6, 2), (7, 2), (8, 3)];
const F_STRING2: [(usize, usize); 11] =
    [(2, 0), (3, 1), (4, 1), (5, 1), (6, 2), (7, 2), (8, 2), (9, 3), (10, 3), (11, 4), (12, 4)];

type Criterion = (&'static str, fn() -> Outcome);

enum Outcome {
    Pass(String),
    Flag(String),
}

// ------------------------------------------------------------- brute force

/// All ordered pairs of disjoint equal-size subsets of `[n]`.
fn candidate_pairs(n: usize) -> Vec<TwinPair> {
    let mut out = Vec::new();
    for code in 0..3u32.pow(n as u32) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let mut rest = code;
        for v in 1..=n {
            match rest % 3 {
                1 => left.push(v),
                2 => right.push(v),
                _ => {}
            }
            rest /= 3;
        }
        if left.len() == right.len() {
            out.push(TwinPair::new(left, right));
        }
    }
    out
}

fn edge(c: &EdgeColoring, i: usize, j: usize) -> u32 {
    c.color(i.min(j), i.max(j)).unwrap()
}

fn disjoint_increasing(t: &TwinPair, n: usize) -> bool {
    let inc = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&v| (1..=n).contains(&v));
    let left: BTreeSet<usize> = t.left.iter().copied().collect();
    t.left.len() == t.right.len() && inc(&t.left) && inc(&t.right) && t.right.iter().all(|v| !left.contains(v))
}

fn is_twin(c: &EdgeColoring, t: &TwinPair) -> bool {
    disjoint_increasing(t, c.n())
        && (1..t.len()).all(|k| edge(c, t.left[k - 1], t.left[k]) == edge(c, t.right[k - 1], t.right[k]))
}

fn is_weak_twin(pi: &Permutation, t: &TwinPair) -> bool {
    let up = |a: usize, b: usize| pi.at(a) < pi.at(b);
    disjoint_increasing(t, pi.len())
        && (1..t.len()).all(|k| up(t.left[k - 1], t.left[k]) == up(t.right[k - 1], t.right[k]))
}

fn is_string_twin(x: &LetterString, left: &[usize], right: &[usize]) -> bool {
    disjoint_increasing(&TwinPair::new(left.to_vec(), right.to_vec()), x.len())
        && left.iter().zip(right).all(|(&i, &j)| x.at(i) == x.at(j))
}

fn brute_max(candidates: &[TwinPair], ok: impl Fn(&TwinPair) -> bool) -> usize {
    candidates.iter().filter(|t| ok(t)).map(|t| t.len()).max().unwrap_or(0)
}

/// Depth-first search, without memoization, for any twin of size `k` under
/// the step predicate `same(a, p, b, q)`.
fn reaches(
    n: usize,
    k: usize,
    start: &dyn Fn(usize, usize) -> bool,
    same: &dyn Fn(usize, usize, usize, usize) -> bool,
) -> bool {
    fn grow(
        n: usize,
        k: usize,
        used: u32,
        a: usize,
        b: usize,
        depth: usize,
        same: &dyn Fn(usize, usize, usize, usize) -> bool,
    ) -> bool {
        if depth == k {
            return true;
        }
        for p in a + 1..=n {
            if used >> p & 1 == 1 {
                continue;
            }
            for q in b + 1..=n {
                if q != p
                    && used >> q & 1 == 0
                    && same(a, p, b, q)
                    && grow(n, k, used | 1 << p | 1 << q, p, q, depth + 1, same)
                {
                    return true;
                }
            }
        }
        false
    }
    if k == 0 {
        return true;
    }
    (1..=n).any(|i| (i + 1..=n).any(|j| start(i, j) && grow(n, k, 1 << i | 1 << j, i, j, 1, same)))
}

fn all_colorings(n: usize, r: u32) -> impl Iterator<Item = EdgeColoring> {
    let edges = n * (n - 1) / 2;
    (0..(r as u64).pow(edges as u32)).map(move |mut code| {
        let colors = (0..edges)
            .map(|_| {
                let d = (code % r as u64) as u32 + 1;
                code /= r as u64;
                d
            })
            .collect();
        EdgeColoring::from_colors(n, r, colors).unwrap()
    })
}

fn binary_strings(n: usize) -> impl Iterator<Item = LetterString> {
    (0u32..1 << n).map(move |code| LetterString::new(2, (0..n).map(|b| (code >> b & 1) + 1).collect()).unwrap())
}

fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (0..(1..=n as u64).product::<u64>()).map(move |k| Permutation::unrank(n, k))
}

fn within(start: Instant, limit: Duration, what: &str) -> Duration {
    let spent = start.elapsed();
    assert!(spent < limit, "{what} took {spent:?}, limit {limit:?}");
    spent
}

// --------------------------------------------------------------- criteria

fn builder_guarantee() -> Outcome {
    let start = Instant::now();
    let mut smallest = Vec::new();
    for (grid, &(n, r, bound)) in GUARANTEE_GRID.iter().enumerate() {
        assert_eq!(bound, n / (r as usize * r as usize + 1));
        let mut min = usize::MAX;
        for s in 0..GUARANTEE_SAMPLES {
            let c = random_coloring(n, r, case_seed(MASTER_SEED, grid as u64 * 10_000 + s));
            let t = build_twin_general(&c).twin;
            assert!(is_twin(&c, &t), "n={n} r={r} sample {s}: not a twin");
            assert!(t.len() >= bound, "n={n} r={r} sample {s}: size {} < {bound}", t.len());
            min = min.min(t.len());
        }
        smallest.push(format!("(n={n},r={r}) min {min} >= {bound}"));
    }
    let spent = within(start, GUARANTEE_LIMIT, "builder guarantee");
    Outcome::Pass(format!("{} x 3 colorings; {}; {spent:.1?}", GUARANTEE_SAMPLES, smallest.join(", ")))
}

fn binary_builder() -> Outcome {
    let start = Instant::now();
    let mut min = usize::MAX;
    for s in 0..GUARANTEE_SAMPLES {
        let c = random_coloring(BINARY_N, 2, case_seed(MASTER_SEED ^ 0xb1, s));
        let t = build_twin_binary(&c).unwrap().twin;
        assert!(is_twin(&c, &t), "sample {s}: not a twin");
        assert!(t.len() >= BINARY_MIN, "sample {s}: size {}", t.len());
        min = min.min(t.len());
    }
    let spent = within(start, BINARY_LIMIT, "binary builder");
    Outcome::Pass(format!("{GUARANTEE_SAMPLES} colorings at n={BINARY_N}, min size {min} >= {BINARY_MIN}; {spent:.1?}"))
}

fn weak_reduction() -> Outcome {
    let start = Instant::now();
    let candidates = candidate_pairs(6);
    for pi in all_permutations(6) {
        let c = coloring_from_permutation(&pi).unwrap();
        let f = max_twin(&c).size;
        assert_eq!(f, max_weak_twin(&pi).size, "{pi:?}");
        assert_eq!(f, brute_max(&candidates, |t| is_weak_twin(&pi, t)), "{pi:?}");
    }
    let spent = within(start, REDUCTION_LIMIT, "weak reduction");
    Outcome::Pass(format!("all 720 permutations of S_6 agree with the weak-twin maximum; {spent:.1?}"))
}

fn string_reduction() -> Outcome {
    let candidates = candidate_pairs(7);
    let mut maxima_checked = 0;
    for x in binary_strings(7) {
        let c = coloring_from_string(&x).unwrap();
        let f = max_twin(&c).size;
        let f_string = max_string_twin(&x).size;
        assert!(f <= f_string + 1, "{x:?}: {f} > {f_string} + 1");
        assert_eq!(f_string, brute_max(&candidates, |t| is_string_twin(&x, &t.left, &t.right)));
        for t in candidates.iter().filter(|t| t.len() == f && is_twin(&c, t)) {
            let k = f - 1;
            assert!(is_string_twin(&x, &t.left[..k], &t.right[..k]), "{x:?} {t:?}");
            maxima_checked += 1;
        }
    }
    Outcome::Pass(format!("128 strings in [2]^7; {maxima_checked} maximum twins reduce to string-twins"))
}

fn tables() -> Outcome {
    let start = Instant::now();
    let budget = Budget::default();
    for r in 1..=4 {
        assert_eq!(exact_f(2, r, &budget).unwrap().value, 1, "F(2,{r})");
    }
    for &(n, expected) in &F2 {
        let e = exact_f(n, 2, &budget).unwrap();
        assert_eq!(e.value, expected, "F({n},2)");
        assert!(n / 4 <= e.value && e.value <= n / 2, "F({n},2) outside the envelope");
        assert!(is_twin(&e.minimizer, &e.witness));
        let candidates = candidate_pairs(n);
        let brute = all_colorings(n, 2).map(|c| brute_max(&candidates, |t| is_twin(&c, t))).min().unwrap();
        assert_eq!(brute, expected, "brute F({n},2)");
    }
    for &(n, expected) in &F_WEAK {
        let e = exact_f_weak(n, &budget).unwrap();
        assert_eq!(e.value, expected, "F_weak({n})");
        if let Some(&(_, f2)) = F2.iter().find(|&&(m, _)| m == n) {
            assert!(f2 <= e.value, "F({n},2) > F_weak({n})");
        }
        let candidates = candidate_pairs(n);
        if n <= 7 {
            let brute = all_permutations(n).map(|pi| brute_max(&candidates, |t| is_weak_twin(&pi, t))).min().unwrap();
            assert_eq!(brute, expected, "brute F_weak({n})");
        } else {
            assert_eq!(brute_max(&candidates, |t| is_weak_twin(&e.minimizer, t)), expected);
            for pi in all_permutations(n) {
                let up = |a: usize, b: usize| pi.at(a) < pi.at(b);
                assert!(reaches(n, expected, &|_, _| true, &|a, p, b, q| up(a, p) == up(b, q)), "{pi:?}");
            }
        }
    }
    for &(n, expected) in &F_STRING2 {
        let e = exact_f_string(n, 2, &budget).unwrap();
        assert_eq!(e.value, expected, "F_string({n},2)");
        let candidates = candidate_pairs(n);
        if n <= 9 {
            let brute = binary_strings(n)
                .map(|x| brute_max(&candidates, |t| is_string_twin(&x, &t.left, &t.right)))
                .min()
                .unwrap();
            assert_eq!(brute, expected, "brute F_string({n},2)");
        } else {
            let x = &e.minimizer;
            assert_eq!(brute_max(&candidates, |t| is_string_twin(x, &t.left, &t.right)), expected);
            for x in binary_strings(n) {
                let eq = |i: usize, j: usize| x.at(i) == x.at(j);
                assert!(reaches(n, expected, &eq, &|_, p, _, q| eq(p, q)), "{x:?}");
            }
        }
    }
    let spent = within(start, TABLES_LIMIT, "tables");
    let fmt = |rows: &[(usize, usize)]| rows.iter().map(|(n, v)| format!("{n}:{v}")).collect::<Vec<_>>().join(" ");
    Outcome::Pass(format!(
        "F(n,2) [{}], F_weak(n) [{}], F_string(n,2) [{}]; {spent:.1?}",
        fmt(&F2),
        fmt(&F_WEAK),
        fmt(&F_STRING2)
    ))
}

fn engine_equivalence() -> Outcome {
    let start = Instant::now();
    let budget = Budget::default();
    for s in 0..ENGINE_SAMPLES {
        let n = 2 + (s % 9) as usize;
        let r = 2 + ((s / 9) % 2) as u32;
        let c = random_coloring(n, r, case_seed(MASTER_SEED ^ 0xe6, s));
        let plain = max_twin_with(&c, Engine::Plain, &budget).unwrap();
        let compressed = max_twin_with(&c, Engine::Compressed, &budget).unwrap();
        assert_eq!(plain.size, compressed.size, "n={n} r={r} sample {s}");
        assert!(is_twin(&c, &compressed.witness));
        if n <= 7 {
            assert_eq!(compressed.size, brute_max(&candidate_pairs(n), |t| is_twin(&c, t)));
        }
    }
    let spent = within(start, ENGINE_LIMIT, "engine equivalence");
    Outcome::Pass(format!("{ENGINE_SAMPLES} colorings with n <= 10, r in {{2,3}}; {spent:.1?}"))
}

fn twin_bound() -> Outcome {
    let budget = Budget::default();
    let candidates = candidate_pairs(8);
    let mut twins = 0u64;
    let mut worst = (0, 0);
    for s in 0..TWINBOUND_SPECS {
        let spec = CompositeSpec::random(4, 4, case_seed(MASTER_SEED ^ 0x7b, s)).unwrap();
        assert_eq!(spec.n(), 8);
        let c = composite_coloring(&spec).unwrap();
        let check = check_twin_bound(&spec, &budget).unwrap();
        // Every term recomputed by brute force.
        let f_c = brute_max(&candidates, |t| is_twin(&c, t));
        let f_string = |x: &LetterString| {
            let cands = candidate_pairs(x.len());
            brute_max(&cands, |t| is_string_twin(x, &t.left, &t.right))
        };
        let (fx, fy) = (f_string(spec.x()), f_string(spec.y()));
        let mut max_lcs = 0;
        for i in 0..spec.perms().len() {
            for j in i + 1..spec.perms().len() {
                max_lcs = max_lcs.max(lcs_length(&spec.perms()[i], &spec.perms()[j]).unwrap());
            }
        }
        let rhs = spec.m() + 2 * fy * 4 + (2 * fx + 1) * (max_lcs + 1);
        assert_eq!(
            (check.f_c, check.f_string_x, check.f_string_y, check.max_lcs, check.rhs),
            (f_c, fx, fy, max_lcs, rhs)
        );
        assert!(f_c <= rhs, "spec {s}: f(c) = {f_c} > {rhs}");
        if f_c * worst.1 > worst.0 * rhs || worst.1 == 0 {
            worst = (f_c, rhs);
        }
        let issues = fold_twins(
            &ColoringRule::new(&c),
            Vec::new,
            |acc: &mut Vec<String>, t| {
                let d = decompose_composite_twin(&spec, t).unwrap();
                acc.extend(d.structural_issues(&spec));
                acc.extend(d.bound_issues(&spec, fx, fy));
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        assert!(issues.is_empty(), "spec {s}: {issues:?}");
        twins += candidates.iter().filter(|t| !t.is_empty() && is_twin(&c, t)).count() as u64;
    }
    Outcome::Pass(format!(
        "{TWINBOUND_SPECS} specs (r=4, m=4); {twins} twins decomposed; tightest f(c)/RHS = {}/{}",
        worst.0, worst.1
    ))
}

fn block_claims() -> Outcome {
    let start = Instant::now();
    let mut profiles = 0;
    let mut twins = 0u64;
    for m in 1..=3usize {
        for code in 0u32..1 << m {
            let letters: Vec<u32> = (0..m).map(|b| (code >> b & 1) + 1).collect();
            let p = BlockProfile::new(LetterString::new(2, letters.clone()).unwrap()).unwrap();
            if p.len() > BLOCK_MAX_LEN {
                continue;
            }
            profiles += 1;
            let summary = verify_block_claims(&p, BLOCK_MAX_LEN).unwrap();
            assert_eq!(summary.violation_count, 0, "{letters:?}: {:?}", summary.violations);
            twins += summary.twins_checked;
            let independent = independent_block_check(&p, &letters);
            assert_eq!(independent, summary.twins_checked, "{letters:?}: twin counts differ");
        }
    }
    assert_eq!(profiles, 9);
    let spent = within(start, BLOCK_LIMIT, "block claims");
    Outcome::Pass(format!("{profiles} profiles with L <= {BLOCK_MAX_LEN}; {twins} twins, 4 claims each; {spent:.1?}"))
}

/// Re-derives the block graph, its shape and the claims from scratch for
/// every twin, returning the number of twins seen (empty twin included).
fn independent_block_check(p: &BlockProfile, x: &[u32]) -> u64 {
    let len = p.len();
    let mut block = vec![0usize; len + 1];
    let mut size = vec![0usize; x.len() + 1];
    let mut next = 1;
    for (k, &letter) in x.iter().enumerate() {
        let w = 3usize.pow(letter);
        for b in block.iter_mut().skip(next).take(w) {
            *b = k + 1;
        }
        size[k + 1] = w;
        next += w;
    }
    assert_eq!(next, len + 1);
    let c = EdgeColoring::from_fn(len, 2, |i, j| if block[i] == block[j] { 1 } else { 2 }).unwrap();
    let check = |t: &TwinPair| {
        assert!(is_twin(&c, t));
        let m = x.len();
        let mut adj = vec![BTreeSet::new(); m + 1];
        for (&i, &j) in t.left.iter().zip(&t.right) {
            adj[block[i]].insert(block[j]);
            adj[block[j]].insert(block[i]);
        }
        let mut hits = vec![0usize; m + 1];
        for &v in t.left.iter().chain(&t.right) {
            hits[block[v]] += 1;
        }
        let uncovered: BTreeSet<usize> = (1..=m).filter(|&k| hits[k] < size[k]).collect();
        assert_eq!(uncovered, uncovered_blocks(p, t).unwrap());
        // Components by depth-first search.
        let mut seen = vec![false; m + 1];
        let mut chi = 0;
        for v in 1..=m {
            if seen[v] {
                continue;
            }
            chi += 1;
            let mut comp = vec![];
            let mut stack = vec![v];
            seen[v] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            if comp.len() == 1 {
                assert!(uncovered.contains(&comp[0]), "{t:?}: single block {} covered", comp[0]);
                continue;
            }
            for (idx, &u) in comp.iter().enumerate() {
                let mut expected = BTreeSet::new();
                if idx > 0 {
                    expected.insert(comp[idx - 1]);
                }
                if idx + 1 < comp.len() {
                    expected.insert(comp[idx + 1]);
                }
                assert_eq!(adj[u], expected, "{t:?}: component {comp:?} is not a path");
            }
            for w in comp.windows(3) {
                if x[w[1] - 1] > x[w[0] - 1].max(x[w[2] - 1]) {
                    assert!(uncovered.contains(&w[1]), "{t:?}: dominant block {} covered", w[1]);
                }
            }
            if comp.iter().all(|k| !uncovered.contains(k)) {
                assert_eq!(x[comp[0] - 1], x[comp[comp.len() - 1] - 1], "{t:?}: covered path ends differ");
            }
        }
        assert_eq!(chi, twin_block_graph(p, t).unwrap().chi());
    };
    check(&TwinPair::empty());
    1 + fold_twins(
        &ColoringRule::new(&c),
        || 0u64,
        |n, t| {
            check(t);
            *n += 1;
        },
        |a, b| a + b,
    )
}

fn lcs_tail() -> Outcome {
    let mut exceed = 0;
    let mut largest = 0;
    for s in 0..LCS_PAIRS {
        let mut g = rng(case_seed(MASTER_SEED ^ 0x1c5, s));
        let mut a: Vec<usize> = (1..=LCS_LEN).collect();
        let mut b = a.clone();
        a.shuffle(&mut g);
        b.shuffle(&mut g);
        let lcs = lcs_length(&Permutation::new(a).unwrap(), &Permutation::new(b).unwrap()).unwrap();
        largest = largest.max(lcs);
        if lcs > LCS_THRESHOLD {
            exceed += 1;
        }
    }
    let line = format!("{LCS_PAIRS} pairs at r={LCS_LEN}: {exceed} exceed {LCS_THRESHOLD}, largest LCS {largest}");
    if exceed == 0 {
        Outcome::Pass(line)
    } else {
        Outcome::Flag(line)
    }
}

fn invariance() -> Outcome {
    for s in 0..INVARIANCE_SAMPLES {
        let seed = case_seed(MASTER_SEED ^ 0x1a, s);
        let n = 2 + (s % 9) as usize;
        let r = 1 + (s % 4) as u32;
        let c = random_coloring(n, r, seed);
        let mut sigma: Vec<u32> = (1..=r).collect();
        sigma.shuffle(&mut rng(seed));
        let f = max_twin(&c).size;
        assert_eq!(max_twin(&relabel_palette(&c, &sigma).unwrap()).size, f, "sample {s}: relabel");
        assert_eq!(max_twin(&c.reversed()).size, f, "sample {s}: reversal");
    }
    Outcome::Pass(format!("{INVARIANCE_SAMPLES} colorings with n <= 10: relabeling and reversal preserve f"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("builder guarantee", builder_guarantee),
        ("binary builder", binary_builder),
        ("weak reduction", weak_reduction),
        ("string reduction", string_reduction),
        ("exhaustive tables", tables),
        ("engine equivalence", engine_equivalence),
        ("composite twin bound", twin_bound),
        ("block claims", block_claims),
        ("lcs tail", lcs_tail),
        ("invariance", invariance),
    ];
    // Criteria report through their own lines; keep panic messages short.
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(Outcome::Pass(detail)) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Ok(Outcome::Flag(detail)) => println!("FLAG {:>2} {name}: {detail}", k + 1),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL {:>2} {name}: {msg}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

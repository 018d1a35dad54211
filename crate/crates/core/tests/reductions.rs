use twin_core::oracle::{fold_twins, max_string_twin, max_twin, max_weak_twin, ColoringRule};
use twin_core::reductions::{coloring_from_permutation, coloring_from_string};
use twin_core::sequences::{validate_string_twin, validate_weak_twin};
use twin_core::{validate_twin, LetterString, Permutation, TwinPair};

/// Every ordered pair of disjoint equal-size index sets of `[n]`.
fn all_candidate_pairs(n: usize) -> Vec<TwinPair> {
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

fn strings(n: usize) -> impl Iterator<Item = LetterString> {
    (0u32..1 << n).map(move |code| LetterString::new(2, (0..n).map(|b| (code >> b & 1) + 1).collect()).unwrap())
}

#[test]
fn weak_reduction_twin_sets_coincide() {
    for n in 2..=5usize {
        let candidates = all_candidate_pairs(n);
        let count = (1..=n as u64).product::<u64>();
        for k in 0..count {
            let pi = Permutation::unrank(n, k);
            let c = coloring_from_permutation(&pi).unwrap();
            for t in &candidates {
                assert_eq!(
                    validate_twin(&c, t).unwrap().is_valid(),
                    validate_weak_twin(&pi, &t.left, &t.right).unwrap().is_valid(),
                    "{pi:?} {t:?}"
                );
            }
        }
    }
}

#[test]
fn weak_reduction_sizes_on_all_of_s6() {
    for k in 0..720 {
        let pi = Permutation::unrank(6, k);
        let c = coloring_from_permutation(&pi).unwrap();
        assert_eq!(max_twin(&c).size, max_weak_twin(&pi).size, "{pi:?}");
        let used: std::collections::BTreeSet<u32> = c.colors().iter().copied().collect();
        let monotone = pi == Permutation::identity(6) || pi == Permutation::identity(6).reverse_complement();
        assert_eq!(used.len(), if monotone { 1 } else { 2 }, "{pi:?}");
    }
}

#[test]
fn string_reduction_twin_sets_coincide() {
    for n in 2..=7usize {
        let candidates = all_candidate_pairs(n);
        for x in strings(n) {
            let c = coloring_from_string(&x).unwrap();
            for t in &candidates {
                let expected = match t.len() {
                    0 => true,
                    k => validate_string_twin(&x, &t.left[..k - 1], &t.right[..k - 1]).unwrap().is_valid(),
                };
                assert_eq!(validate_twin(&c, t).unwrap().is_valid(), expected, "{x:?} {t:?}");
            }
        }
    }
}

#[test]
fn string_reduction_on_binary_strings_up_to_eight() {
    for n in 2..=8usize {
        for x in strings(n) {
            let c = coloring_from_string(&x).unwrap();
            let f = max_twin(&c).size;
            let f_string = max_string_twin(&x).size;
            assert!(f <= f_string + 1, "{x:?}: {f} vs {f_string}");
            // Every maximum twin loses its maxima to become a string-twin.
            let bad = fold_twins(
                &ColoringRule::new(&c),
                || 0usize,
                |bad, t| {
                    if t.len() == f {
                        let k = t.len() - 1;
                        if !validate_string_twin(&x, &t.left[..k], &t.right[..k]).unwrap().is_valid() {
                            *bad += 1;
                        }
                    }
                },
                |a, b| a + b,
            );
            assert_eq!(bad, 0, "{x:?}");
        }
    }
}

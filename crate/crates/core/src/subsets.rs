//! Small combinatorics helpers: binomials, colex ranks of k-subsets and
//! in-place lexicographic enumeration.

/// Binomial coefficient `C(n, k)`, saturating at `u64::MAX`.
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of unordered pairs on `n` points.
#[inline]
pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Colex rank of the pair `{a, b}` (any order, `a != b`).
#[inline]
pub fn pair_rank(a: usize, b: usize) -> usize {
    debug_assert_ne!(a, b);
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    hi * (hi - 1) / 2 + lo
}

/// Inverse of [`pair_rank`]: returns `(lo, hi)` with `lo < hi`.
pub fn pair_unrank(rank: usize) -> (usize, usize) {
    // hi is the largest integer with hi*(hi-1)/2 <= rank
    let mut hi = (((8 * rank + 1) as f64).sqrt() as usize + 1) / 2;
    while hi * (hi - 1) / 2 > rank {
        hi -= 1;
    }
    while (hi + 1) * hi / 2 <= rank {
        hi += 1;
    }
    (rank - hi * (hi - 1) / 2, hi)
}

/// Colex rank of a strictly increasing subset.
pub fn rank(subset: &[usize]) -> usize {
    match subset {
        [] => 0,
        [a] => *a,
        [a, b] => pair_rank(*a, *b),
        _ => subset
            .iter()
            .enumerate()
            .map(|(i, &s)| binom(s, i + 1) as usize)
            .sum(),
    }
}

/// Colex unranking into `out` (length k); the result is strictly increasing.
pub fn unrank(mut r: usize, out: &mut [usize]) {
    let k = out.len();
    for i in (0..k).rev() {
        // largest s with C(s, i+1) <= r
        let mut s = i;
        while binom(s + 1, i + 1) as usize <= r {
            s += 1;
        }
        out[i] = s;
        r -= binom(s, i + 1) as usize;
    }
}

/// Sorts a small subset in place and reports whether its elements are distinct.
pub fn normalize(subset: &mut [usize]) -> bool {
    subset.sort_unstable();
    subset.windows(2).all(|w| w[0] < w[1])
}

/// Advances `comb` (strictly increasing, values `< n`) to the next k-subset in
/// lexicographic order. Returns `false` once the last subset has been passed.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every k-subset of `[0, n)` in lexicographic order. Stops early
/// and returns the value when `f` returns `Some`.
pub fn find_combination<T>(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if k > n {
        return None;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        if let Some(t) = f(&comb) {
            return Some(t);
        }
        if !next_combination(&mut comb, n) {
            return None;
        }
    }
}

/// Calls `f` on every k-subset of `[0, n)` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    find_combination::<()>(n, k, |c| {
        f(c);
        None
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(32, 4), 35960);
        assert_eq!(binom(16, 5), 4368);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(7, 0), 1);
    }

    #[test]
    fn colex_rank_is_a_bijection() {
        for k in 1..=4 {
            let n = 9;
            let mut seen = vec![false; binom(n, k) as usize];
            for_each_combination(n, k, |c| {
                let r = rank(c);
                assert!(!seen[r]);
                seen[r] = true;
                let mut back = vec![0; k];
                unrank(r, &mut back);
                assert_eq!(back, c);
            });
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn pair_unrank_inverts_pair_rank() {
        for hi in 1..200 {
            for lo in 0..hi {
                assert_eq!(pair_unrank(pair_rank(lo, hi)), (lo, hi));
            }
        }
    }

    #[test]
    fn lexicographic_enumeration_counts() {
        let mut count = 0;
        let mut prev: Option<Vec<usize>> = None;
        for_each_combination(8, 3, |c| {
            if let Some(p) = &prev {
                assert!(p.as_slice() < c);
            }
            prev = Some(c.to_vec());
            count += 1;
        });
        assert_eq!(count, 56);
        let mut none = 0;
        for_each_combination(2, 3, |_| none += 1);
        assert_eq!(none, 0);
    }
}

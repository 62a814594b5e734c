//! Exhaustive (p,q)-property checks on k-uniform colorings.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::color::ColorId;
use crate::coloring::GraphColoring;
use crate::error::{Error, Result};
use crate::subsets::{self, binom};

/// A p-set whose k-subsets carry at most `q - 1` distinct colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQViolation {
    /// The p vertices, 0-based and increasing.
    pub vertices: Vec<usize>,
    /// The distinct colors on its k-subsets, sorted.
    pub colors: Vec<ColorId>,
}

impl PQViolation {
    pub fn color_count(&self) -> usize {
        self.colors.len()
    }
}

pub(crate) fn check_pq_params(k: usize, n: usize, p: usize, q: usize) -> Result<()> {
    if p < k + 1 || p > n {
        return Err(Error::InvalidParameter(format!("need k+1 <= p <= n, got k={k} p={p} n={n}")));
    }
    if q < 2 || q as u64 > binom(p, k) {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= q <= C(p,k) = {}, got q={q}",
            binom(p, k)
        )));
    }
    Ok(())
}

/// Distinct colors on the k-subsets of `set`, or `None` if one is uncolored.
pub fn span_colors(c: &GraphColoring, set: &[usize]) -> Option<Vec<ColorId>> {
    let k = c.k();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut sub = vec![0; k];
    let mut colors = Vec::with_capacity(binom(set.len(), k) as usize);
    loop {
        for (s, &i) in sub.iter_mut().zip(&idx) {
            *s = set[i];
        }
        let id = c.get_sorted(&sub)?;
        if !colors.contains(&id) {
            colors.push(id);
        }
        if !subsets::next_combination(&mut idx, set.len()) {
            break;
        }
    }
    colors.sort_unstable();
    Some(colors)
}

/// The lexicographically first p-set with fewer than `q` colors. p-sets with an
/// uncolored k-subset are skipped, so partial colorings are tested only on
/// their fully colored p-sets.
pub fn verify_pq(c: &GraphColoring, p: usize, q: usize) -> Result<Option<PQViolation>> {
    verify_pq_tracked(c, p, q, &AtomicU64::new(0))
}

/// [`verify_pq`] that adds the number of checked p-sets to `progress` as it goes.
pub fn verify_pq_tracked(
    c: &GraphColoring,
    p: usize,
    q: usize,
    progress: &AtomicU64,
) -> Result<Option<PQViolation>> {
    let n = c.n();
    check_pq_params(c.k(), n, p, q)?;
    let found = (0..n).into_par_iter().find_map_first(|first| {
        let rest = n - first - 1;
        let mut tail: Vec<usize> = (0..p - 1).collect();
        let mut set = vec![first; p];
        let mut done = 0u64;
        if p - 1 > rest {
            return None;
        }
        let hit = loop {
            for (s, &t) in set[1..].iter_mut().zip(&tail) {
                *s = first + 1 + t;
            }
            done += 1;
            if done % 4096 == 0 {
                progress.fetch_add(4096, Ordering::Relaxed);
            }
            if let Some(colors) = span_colors(c, &set) {
                if colors.len() < q {
                    break Some(PQViolation { vertices: set.clone(), colors });
                }
            }
            if !subsets::next_combination(&mut tail, rest) {
                break None;
            }
        };
        progress.fetch_add(done % 4096, Ordering::Relaxed);
        hit
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;

    #[test]
    fn rainbow_and_monochromatic() {
        let mut next = 0;
        let rainbow = GraphColoring::from_fn(5, 3, |_| {
            next += 1;
            Some(Color::int(next))
        })
        .unwrap();
        assert_eq!(verify_pq(&rainbow, 4, 3).unwrap(), None);
        let mono = GraphColoring::from_fn(4, 2, |_| Some(Color::int(1))).unwrap();
        let v = verify_pq(&mono, 3, 2).unwrap().unwrap();
        assert_eq!(v.vertices, vec![0, 1, 2]);
        assert_eq!(v.color_count(), 1);
    }

    #[test]
    fn parameter_checks() {
        let mono = GraphColoring::from_fn(4, 2, |_| Some(Color::int(1))).unwrap();
        assert!(verify_pq(&mono, 2, 2).is_err());
        assert!(verify_pq(&mono, 5, 2).is_err());
        assert!(verify_pq(&mono, 3, 4).is_err());
        assert!(verify_pq(&mono, 3, 1).is_err());
    }

    #[test]
    fn progress_counts_every_set() {
        let c = crate::constructions::binary_coloring(12).unwrap();
        let progress = AtomicU64::new(0);
        assert_eq!(verify_pq_tracked(&c, 3, 2, &progress).unwrap(), None);
        assert_eq!(progress.load(Ordering::Relaxed), binom(12, 3));
    }
}

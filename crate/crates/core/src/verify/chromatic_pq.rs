//! Chromatic (p,q)-property: every union of `q - 1` color classes must be
//! `(p - 1)`-colorable.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::seq::index::sample;
use rayon::prelude::*;

use crate::chromatic::{chromatic_number, class_union, ChromaticResult};
use crate::color::ColorId;
use crate::coloring::GraphColoring;
use crate::error::{Error, Result};
use crate::rng::stream;
use crate::subsets::{self, binom};

/// Which color subsets to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    Exhaustive,
    /// `count` subsets drawn uniformly; subset `s` comes from stream `s` of `seed`.
    Sample { count: u64, seed: u64 },
}

/// `q - 1` colors whose classes span a graph of chromatic number at least `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticWitness {
    pub colors: Vec<ColorId>,
    /// Exact chromatic number of the union, with a minimal coloring.
    pub result: ChromaticResult,
}

/// Colors actually used by a coloring, increasing.
pub fn used_colors(c: &GraphColoring) -> Vec<ColorId> {
    let mut seen = vec![false; c.palette_size()];
    c.ids().iter().flatten().for_each(|id| seen[id.index()] = true);
    (0..seen.len()).filter(|&i| seen[i]).map(|i| ColorId(i as u32)).collect()
}

pub fn verify_chromatic_pq(
    c: &GraphColoring,
    p: usize,
    q: usize,
    mode: SampleMode,
) -> Result<Option<ChromaticWitness>> {
    verify_chromatic_pq_tracked(c, p, q, mode, &AtomicU64::new(0))
}

/// [`verify_chromatic_pq`] reporting the number of tested subsets to `progress`.
/// Exhaustive mode returns the lexicographically first witness; sample mode the
/// witness with the smallest sample index.
pub fn verify_chromatic_pq_tracked(
    c: &GraphColoring,
    p: usize,
    q: usize,
    mode: SampleMode,
    progress: &AtomicU64,
) -> Result<Option<ChromaticWitness>> {
    if c.k() != 2 {
        return Err(Error::InvalidParameter("chromatic (p,q) needs a graph coloring".into()));
    }
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameter(format!("need p >= 2 and q >= 2, got p={p} q={q}")));
    }
    let palette = used_colors(c);
    let size = q - 1;
    if palette.len() < size {
        return Err(Error::InvalidParameter(format!(
            "palette has {} colors, fewer than q-1 = {size}",
            palette.len()
        )));
    }
    let test = |set: &[usize]| -> Option<ChromaticWitness> {
        progress.fetch_add(1, Ordering::Relaxed);
        let colors: Vec<ColorId> = set.iter().map(|&i| palette[i]).collect();
        let g = class_union(c, &colors);
        match chromatic_number(&g, p - 1) {
            ChromaticResult::Exact { .. } => None,
            ChromaticResult::ExceedsLimit(_) => Some(ChromaticWitness {
                colors,
                result: chromatic_number(&g, g.n().max(1)),
            }),
        }
    };
    let found = match mode {
        SampleMode::Exhaustive => {
            let total = binom(palette.len(), size);
            if total > 1 << 40 {
                return Err(Error::TooLarge(total));
            }
            (0..palette.len()).into_par_iter().find_map_first(|first| {
                let rest = palette.len() - first - 1;
                if size - 1 > rest {
                    return None;
                }
                let mut tail: Vec<usize> = (0..size - 1).collect();
                let mut set = vec![first; size];
                loop {
                    for (s, &t) in set[1..].iter_mut().zip(&tail) {
                        *s = first + 1 + t;
                    }
                    if let Some(w) = test(&set) {
                        return Some(w);
                    }
                    if !subsets::next_combination(&mut tail, rest) {
                        return None;
                    }
                }
            })
        }
        SampleMode::Sample { count, seed } => {
            if count == 0 {
                return Err(Error::InvalidParameter("sample count must be positive".into()));
            }
            (0..count).into_par_iter().find_map_first(|s| {
                let mut rng = stream(seed, s);
                let mut set = sample(&mut rng, palette.len(), size).into_vec();
                set.sort_unstable();
                test(&set)
            })
        }
    };
    Ok(found)
}

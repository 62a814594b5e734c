//! Seeded random sources. Every randomized path takes an explicit seed; the
//! per-item stream index lets parallel callers reproduce sequential results.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::color::{ColorId, ColorTable};
use crate::coloring::{GraphColoring, GridColoring};
use crate::error::Result;
use crate::subsets::{binom, pairs};

/// Independent generator number `index` derived from `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniformly random coloring of the grid `K_m x K_n` with colors `1..=r`.
pub fn uniform_grid(m: usize, n: usize, r: usize, rng: &mut impl Rng) -> GridColoring {
    let rows = (0..m * pairs(n)).map(|_| ColorId(rng.gen_range(0..r as u32))).collect();
    let cols = (0..n * pairs(m)).map(|_| ColorId(rng.gen_range(0..r as u32))).collect();
    GridColoring::from_ids(m, n, rows, cols, ColorTable::integers(r)).expect("sizes match")
}

/// Uniformly random coloring of all k-subsets of `[0, n)` with colors `1..=r`.
pub fn uniform_hyper(n: usize, k: usize, r: usize, rng: &mut impl Rng) -> Result<GraphColoring> {
    let ids = (0..binom(n, k)).map(|_| ColorId(rng.gen_range(0..r as u32))).collect();
    GraphColoring::from_ids(n, k, ids, ColorTable::integers(r))
}

//! Growth of the chromatic number of color-class unions in the digit-pair
//! coloring: `chi(G_X) <= 2^(3 sqrt(|X| log2 |X|))`, together with the
//! auxiliary-graph facts behind it (independent color sets span bipartite
//! graphs, and `chi(G_X)` is at most the number of independent sets).

use std::sync::atomic::{AtomicU64, Ordering};

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;

use crate::chromatic::{is_bipartite, proper_coloring, Bipartition};
use crate::color::ColorId;
use crate::coloring::GraphColoring;
use crate::constructions::auxiliary::{auxiliary_color_graph, independent_sets};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::rng::stream;
use crate::subsets;
use crate::verify::chromatic_pq::used_colors;

/// `floor(2^(3 sqrt(s log2 s)))`, or 1 for `s <= 1`.
pub fn chi_slow_grow_bound(s: usize) -> usize {
    if s <= 1 {
        return 1;
    }
    let s = s as f64;
    (3.0 * (s * s.log2()).sqrt()).exp2().floor() as usize
}

#[derive(Clone, Debug)]
pub struct SlowGrowConfig {
    /// Color-set sizes checked over every subset of the palette.
    pub exhaustive_sizes: Vec<usize>,
    /// Number of sampled color sets (sizes uniform in `2..=max_sample_size`).
    pub samples: u64,
    pub max_sample_size: usize,
    pub seed: u64,
}

impl Default for SlowGrowConfig {
    fn default() -> Self {
        SlowGrowConfig {
            exhaustive_sizes: vec![2, 3],
            samples: 1000,
            max_sample_size: 8,
            seed: 0,
        }
    }
}

/// A color set breaking one of the checked statements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlowGrowViolation {
    /// `chi(G_X)` exceeds the growth bound.
    Bound { colors: Vec<ColorId>, bound: usize },
    /// An independent set of the auxiliary graph spans a non-bipartite graph.
    NotBipartite { colors: Vec<ColorId>, independent: Vec<ColorId>, odd_cycle: Vec<usize> },
    /// `chi(G_X)` exceeds the number of independent sets.
    IndependentSetCount { colors: Vec<ColorId>, count: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SlowGrowReport {
    pub exhaustive_sets: u64,
    pub sampled_sets: u64,
    pub independent_sets: u64,
    pub violation: Option<SlowGrowViolation>,
}

/// Per-color edge lists for fast unions.
struct ClassEdges {
    n: usize,
    edges: Vec<Vec<(usize, usize)>>,
}

impl ClassEdges {
    fn new(c: &GraphColoring) -> Self {
        let mut edges = vec![Vec::new(); c.palette_size()];
        for (r, id) in c.ids().iter().enumerate() {
            if let Some(id) = id {
                edges[id.index()].push(subsets::pair_unrank(r));
            }
        }
        ClassEdges { n: c.n(), edges }
    }

    fn union(&self, colors: &[ColorId]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for id in colors {
            for &(u, v) in &self.edges[id.index()] {
                g.insert(u, v);
            }
        }
        g
    }
}

/// Number of colors of a greedy coloring in vertex order.
fn greedy_colors(g: &SimpleGraph) -> usize {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = 0;
    let mut taken = Vec::new();
    for v in 0..g.n() {
        taken.clear();
        taken.resize(used + 1, false);
        for u in g.neighbors(v).filter(|&u| u < v) {
            taken[color[u]] = true;
        }
        let c = taken.iter().position(|&t| !t).expect("free color");
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Certifies `chi(g) <= r` cheaply when possible, exactly otherwise.
fn colorable(g: &SimpleGraph, r: usize) -> bool {
    greedy_colors(g) <= r || proper_coloring(g, r).is_some()
}

fn check_bound(edges: &ClassEdges, colors: &[ColorId]) -> Option<SlowGrowViolation> {
    let bound = chi_slow_grow_bound(colors.len());
    (!colorable(&edges.union(colors), bound)).then(|| SlowGrowViolation::Bound {
        colors: colors.to_vec(),
        bound,
    })
}

/// Full check of one color set: growth bound, bipartite independent sets,
/// and the independent-set count bound. Returns the number of independent sets.
fn check_with_auxiliary(
    c: &GraphColoring,
    edges: &ClassEdges,
    colors: &[ColorId],
) -> Result<(usize, Option<SlowGrowViolation>)> {
    if let Some(v) = check_bound(edges, colors) {
        return Ok((0, Some(v)));
    }
    let h = auxiliary_color_graph(c, colors)?;
    let sets = independent_sets(&h);
    for set in &sets {
        let independent: Vec<ColorId> = set.iter().map(|&s| colors[s]).collect();
        if let Bipartition::OddCycle(odd_cycle) = is_bipartite(&edges.union(&independent)) {
            return Ok((
                sets.len(),
                Some(SlowGrowViolation::NotBipartite { colors: colors.to_vec(), independent, odd_cycle }),
            ));
        }
    }
    if !colorable(&edges.union(colors), sets.len()) {
        return Ok((
            sets.len(),
            Some(SlowGrowViolation::IndependentSetCount { colors: colors.to_vec(), count: sets.len() }),
        ));
    }
    Ok((sets.len(), None))
}

pub fn check_chi_slow_grow(c: &GraphColoring, cfg: &SlowGrowConfig) -> Result<SlowGrowReport> {
    check_chi_slow_grow_tracked(c, cfg, &AtomicU64::new(0))
}

/// Runs the exhaustive sizes (growth bound only) and then the samples (growth
/// bound plus both auxiliary-graph statements). Stops at the first violation.
pub fn check_chi_slow_grow_tracked(
    c: &GraphColoring,
    cfg: &SlowGrowConfig,
    progress: &AtomicU64,
) -> Result<SlowGrowReport> {
    if c.k() != 2 {
        return Err(Error::InvalidParameter("needs a graph coloring".into()));
    }
    let palette = used_colors(c);
    // reject foreign colorings before any work
    auxiliary_color_graph(c, &palette[..palette.len().min(1)])?;
    let edges = ClassEdges::new(c);
    let mut report = SlowGrowReport::default();
    for &size in &cfg.exhaustive_sizes {
        if size == 0 || size > palette.len() {
            continue;
        }
        let found = (0..palette.len()).into_par_iter().find_map_first(|first| {
            let rest = palette.len() - first - 1;
            if size - 1 > rest {
                return None;
            }
            let mut tail: Vec<usize> = (0..size - 1).collect();
            let mut colors = vec![palette[first]; size];
            let mut done = 0;
            let hit = loop {
                for (s, &t) in colors[1..].iter_mut().zip(&tail) {
                    *s = palette[first + 1 + t];
                }
                done += 1;
                if let Some(v) = check_bound(&edges, &colors) {
                    break Some(v);
                }
                if !subsets::next_combination(&mut tail, rest) {
                    break None;
                }
            };
            progress.fetch_add(done, Ordering::Relaxed);
            hit
        });
        report.exhaustive_sets += subsets::binom(palette.len(), size);
        if found.is_some() {
            report.violation = found;
            return Ok(report);
        }
    }
    let max = cfg.max_sample_size.min(palette.len());
    if cfg.samples > 0 && max >= 2 {
        let results: Vec<Result<(usize, Option<SlowGrowViolation>)>> = (0..cfg.samples)
            .into_par_iter()
            .map(|s| {
                let mut rng = stream(cfg.seed, s);
                let size = rng.gen_range(2..=max);
                let mut idx = sample(&mut rng, palette.len(), size).into_vec();
                idx.sort_unstable();
                let colors: Vec<ColorId> = idx.iter().map(|&i| palette[i]).collect();
                progress.fetch_add(1, Ordering::Relaxed);
                check_with_auxiliary(c, &edges, &colors)
            })
            .collect();
        for r in results {
            let (count, violation) = r?;
            report.sampled_sets += 1;
            report.independent_sets += count as u64;
            if violation.is_some() {
                report.violation = violation;
                return Ok(report);
            }
        }
    }
    Ok(report)
}

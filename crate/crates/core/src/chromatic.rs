//! Exact chromatic number, bipartiteness and proper colorings, plus the two
//! graph builders (class unions and agreement graphs) the constructions use.

use std::collections::VecDeque;

use crate::color::ColorId;
use crate::coloring::{EdgePartition, GraphColoring};
use crate::error::{Error, Result};
use crate::graph::{BitIter, SimpleGraph};
use crate::subsets::pair_unrank;

/// Outcome of [`chromatic_number`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticResult {
    /// `chi` is the chromatic number; `coloring[v] < chi` is a proper coloring
    /// using every one of the `chi` colors.
    Exact { chi: usize, coloring: Vec<usize> },
    /// The chromatic number is larger than the limit.
    ExceedsLimit(usize),
}

impl ChromaticResult {
    pub fn chi(&self) -> Option<usize> {
        match self {
            ChromaticResult::Exact { chi, .. } => Some(*chi),
            ChromaticResult::ExceedsLimit(_) => None,
        }
    }

    /// Whether the result certifies `chi <= r`.
    pub fn at_most(&self, r: usize) -> bool {
        self.chi().is_some_and(|c| c <= r)
    }
}

/// Computes the chromatic number exactly when it does not exceed `limit`.
///
/// The lower bound comes from a greedy clique and the upper bound from a
/// DSATUR coloring; the gap is closed by the decision procedure
/// [`k_coloring`] for each `k` in increasing order.
pub fn chromatic_number(g: &SimpleGraph, limit: usize) -> ChromaticResult {
    let n = g.n();
    if n == 0 {
        return ChromaticResult::Exact { chi: 0, coloring: Vec::new() };
    }
    let ub_coloring = dsatur(g);
    let ub = count_colors(&ub_coloring);
    let lb = greedy_clique(g).len().max(1);
    let exact = |chi: usize, coloring: Vec<usize>| {
        if chi <= limit {
            ChromaticResult::Exact { chi, coloring }
        } else {
            ChromaticResult::ExceedsLimit(limit)
        }
    };
    if lb >= ub {
        return exact(ub, ub_coloring);
    }
    for k in lb..ub {
        if k > limit {
            return ChromaticResult::ExceedsLimit(limit);
        }
        if let Some(c) = k_coloring(g, k) {
            let chi = count_colors(&c);
            return exact(chi, c);
        }
    }
    exact(ub, ub_coloring)
}

fn count_colors(c: &[usize]) -> usize {
    c.iter().map(|&x| x + 1).max().unwrap_or(0)
}

/// A proper coloring with at most `r` colors, if one exists.
///
/// Tries DSATUR first and falls back to exact search, so `None` means
/// `chi(g) > r`.
pub fn proper_coloring(g: &SimpleGraph, r: usize) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    let greedy = dsatur(g);
    if count_colors(&greedy) <= r {
        return Some(greedy);
    }
    if greedy_clique(g).len() > r {
        return None;
    }
    k_coloring(g, r)
}

/// DSATUR greedy coloring: repeatedly colors the uncolored vertex with the
/// most distinct neighbor colors (ties: higher degree, then lower index) with
/// the smallest available color.
pub fn dsatur(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut color = vec![usize::MAX; n];
    // neighbor colors seen per vertex, as growable bitsets
    let mut seen: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by(|&a, &b| sat[a].cmp(&sat[b]).then(deg[a].cmp(&deg[b])).then(b.cmp(&a)))
            .expect("uncolored vertex remains");
        let c = first_zero(&seen[v]);
        color[v] = c;
        for u in g.neighbors(v) {
            if color[u] == usize::MAX && set_bit(&mut seen[u], c) {
                sat[u] += 1;
            }
        }
    }
    color
}

fn first_zero(bits: &[u64]) -> usize {
    for (i, w) in bits.iter().enumerate() {
        if *w != u64::MAX {
            return i * 64 + (!w).trailing_zeros() as usize;
        }
    }
    bits.len() * 64
}

fn set_bit(bits: &mut Vec<u64>, c: usize) -> bool {
    if bits.len() <= c / 64 {
        bits.resize(c / 64 + 1, 0);
    }
    let mask = 1u64 << (c % 64);
    let fresh = bits[c / 64] & mask == 0;
    bits[c / 64] |= mask;
    fresh
}

/// A large clique found greedily from up to 64 high-degree seeds.
pub fn greedy_clique(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = order.first().map(|&v| vec![v]).unwrap_or_default();
    for &seed in order.iter().take(64) {
        let mut clique = vec![seed];
        let mut cand: Vec<u64> = g.row(seed).to_vec();
        loop {
            let mut pick = None;
            let mut pick_score = 0;
            for u in BitIter::new(&cand) {
                let score: usize = g
                    .row(u)
                    .iter()
                    .zip(&cand)
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum();
                if pick.is_none() || score > pick_score {
                    pick = Some(u);
                    pick_score = score;
                }
            }
            let Some(u) = pick else { break };
            clique.push(u);
            for (c, a) in cand.iter_mut().zip(g.row(u)) {
                *c &= a;
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Decides whether `g` is `k`-colorable and returns a proper coloring if so.
///
/// Vertices of degree below `k` are peeled off first (they can always be
/// colored last); the remaining core is searched by DSATUR-ordered
/// backtracking with first-use symmetry breaking.
pub fn k_coloring(g: &SimpleGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let (core, peeled) = peel(g, k);
    let mut color = vec![usize::MAX; n];
    if !core.is_empty() {
        let mut search = Backtrack::new(g, &core, k);
        if !search.run() {
            return None;
        }
        for (idx, &v) in core.iter().enumerate() {
            color[v] = search.color[idx];
        }
    }
    for &v in peeled.iter().rev() {
        let mut used = vec![false; k];
        for u in g.neighbors(v) {
            if color[u] != usize::MAX {
                used[color[u]] = true;
            }
        }
        color[v] = used.iter().position(|&b| !b).expect("peeled vertex has a free color");
    }
    Some(color)
}

/// Splits vertices into the k-core and the peeled vertices in removal order.
fn peel(g: &SimpleGraph, k: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    stack.iter().for_each(|&v| removed[v] = true);
    let mut peeled = Vec::new();
    while let Some(v) = stack.pop() {
        peeled.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
                if deg[u] < k {
                    removed[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    let core = (0..n).filter(|&v| !removed[v]).collect();
    (core, peeled)
}

struct Backtrack {
    k: usize,
    adj: Vec<Vec<usize>>,
    deg: Vec<usize>,
    color: Vec<usize>,
    conflict: Vec<u32>,
    sat: Vec<usize>,
}

impl Backtrack {
    fn new(g: &SimpleGraph, core: &[usize], k: usize) -> Self {
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in core.iter().enumerate() {
            local[v] = i;
        }
        let adj: Vec<Vec<usize>> = core
            .iter()
            .map(|&v| g.neighbors(v).filter_map(|u| (local[u] != usize::MAX).then_some(local[u])).collect())
            .collect();
        let deg = adj.iter().map(Vec::len).collect();
        let c = core.len();
        Backtrack {
            k,
            adj,
            deg,
            color: vec![usize::MAX; c],
            conflict: vec![0; c * k],
            sat: vec![0; c],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            let slot = &mut self.conflict[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            let slot = &mut self.conflict[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.color.len() {
            if self.color[v] != usize::MAX {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) if (self.sat[v], self.deg[v]) > (self.sat[b], self.deg[b]) => Some(v),
                keep => keep,
            };
        }
        best
    }

    fn run(&mut self) -> bool {
        self.step(0)
    }

    fn step(&mut self, used: usize) -> bool {
        let Some(v) = self.select() else { return true };
        if self.sat[v] >= self.k {
            return false;
        }
        let top = self.k.min(used + 1);
        for c in 0..top {
            if self.conflict[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.step(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// Result of [`is_bipartite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex; a proper 2-coloring.
    TwoColoring(Vec<u8>),
    /// Vertices of an odd cycle in traversal order (consecutive entries and the
    /// last/first pair are adjacent).
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::TwoColoring(_))
    }
}

/// BFS two-coloring from the lowest-index vertex of each component.
pub fn is_bipartite(g: &SimpleGraph) -> Bipartition {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return Bipartition::OddCycle(odd_cycle(&parent, &depth, u, v));
                }
            }
        }
    }
    Bipartition::TwoColoring(side)
}

fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// The subgraph of `K_n` formed by the edges of the listed classes.
pub fn union_subgraph(p: &EdgePartition, classes: &[usize]) -> Result<SimpleGraph> {
    let mut want = vec![false; p.t()];
    for &c in classes {
        if c >= p.t() {
            return Err(Error::ClassOutOfRange { index: c, classes: p.t() });
        }
        want[c] = true;
    }
    let mut g = SimpleGraph::new(p.n());
    for (r, &c) in p.classes().iter().enumerate() {
        if want[c as usize] {
            let (u, v) = pair_unrank(r);
            g.insert(u, v);
        }
    }
    Ok(g)
}

/// The subgraph of `K_n` formed by the edges whose color lies in `colors`.
pub fn class_union(c: &GraphColoring, colors: &[ColorId]) -> SimpleGraph {
    debug_assert_eq!(c.k(), 2);
    let mut want = vec![false; c.palette_size()];
    for id in colors {
        want[id.index()] = true;
    }
    let mut g = SimpleGraph::new(c.n());
    for (r, id) in c.ids().iter().enumerate() {
        if id.is_some_and(|id| want[id.index()]) {
            let (u, v) = pair_unrank(r);
            g.insert(u, v);
        }
    }
    g
}

/// Edges where two graph colorings assign equal structured colors.
pub fn agreement_graph(c1: &GraphColoring, c2: &GraphColoring) -> Result<SimpleGraph> {
    if c1.k() != 2 || c2.k() != 2 {
        return Err(Error::InvalidParameter("agreement graphs need graph colorings".into()));
    }
    if c1.n() != c2.n() {
        return Err(Error::SizeMismatch { left: c1.n(), right: c2.n() });
    }
    let shared = c1.table() == c2.table();
    // translate c2's ids into c1's table
    let map: Vec<Option<ColorId>> = if shared {
        Vec::new()
    } else {
        c2.table().iter().map(|(_, v)| c1.table().get(v)).collect()
    };
    let mut g = SimpleGraph::new(c1.n());
    for (r, (a, b)) in c1.ids().iter().zip(c2.ids()).enumerate() {
        let (Some(a), Some(b)) = (a, b) else { continue };
        let same = if shared { a == b } else { map[b.index()] == Some(*a) };
        if same {
            let (u, v) = pair_unrank(r);
            g.insert(u, v);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;

    fn petersen() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        SimpleGraph::from_edges(10, edges).unwrap()
    }

    fn hypercube(d: usize) -> SimpleGraph {
        let n = 1 << d;
        let edges = (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b)))).filter(|(u, v)| u < v);
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&SimpleGraph::new(5), 5).chi(), Some(1));
        assert_eq!(chromatic_number(&SimpleGraph::complete(4), 10).chi(), Some(4));
        assert_eq!(chromatic_number(&SimpleGraph::cycle(5), 3).chi(), Some(3));
        assert_eq!(chromatic_number(&SimpleGraph::cycle(5), 2), ChromaticResult::ExceedsLimit(2));
        assert_eq!(chromatic_number(&petersen(), 10).chi(), Some(3));
        assert_eq!(chromatic_number(&SimpleGraph::new(0), 1).chi(), Some(0));
    }

    #[test]
    fn exact_colorings_are_proper_and_tight() {
        for g in [petersen(), SimpleGraph::cycle(7), hypercube(4), SimpleGraph::complete(6)] {
            let ChromaticResult::Exact { chi, coloring } = chromatic_number(&g, 10) else {
                panic!("limit too small")
            };
            assert!(g.is_proper(&coloring));
            assert_eq!(count_colors(&coloring), chi);
        }
    }

    #[test]
    fn proper_coloring_contract() {
        assert_eq!(proper_coloring(&SimpleGraph::complete(3), 2), None);
        let c = proper_coloring(&SimpleGraph::complete(3), 3).unwrap();
        assert_eq!(c, vec![0, 1, 2]);
        let p = petersen();
        assert!(p.is_proper(&proper_coloring(&p, 3).unwrap()));
        assert_eq!(proper_coloring(&p, 2), None);
    }

    #[test]
    fn bipartiteness() {
        let edge = SimpleGraph::from_edges(2, [(0, 1)]).unwrap();
        assert!(is_bipartite(&edge).is_bipartite());
        match is_bipartite(&SimpleGraph::complete(3)) {
            Bipartition::OddCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("{other:?}"),
        }
        let q4 = hypercube(4);
        let Bipartition::TwoColoring(side) = is_bipartite(&q4) else { panic!() };
        for v in 0..16usize {
            assert_eq!(side[v] as u32, v.count_ones() % 2);
        }
        let Bipartition::OddCycle(c) = is_bipartite(&petersen()) else { panic!() };
        assert_eq!(c.len() % 2, 1);
        for i in 0..c.len() {
            assert!(petersen().has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn union_of_singleton_classes() {
        let p = EdgePartition::singletons(3);
        let g = union_subgraph(&p, &[0, 1]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(union_subgraph(&p, &[]).unwrap().edge_count(), 0);
        assert_eq!(union_subgraph(&p, &[0, 1, 2]).unwrap(), SimpleGraph::complete(3));
        assert!(union_subgraph(&p, &[3]).is_err());
    }

    #[test]
    fn agreement_compares_structured_values() {
        let c1 = GraphColoring::from_fn(4, 2, |s| Some(Color::int((s[0] + s[1]) as i64 % 2))).unwrap();
        // tables differ, so ids must be compared through the values
        let c2 = GraphColoring::from_fn(4, 2, |s| {
            Some(Color::int(if s == [0, 1] { 7 } else { (s[0] + s[1]) as i64 % 2 }))
        })
        .unwrap();
        let g = agreement_graph(&c1, &c2).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(0, 1));
        assert_eq!(agreement_graph(&c1, &c1).unwrap(), SimpleGraph::complete(4));
        let c3 = GraphColoring::from_fn(5, 2, |_| Some(Color::int(0))).unwrap();
        assert!(agreement_graph(&c1, &c3).is_err());
    }
}

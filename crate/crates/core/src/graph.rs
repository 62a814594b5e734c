//! Undirected simple graphs on dense vertex ids, stored as adjacency bitsets.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An undirected graph on vertices `0..n` without loops or multi-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        SimpleGraph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            for u in 0..v {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        if n >= 3 {
            for v in 0..n {
                g.insert(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.insert(0, 1);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range ids.
    /// Repeated pairs collapse into one edge.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = !self.has_edge(u, v);
        self.insert(u, v);
        Ok(fresh)
    }

    /// Unchecked insertion for callers that already validated `u != v < n`.
    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.adj[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Neighborhood of `v` as a bitset slice.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Whether `coloring` assigns different values to adjacent vertices.
    pub fn is_proper<T: PartialEq>(&self, coloring: &[T]) -> bool {
        coloring.len() == self.n && self.edges().all(|(u, v)| coloring[u] != coloring[v])
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterator over the set bits of a word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_bookkeeping() {
        let mut g = SimpleGraph::new(70);
        assert!(g.add_edge(0, 69).unwrap());
        assert!(!g.add_edge(69, 0).unwrap());
        assert!(g.add_edge(3, 65).unwrap());
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(69).collect::<Vec<_>>(), vec![0]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 69), (3, 65)]);
    }

    #[test]
    fn invalid_edges_are_rejected() {
        let mut g = SimpleGraph::new(3);
        assert!(matches!(g.add_edge(1, 1), Err(Error::SelfLoop(1))));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
    }

    #[test]
    fn families() {
        assert_eq!(SimpleGraph::complete(6).edge_count(), 15);
        assert_eq!(SimpleGraph::cycle(5).edge_count(), 5);
        assert_eq!(SimpleGraph::cycle(2).edge_count(), 1);
        assert!(SimpleGraph::complete(4).is_proper(&[0, 1, 2, 3]));
        assert!(!SimpleGraph::complete(4).is_proper(&[0, 1, 2, 2]));
    }
}

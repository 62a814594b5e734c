//! The auxiliary graph on a set of digit-pair colors and its independent sets.

use crate::color::ColorId;
use crate::coloring::GraphColoring;
use crate::constructions::mubayi::MubayiColor;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Graph on the colors `x` (vertex `s` is `x[s]`). For two colors with
/// `iota(c1) <= iota(c2)` they are adjacent iff `a_{iota(c2)}(c1) = 1`; equal
/// `iota` always gives an edge.
pub fn auxiliary_color_graph(c: &GraphColoring, x: &[ColorId]) -> Result<SimpleGraph> {
    let decoded = x
        .iter()
        .map(|&id| {
            if id.index() >= c.palette_size() {
                return Err(Error::InvalidParameter(format!("color id {id} outside palette")));
            }
            MubayiColor::parse(c.table().value(id))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut g = SimpleGraph::new(x.len());
    for s in 0..x.len() {
        for u in s + 1..x.len() {
            let (lo, hi) = if decoded[s].iota() <= decoded[u].iota() {
                (&decoded[s], &decoded[u])
            } else {
                (&decoded[u], &decoded[s])
            };
            if lo.a_at(hi.iota()) {
                g.add_edge(s, u)?;
            }
        }
    }
    Ok(g)
}

/// All independent sets of `g` (including the empty set), each sorted, in
/// lexicographic order of their characteristic recursion. Intended for small
/// graphs; the count is at most `2^n`.
pub fn independent_sets(g: &SimpleGraph) -> Vec<Vec<usize>> {
    fn extend(g: &SimpleGraph, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for v in from..g.n() {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                extend(g, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, 0, &mut Vec::new(), &mut out);
    out
}

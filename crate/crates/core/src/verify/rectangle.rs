//! Rectangle scans over grid colorings.

use rayon::prelude::*;

use crate::chromatic::{agreement_graph, is_bipartite, Bipartition};
use crate::coloring::{GridColoring, Rectangle};
use crate::constructions::rows::rows_from_grid;

/// The lexicographically first alternating rectangle in `(i, i', j, j')` order.
pub fn find_alternating_rectangle(grid: &GridColoring) -> Option<Rectangle> {
    let m = grid.m();
    let n = grid.n();
    let row_pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |i2| (i, i2))).collect();
    let scan = |&(i, i2): &(usize, usize)| {
        for j in 0..n {
            let cj = grid.col(i, i2, j);
            for j2 in j + 1..n {
                if cj == grid.col(i, i2, j2) && grid.row(i, j, j2) == grid.row(i2, j, j2) {
                    return Some(Rectangle { i, j, i2, j2 });
                }
            }
        }
        None
    };
    if row_pairs.len() * n * n < 1 << 16 {
        row_pairs.iter().find_map(scan)
    } else {
        row_pairs.par_iter().find_map_first(scan)
    }
}

/// A pair of rows whose agreement graph is not bipartite, with an odd cycle of
/// columns (0-based). `None` when every pair is bipartite.
pub fn non_bipartite_row_pair(grid: &GridColoring) -> Option<(usize, usize, Vec<usize>)> {
    let rows = rows_from_grid(grid);
    let m = rows.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |i2| (i, i2))).collect();
    pairs.par_iter().find_map_first(|&(i, i2)| {
        let h = agreement_graph(&rows[i], &rows[i2]).expect("rows share n");
        match is_bipartite(&h) {
            Bipartition::OddCycle(c) => Some((i, i2, c)),
            Bipartition::TwoColoring(_) => None,
        }
    })
}

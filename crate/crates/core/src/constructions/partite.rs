//! The correspondence between grid colorings of `K_n x K_n` and colorings of
//! the bipartite triple system on `2n` vertices.
//!
//! Vertices `0..n` form side `A` (rows) and `n..2n` side `B` (columns). The row
//! edge `{(i,j),(i,j')}` is the triple `{i, n+j, n+j'}` and the column edge
//! `{(i,j),(i',j)}` is `{i, i', n+j}`. Rectangles `(i,j,i',j')` correspond to
//! the balanced 4-sets `{i, i', n+j, n+j'}`.

use crate::color::{Color, ColorId, Part};
use crate::coloring::{GraphColoring, GridColoring};
use crate::error::{Error, Result};
use crate::subsets::{self, pair_rank, pairs};

const ROW_TAG: i64 = 0;
const COL_TAG: i64 = 1;

/// Partial 3-uniform coloring on `2n` vertices. Row-edge colors become
/// `(0, c)` and column-edge colors `(1, c)`, so the two palettes are disjoint;
/// triples inside one side stay uncolored.
pub fn grid_to_partite3(grid: &GridColoring) -> Result<GraphColoring> {
    let n = grid.n();
    if grid.m() != n {
        return Err(Error::InvalidParameter(format!(
            "partite image needs a square grid, got {}x{n}",
            grid.m()
        )));
    }
    let tagged = |tag: i64, id: ColorId| Color(vec![Part::Int(tag), grid.table().value(id).nested()]);
    GraphColoring::from_fn(2 * n, 3, |s| match s {
        &[i, j, j2] if i < n && j >= n => Some(tagged(ROW_TAG, grid.row(i, j - n, j2 - n))),
        &[i, i2, j] if i2 < n && j >= n => Some(tagged(COL_TAG, grid.col(i, i2, j - n))),
        _ => None,
    })
}

/// Inverse of [`grid_to_partite3`]. Requires exactly the triples meeting both
/// sides to be colored. If every color carries the side tag written by
/// [`grid_to_partite3`] the tag is stripped, so the round trip reproduces the
/// original color values; otherwise colors are taken as they are.
pub fn partite3_to_grid(h: &GraphColoring) -> Result<GridColoring> {
    if h.k() != 3 || h.n() % 2 != 0 {
        return Err(Error::MalformedPartite(format!(
            "expected a 3-uniform coloring on an even number of vertices, got k={} n={}",
            h.k(),
            h.n()
        )));
    }
    let n = h.n() / 2;
    let mut problem = None;
    subsets::for_each_combination(2 * n, 3, |s| {
        let crossing = s[0] < n && s[2] >= n;
        if problem.is_none() && crossing != h.get_sorted(s).is_some() {
            problem = Some(s.iter().map(|v| v + 1).collect::<Vec<_>>());
        }
    });
    if let Some(s) = problem {
        return Err(Error::MalformedPartite(format!("triple {s:?} is colored iff it lies inside one side")));
    }
    let strip = tag_layout(h, n);
    let value = |s: &[usize], tag: i64| -> Color {
        let v = h.value_of(s).expect("crossing triple is colored");
        match (strip, v.parts()) {
            (true, [Part::Int(t), Part::Tuple(inner)]) if *t == tag => Color(inner.clone()),
            _ => v.clone(),
        }
    };
    let mut table = crate::color::ColorTable::new();
    let mut rows = vec![ColorId(0); n * pairs(n)];
    for i in 0..n {
        for j2 in 1..n {
            for j in 0..j2 {
                rows[i * pairs(n) + pair_rank(j, j2)] = table.intern(value(&[i, n + j, n + j2], ROW_TAG));
            }
        }
    }
    let mut cols = vec![ColorId(0); n * pairs(n)];
    for j in 0..n {
        for i2 in 1..n {
            for i in 0..i2 {
                cols[j * pairs(n) + pair_rank(i, i2)] = table.intern(value(&[i, i2, n + j], COL_TAG));
            }
        }
    }
    GridColoring::from_ids(n, n, rows, cols, table)
}

/// Whether every crossing triple's color has the form `(side tag, inner)`
/// with the tag matching the triple's shape.
fn tag_layout(h: &GraphColoring, n: usize) -> bool {
    subsets::find_combination(2 * n, 3, |s| {
        let id = h.get_sorted(s)?;
        let want = if s[1] < n { COL_TAG } else { ROW_TAG };
        match h.table().value(id).parts() {
            [Part::Int(t), Part::Tuple(_)] if *t == want => None,
            _ => Some(()),
        }
    })
    .is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, uniform_grid};

    #[test]
    fn counts_and_round_trip() {
        let g = uniform_grid(3, 3, 2, &mut stream(4, 0));
        let h = grid_to_partite3(&g).unwrap();
        let colored = h.ids().iter().filter(|c| c.is_some()).count();
        assert_eq!(colored, 18);
        let back = partite3_to_grid(&h).unwrap();
        for i in 0..3 {
            for (j, j2) in [(0, 1), (0, 2), (1, 2)] {
                assert_eq!(back.table().value(back.row(i, j, j2)), g.table().value(g.row(i, j, j2)));
                assert_eq!(back.table().value(back.col(j, j2, i)), g.table().value(g.col(j, j2, i)));
            }
        }
    }

    #[test]
    fn malformed_inputs() {
        let total = GraphColoring::from_fn(6, 3, |_| Some(Color::int(1))).unwrap();
        assert!(matches!(partite3_to_grid(&total), Err(Error::MalformedPartite(_))));
        let odd = GraphColoring::from_fn(5, 3, |_| None).unwrap();
        assert!(partite3_to_grid(&odd).is_err());
        assert!(grid_to_partite3(&GridColoring::monochromatic(2, 3)).is_err());
    }

    #[test]
    fn untagged_rainbow_input() {
        let mut next = 0;
        let h = GraphColoring::from_fn(6, 3, |s| {
            (s[0] < 3 && s[2] >= 3).then(|| {
                next += 1;
                Color::int(next)
            })
        })
        .unwrap();
        let g = partite3_to_grid(&h).unwrap();
        assert_eq!(g.palette_size(), 18);
        assert!(crate::verify::find_alternating_rectangle(&g).is_none());
    }
}

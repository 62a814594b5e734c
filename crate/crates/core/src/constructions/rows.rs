//! Grid colorings assembled from row colorings of `K_n`, and the randomized
//! row sampler driven by an edge partition.

use rand::Rng;

use crate::chromatic::{agreement_graph, proper_coloring, union_subgraph};
use crate::color::{Color, ColorId, ColorTable};
use crate::coloring::{EdgePartition, GraphColoring, GridColoring};
use crate::error::{Error, Result};
use crate::rng::stream;
use crate::subsets::pairs;
use crate::verify::find_alternating_rectangle;

/// Stacks `rows` into a grid and colors the column edges.
///
/// For rows `i < i'` the column edges between them are vertices of the
/// agreement graph of the two row colorings; a proper coloring of it with at
/// most `r` colors (as integers `1..=r`) makes every rectangle on those rows
/// non-alternating. Fails with [`Error::ChromaticObstruction`] (0-based rows)
/// when some agreement graph needs more than `r` colors.
pub fn grid_from_rows(rows: &[GraphColoring], r: usize) -> Result<GridColoring> {
    let m = rows.len();
    let Some(first) = rows.first() else {
        return Err(Error::InvalidParameter("at least one row is required".into()));
    };
    let n = first.n();
    for row in rows {
        if row.k() != 2 || !row.is_total() {
            return Err(Error::InvalidParameter("rows must be total graph colorings".into()));
        }
        if row.n() != n {
            return Err(Error::SizeMismatch { left: n, right: row.n() });
        }
    }
    if r == 0 && m > 1 && n > 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let mut table = ColorTable::new();
    let mut row_ids = Vec::with_capacity(m * pairs(n));
    for row in rows {
        let remap: Vec<ColorId> = row.table().iter().map(|(_, v)| table.intern(v.clone())).collect();
        row_ids.extend(row.ids().iter().map(|id| remap[id.expect("total").index()]));
    }
    let col_palette: Vec<ColorId> = (1..=r).map(|c| table.intern(Color::int(c as i64))).collect();
    let mut col_ids = vec![ColorId(0); n * pairs(m)];
    for i2 in 1..m {
        for i in 0..i2 {
            let h = agreement_graph(&rows[i], &rows[i2])?;
            let coloring = proper_coloring(&h, r).ok_or(Error::ChromaticObstruction(i, i2))?;
            let pr = crate::subsets::pair_rank(i, i2);
            for (j, &c) in coloring.iter().enumerate() {
                col_ids[j * pairs(m) + pr] = col_palette[c];
            }
        }
    }
    let grid = GridColoring::from_ids(m, n, row_ids, col_ids, table)?;
    if let Some(rect) = find_alternating_rectangle(&grid) {
        return Err(Error::AlternatingRectangle(rect));
    }
    Ok(grid)
}

/// The row colorings of a grid, each carrying a copy of the grid's table.
pub fn rows_from_grid(grid: &GridColoring) -> Vec<GraphColoring> {
    let e = pairs(grid.n());
    (0..grid.m())
        .map(|i| {
            let ids = grid.row_ids()[i * e..(i + 1) * e].to_vec();
            GraphColoring::from_ids(grid.n(), 2, ids, grid.table().clone()).expect("row slice matches K_n")
        })
        .collect()
}

/// Row colorings induced by one color vector per row: class `s` of the
/// partition gets color `v[s] + 1`.
fn rows_from_vectors(p: &EdgePartition, vectors: &[Vec<u32>], r: usize) -> Vec<GraphColoring> {
    vectors
        .iter()
        .map(|v| {
            let ids = p.classes().iter().map(|&s| ColorId(v[s as usize])).collect();
            GraphColoring::from_ids(p.n(), 2, ids, ColorTable::integers(r)).expect("valid ids")
        })
        .collect()
}

/// Randomized grid construction from an edge partition `E_1, ..., E_t`.
///
/// Draws `2m` vectors in `[r]^t`; row `i` colors class `E_s` with coordinate
/// `s` of its vector. For every pair of rows the classes where the vectors
/// agree span a graph that must be `r`-colorable; pairs failing this are
/// scanned in lexicographic order and the lower row of each still-intact pair
/// is dropped. Returns `None` if fewer than `m` rows survive; otherwise the
/// grid on all surviving rows (alternating-free, with at least `m` rows).
pub fn random_grid(p: &EdgePartition, r: usize, m: usize, seed: u64) -> Result<Option<GridColoring>> {
    if r == 0 || m == 0 {
        return Err(Error::InvalidParameter("random_grid needs r >= 1 and m >= 1".into()));
    }
    let t = p.t();
    let mut rng = stream(seed, 0);
    let vectors: Vec<Vec<u32>> = (0..2 * m)
        .map(|_| (0..t).map(|_| rng.gen_range(0..r as u32)).collect())
        .collect();
    let mut alive = vec![true; 2 * m];
    for a in 0..2 * m {
        for b in a + 1..2 * m {
            if !(alive[a] && alive[b]) {
                continue;
            }
            let agree: Vec<usize> = (0..t).filter(|&s| vectors[a][s] == vectors[b][s]).collect();
            let g = union_subgraph(p, &agree)?;
            if proper_coloring(&g, r).is_none() {
                alive[a] = false;
            }
        }
    }
    let kept: Vec<Vec<u32>> = vectors
        .into_iter()
        .zip(&alive)
        .filter_map(|(v, &ok)| ok.then_some(v))
        .collect();
    if kept.len() < m {
        return Ok(None);
    }
    let rows = rows_from_vectors(p, &kept, r);
    grid_from_rows(&rows, r).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_number;
    use crate::constructions::binary::binary_coloring;

    fn single_edge(c: i64) -> GraphColoring {
        GraphColoring::from_fn(2, 2, |_| Some(Color::int(c))).unwrap()
    }

    #[test]
    fn two_identical_rows_need_two_column_colors() {
        let g = grid_from_rows(&[single_edge(1), single_edge(1)], 2).unwrap();
        assert_ne!(g.col(0, 1, 0), g.col(0, 1, 1));
        assert!(find_alternating_rectangle(&g).is_none());
        assert!(matches!(
            grid_from_rows(&[single_edge(1), single_edge(1)], 1),
            Err(Error::ChromaticObstruction(0, 1))
        ));
    }

    #[test]
    fn disjoint_row_palettes_need_one_column_color() {
        let a = GraphColoring::from_fn(4, 2, |s| Some(Color::int(s[0] as i64 + 10))).unwrap();
        let b = GraphColoring::from_fn(4, 2, |s| Some(Color::int(s[1] as i64 + 20))).unwrap();
        let g = grid_from_rows(&[a.clone(), b.clone()], 1).unwrap();
        assert_eq!(g.col_colors().len(), 1);
        let back = rows_from_grid(&g);
        assert_eq!(agreement_graph(&back[0], &a).unwrap().edge_count(), 6);
        assert_eq!(agreement_graph(&back[1], &b).unwrap().edge_count(), 6);
    }

    #[test]
    fn one_row_grid() {
        let c = binary_coloring(5).unwrap();
        let g = grid_from_rows(std::slice::from_ref(&c), 1).unwrap();
        let back = rows_from_grid(&g);
        assert_eq!(back.len(), 1);
        assert_eq!(agreement_graph(&back[0], &c).unwrap().edge_count(), 10);
    }

    #[test]
    fn random_grid_over_binary_classes() {
        let p = binary_coloring(16).unwrap().to_partition().unwrap();
        let g = random_grid(&p, 4, 3, 11).unwrap().expect("r = 4 leaves room");
        assert!(g.m() >= 3 && g.n() == 16);
        assert!(find_alternating_rectangle(&g).is_none());
        let cols = g.col_colors().len();
        let rows = rows_from_grid(&g);
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let h = agreement_graph(&rows[i], &rows[j]).unwrap();
                assert!(chromatic_number(&h, cols).at_most(cols));
            }
        }
    }

    #[test]
    fn random_grid_trivial_and_singletons() {
        let p = EdgePartition::singletons(6);
        let g = random_grid(&p, 1, 1, 0).unwrap().unwrap();
        // both sampled rows agree everywhere, so one is dropped
        assert_eq!(g.m(), 1);
        if let Some(g) = random_grid(&p, 3, 2, 5).unwrap() {
            assert!(find_alternating_rectangle(&g).is_none());
        }
    }
}

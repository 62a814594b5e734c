//! Alternating rectangles found by the double pigeonhole argument.

use std::collections::HashMap;

use crate::color::ColorId;
use crate::coloring::{GridColoring, Rectangle};
use crate::error::{Error, Result};
use crate::subsets::binom;

/// Number of columns that forces two identical colorings of the column edges
/// between `r + 1` rows: `r^C(r+1,2) + 1` (saturating).
pub fn shelah_columns(r: usize) -> u64 {
    (r as u64)
        .checked_pow(binom(r + 1, 2) as u32)
        .and_then(|v| v.checked_add(1))
        .unwrap_or(u64::MAX)
}

/// Finds an alternating rectangle in the first `r + 1` rows and first
/// `r^C(r+1,2) + 1` columns: two columns with identical column-edge colors
/// must exist, and among the `r + 1` row edges joining them two share a
/// color. Requires at most `r` row colors and at most `r` column colors there.
pub fn shelah_witness(grid: &GridColoring, r: usize) -> Result<Rectangle> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let need = shelah_columns(r);
    if grid.m() < r + 1 || (grid.n() as u64) < need {
        return Err(Error::Precondition(format!(
            "need at least {} rows and {need} columns, grid is {}x{}",
            r + 1,
            grid.m(),
            grid.n()
        )));
    }
    let rows = r + 1;
    let cols = need as usize;
    let mut row_palette = Vec::new();
    let mut col_palette = Vec::new();
    let mut signatures: HashMap<Vec<ColorId>, usize> = HashMap::new();
    let mut pair = None;
    for j in 0..cols {
        let mut sig = Vec::with_capacity(binom(rows, 2) as usize);
        for i2 in 1..rows {
            for i in 0..i2 {
                sig.push(grid.col(i, i2, j));
            }
        }
        for &c in &sig {
            if !col_palette.contains(&c) {
                col_palette.push(c);
            }
        }
        if pair.is_none() {
            if let Some(&j0) = signatures.get(&sig) {
                pair = Some((j0, j));
            } else {
                signatures.insert(sig, j);
            }
        }
    }
    for i in 0..rows {
        for j2 in 1..cols {
            for j in 0..j2 {
                let c = grid.row(i, j, j2);
                if !row_palette.contains(&c) {
                    row_palette.push(c);
                    if row_palette.len() > r {
                        return Err(Error::Precondition(format!("more than {r} row colors in the first {rows} rows")));
                    }
                }
            }
        }
    }
    if col_palette.len() > r {
        return Err(Error::Precondition(format!("more than {r} column colors in the first {rows} rows")));
    }
    let (j, j2) = pair.expect("pigeonhole: more columns than column signatures");
    let mut first_row: HashMap<ColorId, usize> = HashMap::new();
    for i2 in 0..rows {
        let c = grid.row(i2, j, j2);
        if let Some(&i) = first_row.get(&c) {
            let rect = Rectangle { i, j, i2, j2 };
            assert!(grid.is_alternating(&rect), "pigeonhole rectangle must alternate");
            return Ok(rect);
        }
        first_row.insert(c, i2);
    }
    unreachable!("pigeonhole: {rows} row edges in at most {r} colors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, uniform_grid};

    #[test]
    fn column_counts() {
        assert_eq!(shelah_columns(1), 2);
        assert_eq!(shelah_columns(2), 9);
        assert_eq!(shelah_columns(3), 730);
    }

    #[test]
    fn one_color() {
        let g = GridColoring::monochromatic(2, 2);
        assert_eq!(shelah_witness(&g, 1).unwrap(), Rectangle::new(0, 0, 1, 1));
    }

    #[test]
    fn random_two_colorings() {
        for s in 0..50 {
            let g = uniform_grid(3, 9, 2, &mut stream(s, 0));
            let rect = shelah_witness(&g, 2).unwrap();
            assert!(g.is_alternating(&rect));
        }
    }

    #[test]
    fn preconditions() {
        let g = uniform_grid(3, 8, 2, &mut stream(0, 0));
        assert!(matches!(shelah_witness(&g, 2), Err(Error::Precondition(_))));
        let g = uniform_grid(3, 9, 3, &mut stream(0, 0));
        assert!(matches!(shelah_witness(&g, 2), Err(Error::Precondition(_))));
    }
}

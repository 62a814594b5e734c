//! Explicit colorings of the complete 3-uniform hypergraph: a recursive
//! (4,3)-coloring built from alternating-free grids, and a (5,6)-coloring
//! obtained as a product with three bit-level colorings.

use crate::color::{Color, Part};
use crate::coloring::{GraphColoring, GridColoring};
use crate::constructions::binary::{binary_color, binary_coloring, ceil_log2};
use crate::constructions::mubayi::{mubayi_color, MubayiParams};
use crate::constructions::rows::random_grid;
use crate::error::{Error, Result};
use crate::verify::find_alternating_rectangle;

/// Reseeds tried per palette size by [`default_grid_provider`].
const RESEEDS: u64 = 8;

/// An alternating-free coloring of `K_m x K_m`: [`random_grid`] over the
/// classes of the binary coloring of `K_m`, trying palette sizes `r = 1, 2, ...`
/// with a few deterministic seeds each and keeping the first `m` rows. At
/// `r = m` every agreement graph is `m`-colorable, so this always succeeds.
pub fn default_grid_provider(m: usize) -> Result<GridColoring> {
    if m < 2 {
        return Ok(GridColoring::monochromatic(m, m));
    }
    let p = binary_coloring(m)?.to_partition()?;
    let keep: Vec<usize> = (0..m).collect();
    for r in 1..=m {
        for attempt in 0..RESEEDS {
            let seed = (m as u64) << 32 | (r as u64) << 8 | attempt;
            if let Some(g) = random_grid(&p, r, m, seed)? {
                return g.select_rows(&keep);
            }
        }
    }
    unreachable!("r = m always admits all rows")
}

/// Upper bound on the palette of [`f3_43_coloring`]: four base colors plus
/// `2 * ceil(log2 m) * P(m)` at every level, `P(m)` being the palette of the
/// grid supplied for `m`.
pub fn f3_43_palette_bound(n: usize, grid_palette: impl Fn(usize) -> usize) -> usize {
    let mut bound = 4;
    let mut size = n;
    while size > 4 {
        let m = size / 2;
        bound += 2 * ceil_log2(m) * grid_palette(m);
        size = m;
    }
    bound
}

/// Recursive (4,3)-coloring of the triples of `[0, n)`, `n` a power of two.
///
/// A block of size `s > 4` is split into halves `A`, `B` of size `m = s/2`.
/// Triples inside a half use the coloring of the size-`m` block (both halves
/// share it). A crossing triple with one vertex `i` in `A` and two `j < j'` in
/// `B` gets `(level, 0, row color of (i,{j,j'}), c_B(j,j'))`; with two in `A`
/// and one in `B` it gets `(level, 1, column color, c_B(i,i'))`, where the
/// grid is `provider(m)` and `c_B` is the binary coloring on local indices.
/// Blocks of size at most 4 are rainbow.
pub fn f3_43_coloring(
    n: usize,
    mut provider: impl FnMut(usize) -> Result<GridColoring>,
) -> Result<GraphColoring> {
    check_power_of_two(n)?;
    // grids[level] serves blocks of size 2^level
    let mut grids: Vec<Option<GridColoring>> = vec![None; ceil_log2(n) + 1];
    let mut size = n;
    while size > 4 {
        let m = size / 2;
        let g = provider(m)?;
        if g.m() != m || g.n() != m {
            return Err(Error::InvalidParameter(format!(
                "grid provider returned {}x{} for m = {m}",
                g.m(),
                g.n()
            )));
        }
        if let Some(rect) = find_alternating_rectangle(&g) {
            return Err(Error::AlternatingRectangle(rect));
        }
        grids[ceil_log2(size)] = Some(g);
        size = m;
    }
    GraphColoring::from_fn(n, 3, |s| Some(f3_43_color(&grids, n, s)))
}

fn f3_43_color(grids: &[Option<GridColoring>], n: usize, triple: &[usize]) -> Color {
    let mut t = [triple[0], triple[1], triple[2]];
    let mut size = n;
    loop {
        if size <= 4 {
            return Color(vec![Part::Int(0), Part::Int(crate::subsets::rank(&t) as i64)]);
        }
        let m = size / 2;
        let in_a = t.iter().filter(|&&v| v < m).count();
        match in_a {
            3 => {}
            0 => t.iter_mut().for_each(|v| *v -= m),
            _ => {
                let level = ceil_log2(size);
                let grid = grids[level].as_ref().expect("grid for every level");
                let (tag, id, pair) = if in_a == 1 {
                    let (i, j, j2) = (t[0], t[1] - m, t[2] - m);
                    (0, grid.row(i, j, j2), (j, j2))
                } else {
                    let (i, i2, j) = (t[0], t[1], t[2] - m);
                    (1, grid.col(i, i2, j), (i, i2))
                };
                return Color(vec![
                    Part::Int(level as i64),
                    Part::Int(tag),
                    grid.table().value(id).nested(),
                    Part::Int(binary_color(pair.0, pair.1) as i64),
                ]);
            }
        }
        size = m;
    }
}

/// [`f3_43_coloring`] with [`default_grid_provider`].
pub fn f3_43_default(n: usize) -> Result<GraphColoring> {
    f3_43_coloring(n, default_grid_provider)
}

/// The (5,6)-coloring `c1 x c2 x c3 x c4` of the triples of `[0, n)`:
/// `c1` is the recursive (4,3)-coloring, `c2` is one plus the lowest bit
/// position where the three vertices do not all agree, `c3` is the bit of the
/// lone vertex there, and `c4` is the digit-pair coloring of the other two.
pub fn f3_56_coloring(n: usize) -> Result<GraphColoring> {
    let c1 = f3_43_default(n)?;
    f3_56_from(&c1)
}

/// [`f3_56_coloring`] on top of a given `c1` (3-uniform, total, `n` a power of two).
pub fn f3_56_from(c1: &GraphColoring) -> Result<GraphColoring> {
    let n = c1.n();
    check_power_of_two(n)?;
    if c1.k() != 3 || !c1.is_total() {
        return Err(Error::InvalidParameter("c1 must be a total 3-uniform coloring".into()));
    }
    let params = MubayiParams::for_n(n);
    GraphColoring::from_fn(n, 3, |s| {
        let (u, v, w) = (s[0], s[1], s[2]);
        let i = ((u ^ v) | (v ^ w)).trailing_zeros();
        let bit = |x: usize| (x >> i) & 1;
        // exactly one of the three bits differs from the other two
        let (lone, a, b) = if bit(u) == bit(v) {
            (w, u, v)
        } else if bit(u) == bit(w) {
            (v, u, w)
        } else {
            (u, v, w)
        };
        Some(Color(vec![
            c1.value_of(s).expect("total").nested(),
            Part::Int(i as i64 + 1),
            Part::Int(bit(lone) as i64),
            mubayi_color(params, a, b).nested(),
        ]))
    })
}

fn check_power_of_two(n: usize) -> Result<()> {
    if n.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("n must be a power of two, got {n}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, uniform_grid};

    #[test]
    fn base_case_is_rainbow() {
        let c = f3_43_default(4).unwrap();
        assert_eq!(c.colors_used(), 4);
    }

    #[test]
    fn rejects_bad_grids() {
        let err = f3_43_coloring(8, |m| Ok(GridColoring::monochromatic(m, m))).unwrap_err();
        assert!(matches!(err, Error::AlternatingRectangle(_)));
        let err = f3_43_coloring(8, |_| Ok(uniform_grid(3, 3, 9, &mut stream(0, 0)))).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
        assert!(f3_43_default(12).is_err());
    }

    #[test]
    fn default_provider_grids_are_clean() {
        for m in [1, 2, 4, 8] {
            let g = default_grid_provider(m).unwrap();
            assert_eq!((g.m(), g.n()), (m, m));
            assert!(find_alternating_rectangle(&g).is_none());
        }
    }

    #[test]
    fn hand_evaluated_product_color() {
        let c = f3_56_coloring(8).unwrap();
        // vertices 1,2,3 are 0,1,2 zero-based: bit strings 000, 100, 010
        let v = c.value_of(&[0, 1, 2]).unwrap();
        let p = v.parts();
        assert_eq!(p[1], Part::Int(1));
        assert_eq!(p[2], Part::Int(1));
        assert_eq!(p[3], mubayi_color(MubayiParams::for_n(8), 0, 2).nested());
    }

    #[test]
    fn palette_within_recursion_bound() {
        for n in [8, 16, 32] {
            let c = f3_43_default(n).unwrap();
            let bound = f3_43_palette_bound(n, |m| default_grid_provider(m).unwrap().palette_size());
            assert!(c.colors_used() <= bound, "n={n}: {} > {bound}", c.colors_used());
        }
    }
}

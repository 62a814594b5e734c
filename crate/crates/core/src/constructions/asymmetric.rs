//! Grids with many rows and two column colors, built from arithmetic
//! progressions over `Z_p`.

use crate::chromatic::{agreement_graph, is_bipartite, Bipartition};
use crate::color::{Color, ColorId, ColorTable};
use crate::coloring::{GraphColoring, GridColoring};
use crate::error::{Error, Result};
use crate::subsets::{pair_rank, pairs};
use crate::verify::find_alternating_rectangle;

pub fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// All `p^2` sequences `B_{a,b} = (a, a+b, ..., a+(p-1)b) mod p`, sequence
/// `B_{a,b}` at index `a*p + b`. Two distinct sequences agree in at most one
/// coordinate.
pub fn modular_sequences(p: u64) -> Result<Vec<Vec<u64>>> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    if p > 1 << 12 {
        return Err(Error::TooLarge(p * p));
    }
    Ok((0..p)
        .flat_map(|a| (0..p).map(move |b| (0..p).map(|i| (a + i * b) % p).collect()))
        .collect())
}

/// Dimensions chosen for [`asymmetric_grid`]: prime `p`, `m = floor(r^2/4)`
/// rows and `n = 2^p` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsymmetricParams {
    pub p: u64,
    pub m: usize,
    pub n: usize,
}

/// Smallest prime `p` in `[ceil(r/2), r]` with `floor(r^2/4) <= 2^p`.
pub fn asymmetric_params(r: usize) -> Result<AsymmetricParams> {
    if r < 4 {
        return Err(Error::InvalidParameter(format!("asymmetric grid needs r >= 4, got {r}")));
    }
    let m = r * r / 4;
    let p = (r.div_ceil(2)..=r)
        .find(|&p| is_prime(p as u64) && (p >= 63 || m <= 1 << p))
        .ok_or_else(|| Error::Precondition(format!("no prime p in [{}, {r}] with {m} <= 2^p", r.div_ceil(2))))?;
    if p > 20 {
        return Err(Error::TooLarge(1 << p.min(63)));
    }
    Ok(AsymmetricParams { p: p as u64, m, n: 1 << p })
}

/// Grid on `floor(r^2/4)` rows and `2^p` columns. Row `i` follows sequence
/// `B_i`: the row edge `{j, j'}` gets color `B_i[s] + 1` where `s` is the
/// lowest bit in which `j - 1` and `j' - 1` differ. Any two rows agree only
/// on edges whose first differing bit is the single coordinate where their
/// sequences match, so each agreement graph is bipartite and two column
/// colors suffice.
pub fn asymmetric_grid(r: usize) -> Result<GridColoring> {
    let AsymmetricParams { p, m, n } = asymmetric_params(r)?;
    let seqs = modular_sequences(p)?;
    let mut table = ColorTable::integers(p as usize);
    let rows: Vec<GraphColoring> = seqs[..m]
        .iter()
        .map(|b| {
            let ids = (0..pairs(n))
                .map(|e| {
                    let (j, j2) = crate::subsets::pair_unrank(e);
                    ColorId(b[(j ^ j2).trailing_zeros() as usize] as u32)
                })
                .collect();
            GraphColoring::from_ids(n, 2, ids, ColorTable::integers(p as usize))
        })
        .collect::<Result<_>>()?;
    let col_palette = [table.intern(Color::int(1)), table.intern(Color::int(2))];
    let mut row_ids = Vec::with_capacity(m * pairs(n));
    for row in &rows {
        row_ids.extend(row.ids().iter().map(|id| id.expect("total")));
    }
    let mut col_ids = vec![ColorId(0); n * pairs(m)];
    for i2 in 1..m {
        for i in 0..i2 {
            let h = agreement_graph(&rows[i], &rows[i2])?;
            let Bipartition::TwoColoring(side) = is_bipartite(&h) else {
                return Err(Error::ChromaticObstruction(i, i2));
            };
            for (j, &s) in side.iter().enumerate() {
                col_ids[j * pairs(m) + pair_rank(i, i2)] = col_palette[s as usize];
            }
        }
    }
    let grid = GridColoring::from_ids(m, n, row_ids, col_ids, table)?;
    if let Some(rect) = find_alternating_rectangle(&grid) {
        return Err(Error::AlternatingRectangle(rect));
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agreements(a: &[u64], b: &[u64]) -> Vec<usize> {
        (0..a.len()).filter(|&i| a[i] == b[i]).collect()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&v| is_prime(v)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn sequences_mod_three() {
        let s = modular_sequences(3).unwrap();
        assert_eq!(s.len(), 9);
        assert_eq!(s[1], vec![0, 1, 2]);
        // B_{0,1} vs B_{1,1}
        assert!(agreements(&s[1], &s[4]).is_empty());
        // B_{0,1} vs B_{1,2}
        assert_eq!(agreements(&s[1], &s[5]), vec![2]);
        assert!(matches!(modular_sequences(9), Err(Error::NotPrime { value: 9 })));
    }

    #[test]
    fn parameter_choice() {
        assert_eq!(asymmetric_params(10).unwrap(), AsymmetricParams { p: 5, m: 25, n: 32 });
        assert_eq!(asymmetric_params(4).unwrap(), AsymmetricParams { p: 2, m: 4, n: 4 });
        assert!(asymmetric_params(3).is_err());
    }

    #[test]
    fn small_asymmetric_grid() {
        let g = asymmetric_grid(4).unwrap();
        assert_eq!((g.m(), g.n()), (4, 4));
        assert!(g.row_colors().len() <= 4);
        assert_eq!(g.col_colors().len(), 2);
    }
}

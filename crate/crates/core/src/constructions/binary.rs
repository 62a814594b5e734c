//! The first-differing-bit coloring of `K_n`.

use crate::color::{ColorId, ColorTable};
use crate::coloring::GraphColoring;
use crate::error::{Error, Result};
use crate::subsets::pair_unrank;

/// Smallest `t` with `n <= 2^t`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Color of the pair of 0-based vertices `x != y`: one plus the lowest bit
/// position where `x` and `y` differ.
#[inline]
pub fn binary_color(x: usize, y: usize) -> usize {
    debug_assert_ne!(x, y);
    1 + (x ^ y).trailing_zeros() as usize
}

/// Colors `{x, y}` by the first (least significant) bit where the binary
/// expansions of `x - 1` and `y - 1` differ. Uses colors `1..=ceil(log2 n)`.
pub fn binary_coloring(n: usize) -> Result<GraphColoring> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("binary coloring needs n >= 2, got {n}")));
    }
    let t = ceil_log2(n);
    let ids = (0..crate::subsets::pairs(n))
        .map(|r| {
            let (x, y) = pair_unrank(r);
            ColorId(binary_color(x, y) as u32 - 1)
        })
        .collect();
    GraphColoring::from_ids(n, 2, ids, ColorTable::integers(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;

    #[test]
    fn ceil_log() {
        let expect = [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (64, 6), (65, 7)];
        for (n, t) in expect {
            assert_eq!(ceil_log2(n), t, "n={n}");
        }
    }

    #[test]
    fn four_vertices_by_hand() {
        let c = binary_coloring(4).unwrap();
        let expect = [((1, 2), 1), ((1, 3), 2), ((1, 4), 1), ((2, 3), 1), ((2, 4), 2), ((3, 4), 1)];
        for ((x, y), col) in expect {
            assert_eq!(c.value_of(&[x - 1, y - 1]), Some(&Color::int(col)), "{{{x},{y}}}");
        }
        assert_eq!(c.colors_used(), 2);
    }

    #[test]
    fn palettes() {
        assert_eq!(binary_coloring(2).unwrap().colors_used(), 1);
        assert_eq!(binary_coloring(64).unwrap().colors_used(), 6);
        assert!(binary_coloring(1).is_err());
    }
}

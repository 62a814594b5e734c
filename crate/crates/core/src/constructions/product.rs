//! Edge partition of `K_{N^t}` by (first differing coordinate, digit-pair color).

use std::collections::HashMap;

use crate::color::{Color, ColorTable, Part};
use crate::coloring::EdgePartition;
use crate::constructions::mubayi::{mubayi_color, MubayiParams};
use crate::error::{Error, Result};
use crate::subsets::{pair_rank, pairs};

/// Largest vertex count [`product_partition`] accepts.
pub const DEFAULT_MAX_VERTICES: u64 = 4096;

/// Partition of the edges of `K_n`, `n = N^t`, whose vertices are the words of
/// `[N]^t` in lexicographic order. The class of `{v, w}` is labeled
/// `(i, c)` where `i` is the first coordinate where `v` and `w` differ and `c`
/// is the digit-pair coloring of `K_N` applied to `(v_i, w_i)`.
pub fn product_partition(big_n: usize, t: usize) -> Result<EdgePartition> {
    product_partition_bounded(big_n, t, DEFAULT_MAX_VERTICES)
}

/// [`product_partition`] with an explicit vertex cap.
pub fn product_partition_bounded(big_n: usize, t: usize, max_vertices: u64) -> Result<EdgePartition> {
    if big_n < 2 || t < 1 {
        return Err(Error::InvalidParameter(format!(
            "product partition needs N >= 2 and t >= 1, got N={big_n}, t={t}"
        )));
    }
    let n = (big_n as u64)
        .checked_pow(t as u32)
        .filter(|&n| n <= max_vertices)
        .ok_or(Error::TooLarge((big_n as u64).saturating_pow(t as u32)))? as usize;
    let params = MubayiParams::for_n(big_n);
    // digits with coordinate 1 most significant
    let word = |mut x: usize| {
        let mut d = vec![0; t];
        for slot in d.iter_mut().rev() {
            *slot = x % big_n;
            x /= big_n;
        }
        d
    };
    let words: Vec<Vec<usize>> = (0..n).map(word).collect();
    let mut labels = ColorTable::new();
    let mut inner: HashMap<(usize, usize), Color> = HashMap::new();
    let mut class_of = vec![0u32; pairs(n)];
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (&words[u], &words[v]);
            let i = a.iter().zip(b).position(|(x, y)| x != y).expect("distinct words");
            let key = (a[i].min(b[i]), a[i].max(b[i]));
            let c = inner.entry(key).or_insert_with(|| mubayi_color(params, key.0, key.1));
            let label = Color(vec![Part::Int(i as i64 + 1), c.nested()]);
            class_of[pair_rank(u, v)] = labels.intern(label).0;
        }
    }
    EdgePartition::new(n, labels.len(), class_of)?.with_labels(labels)
}

//! Low-color cliques in k-uniform colorings found by the step-down argument:
//! grow a set `X` whose k-sets meeting it in `k - 1` elements are colored by
//! their first `k - 1` vertices, then solve the `(k-1)`-uniform problem on `X`.

use std::collections::BTreeMap;

use crate::color::ColorId;
use crate::coloring::GraphColoring;
use crate::error::{Error, Result};
use crate::subsets::{self, binom};
use crate::verify::pq::{check_pq_params, span_colors, PQViolation};

/// Result of [`stepdown_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepdownWitness {
    pub violation: PQViolation,
    /// Set when some level had `q > C(p-1, k-1)`, where any `(p-1)`-set of the
    /// auxiliary coloring already works and no recursion is needed there.
    pub degenerate: bool,
}

/// Vertex count from which the argument is guaranteed to succeed:
/// `N(1) = (p-1) + (r-q+1) * floor((p-1)/(q-1)) + 1` (or `p` when `q > r`),
/// and `N(k) = r^C(T, k-1)` with `T = p - 1` if `q > C(p-1, k-1)`, else
/// `T = N(k-1, r, p-1, q)`. Saturates at `u64::MAX`.
pub fn stepdown_bound(k: usize, r: usize, p: usize, q: usize) -> u64 {
    if k == 1 {
        return if q - 1 < r {
            ((p - 1) + (r - q + 1) * ((p - 1) / (q - 1)) + 1) as u64
        } else {
            p as u64
        };
    }
    let t = if q as u64 > binom(p - 1, k - 1) {
        (p - 1) as u64
    } else {
        stepdown_bound(k - 1, r, p - 1, q)
    };
    if t > 1 << 20 {
        return u64::MAX;
    }
    let e = binom(t as usize, k - 1);
    u32::try_from(e)
        .ok()
        .and_then(|e| (r as u64).checked_pow(e))
        .unwrap_or(u64::MAX)
}

/// Finds `p` vertices whose k-subsets use at most `q - 1` colors, for a
/// coloring with at most `r` colors on at least [`stepdown_bound`] vertices.
/// The output is re-verified against `c`.
pub fn stepdown_witness(c: &GraphColoring, r: usize, p: usize, q: usize) -> Result<StepdownWitness> {
    let k = c.k();
    check_pq_params(k, c.n(), p, q).or_else(|e| {
        // p > n is reported as a size problem below
        if p > c.n() && p >= k + 1 { Ok(()) } else { Err(e) }
    })?;
    if r == 0 || !c.is_total() {
        return Err(Error::InvalidParameter("needs r >= 1 and a total coloring".into()));
    }
    if c.colors_used() > r {
        return Err(Error::Precondition(format!("coloring uses {} > r = {r} colors", c.colors_used())));
    }
    let required = stepdown_bound(k, r, p, q);
    if (c.n() as u64) < required {
        return Err(Error::TooSmall {
            message: format!("step-down for k={k}, r={r}, p={p}, q={q} on {} vertices", c.n()),
            required,
        });
    }
    let vertices: Vec<usize> = (0..c.n()).collect();
    let mut degenerate = false;
    let set = solve(c, &vertices, r, p, q, &mut degenerate)?;
    let colors = span_colors(c, &set).expect("total coloring");
    assert!(colors.len() < q, "step-down output must use fewer than q colors");
    Ok(StepdownWitness { violation: PQViolation { vertices: set, colors }, degenerate })
}

/// Color of a k-set given as original vertex ids (any order).
fn color(c: &GraphColoring, set: &[usize]) -> ColorId {
    c.color_of(set).expect("total coloring")
}

/// Solves the problem on the sub-coloring induced by `verts` (original ids,
/// increasing) and returns original vertex ids, increasing.
fn solve(
    c: &GraphColoring,
    verts: &[usize],
    r: usize,
    p: usize,
    q: usize,
    degenerate: &mut bool,
) -> Result<Vec<usize>> {
    let k = c.k();
    if k == 1 {
        return Ok(pigeonhole_vertices(c, verts, p, q));
    }
    let trivial = q as u64 > binom(p - 1, k - 1);
    let target = if trivial { p - 1 } else { stepdown_bound(k - 1, r, p - 1, q) as usize };
    let mut x: Vec<usize> = verts[..k - 2].to_vec();
    let mut y: Vec<usize> = verts[k - 2..].to_vec();
    while x.len() < target {
        let Some((&xv, rest)) = y.split_first() else {
            return Err(Error::Precondition(format!(
                "candidate set emptied with |X| = {} < {target}; the argument needs r >= k",
                x.len()
            )));
        };
        let mut buckets: BTreeMap<Vec<ColorId>, Vec<usize>> = BTreeMap::new();
        for &yv in rest {
            let mut key = Vec::with_capacity(binom(x.len(), k - 2) as usize);
            let mut e = Vec::with_capacity(k);
            subsets::for_each_combination(x.len(), k - 2, |idx| {
                e.clear();
                e.extend(idx.iter().map(|&i| x[i]));
                e.push(xv);
                e.push(yv);
                key.push(color(c, &e));
            });
            buckets.entry(key).or_default().push(yv);
        }
        x.push(xv);
        // largest bucket; ties go to the bucket with the smallest element
        y = buckets
            .into_values()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .unwrap_or_default();
    }
    let Some(&apex) = y.first() else {
        return Err(Error::Precondition("no vertex left to extend the clique".into()));
    };
    let a: Vec<usize> = if trivial {
        *degenerate = true;
        x.clone()
    } else {
        // (k-1)-uniform coloring on X: f gets the color of f + apex
        let ids: Vec<ColorId> = {
            let mut ids = vec![ColorId(0); binom(x.len(), k - 1) as usize];
            let mut e = Vec::with_capacity(k);
            subsets::for_each_combination(x.len(), k - 1, |idx| {
                e.clear();
                e.extend(idx.iter().map(|&i| x[i]));
                e.push(apex);
                ids[subsets::rank(idx)] = color(c, &e);
            });
            ids
        };
        let aux = GraphColoring::from_ids(x.len(), k - 1, ids, c.table().clone())?;
        let local: Vec<usize> = (0..x.len()).collect();
        let inner = solve(&aux, &local, r, p - 1, q, degenerate)?;
        inner.iter().map(|&i| x[i]).collect()
    };
    let mut out = a;
    out.push(apex);
    out.sort_unstable();
    Ok(out)
}

/// `p` vertices from the `q - 1` largest color classes (ties: class with the
/// smaller first vertex), taking the smallest vertices first.
fn pigeonhole_vertices(c: &GraphColoring, verts: &[usize], p: usize, q: usize) -> Vec<usize> {
    let mut classes: BTreeMap<ColorId, Vec<usize>> = BTreeMap::new();
    for &v in verts {
        classes.entry(color(c, &[v])).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = classes.into_values().collect();
    classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let mut pool: Vec<usize> = classes.into_iter().take(q - 1).flatten().collect();
    pool.sort_unstable();
    pool.truncate(p);
    pool
}

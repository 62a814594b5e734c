//! Edge colorings of complete (hyper)graphs and grid graphs, and edge partitions.

use std::fmt;

use crate::color::{Color, ColorId, ColorTable};
use crate::error::{Error, Result};
use crate::subsets::{self, pair_rank, pairs};

/// A coloring of the k-subsets of `[0, n)`.
///
/// Colorings may be partial (some k-subsets carry no color); this is how the
/// partite hypergraph image of a grid coloring is represented. Storage is
/// indexed by colex rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphColoring {
    n: usize,
    k: usize,
    colors: Vec<Option<ColorId>>,
    table: ColorTable,
}

impl GraphColoring {
    /// An entirely uncolored k-uniform coloring on `n` vertices.
    pub fn empty(n: usize, k: usize, table: ColorTable) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("uniformity must be at least 1".into()));
        }
        let size = subsets::binom(n, k);
        if size > 1 << 28 {
            return Err(Error::TooLarge(size));
        }
        Ok(GraphColoring {
            n,
            k,
            colors: vec![None; size as usize],
            table,
        })
    }

    /// Colors every k-subset with the value returned by `f` (which receives the
    /// subset in increasing order). Colors are interned in lexicographic subset order.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Option<Color>) -> Result<Self> {
        let mut c = Self::empty(n, k, ColorTable::new())?;
        subsets::for_each_combination(n, k, |s| {
            if let Some(color) = f(s) {
                let id = c.table.intern(color);
                c.colors[subsets::rank(s)] = Some(id);
            }
        });
        Ok(c)
    }

    /// Builds a total coloring from ids in colex order; every id must index `table`.
    pub fn from_ids(n: usize, k: usize, ids: Vec<ColorId>, table: ColorTable) -> Result<Self> {
        let expect = subsets::binom(n, k);
        if ids.len() as u64 != expect {
            return Err(Error::InvalidParameter(format!(
                "expected {expect} colors, got {}",
                ids.len()
            )));
        }
        if let Some(bad) = ids.iter().find(|id| id.index() >= table.len()) {
            return Err(Error::InvalidParameter(format!("color id {bad} outside palette")));
        }
        Ok(GraphColoring {
            n,
            k,
            colors: ids.into_iter().map(Some).collect(),
            table,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn table(&self) -> &ColorTable {
        &self.table
    }

    /// Number of interned colors.
    pub fn palette_size(&self) -> usize {
        self.table.len()
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.table.len()];
        self.colors.iter().flatten().for_each(|c| seen[c.index()] = true);
        seen.into_iter().filter(|&s| s).count()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Color of a k-subset given in increasing order.
    #[inline]
    pub fn get_sorted(&self, subset: &[usize]) -> Option<ColorId> {
        debug_assert_eq!(subset.len(), self.k);
        self.colors[subsets::rank(subset)]
    }

    /// Color of a k-subset given in any order.
    pub fn color_of(&self, subset: &[usize]) -> Option<ColorId> {
        let mut s = subset.to_vec();
        if s.len() != self.k || !subsets::normalize(&mut s) || s.last().is_some_and(|&v| v >= self.n) {
            return None;
        }
        self.colors[subsets::rank(&s)]
    }

    /// Color of the edge `{u, v}` of a graph coloring.
    #[inline]
    pub fn pair(&self, u: usize, v: usize) -> Option<ColorId> {
        debug_assert_eq!(self.k, 2);
        self.colors[pair_rank(u, v)]
    }

    pub fn value_of(&self, subset: &[usize]) -> Option<&Color> {
        self.color_of(subset).map(|id| self.table.value(id))
    }

    /// Colors by colex rank.
    pub fn ids(&self) -> &[Option<ColorId>] {
        &self.colors
    }

    /// Sets the color of a k-subset (any order), interning the value.
    pub fn set(&mut self, subset: &[usize], color: Color) -> Result<ColorId> {
        let mut s = subset.to_vec();
        if s.len() != self.k || !subsets::normalize(&mut s) {
            return Err(Error::InvalidParameter(format!("{subset:?} is not a {}-subset", self.k)));
        }
        if let Some(&v) = s.last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let id = self.table.intern(color);
        self.colors[subsets::rank(&s)] = Some(id);
        Ok(id)
    }

    /// Iterates colored subsets in lexicographic order.
    pub fn for_each_colored(&self, mut f: impl FnMut(&[usize], ColorId)) {
        subsets::for_each_combination(self.n, self.k, |s| {
            if let Some(id) = self.colors[subsets::rank(s)] {
                f(s, id);
            }
        });
    }

    /// Color classes as an edge partition (graph colorings only, must be total).
    pub fn to_partition(&self) -> Result<EdgePartition> {
        if self.k != 2 || !self.is_total() {
            return Err(Error::InvalidParameter(
                "only total graph colorings define an edge partition".into(),
            ));
        }
        let class_of = self.colors.iter().map(|c| c.expect("total").0).collect();
        EdgePartition::new(self.n, self.table.len(), class_of)
    }
}

/// An axis-aligned rectangle `(i, j, i', j')` of a grid graph, 0-based with
/// `i < i'` and `j < j'`. Displays 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rectangle {
    pub i: usize,
    pub j: usize,
    pub i2: usize,
    pub j2: usize,
}

impl Rectangle {
    pub fn new(i: usize, j: usize, i2: usize, j2: usize) -> Self {
        Rectangle {
            i: i.min(i2),
            j: j.min(j2),
            i2: i.max(i2),
            j2: j.max(j2),
        }
    }

    pub fn one_based(&self) -> [usize; 4] {
        [self.i + 1, self.j + 1, self.i2 + 1, self.j2 + 1]
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.one_based();
        write!(f, "({a},{b},{c},{d})")
    }
}

/// An edge coloring of the grid graph `K_m x K_n`.
///
/// Row edges `{(i,j),(i,j')}` and column edges `{(i,j),(i',j)}` share one
/// color table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridColoring {
    m: usize,
    n: usize,
    rows: Vec<ColorId>,
    cols: Vec<ColorId>,
    table: ColorTable,
}

impl GridColoring {
    /// Builds a grid coloring from row ids (indexed `i * C(n,2) + pair_rank(j, j')`)
    /// and column ids (indexed `j * C(m,2) + pair_rank(i, i')`).
    pub fn from_ids(
        m: usize,
        n: usize,
        rows: Vec<ColorId>,
        cols: Vec<ColorId>,
        table: ColorTable,
    ) -> Result<Self> {
        if rows.len() != m * pairs(n) || cols.len() != n * pairs(m) {
            return Err(Error::InvalidParameter(format!(
                "grid {m}x{n} needs {} row and {} column colors",
                m * pairs(n),
                n * pairs(m)
            )));
        }
        if let Some(bad) = rows.iter().chain(&cols).find(|id| id.index() >= table.len()) {
            return Err(Error::InvalidParameter(format!("color id {bad} outside palette")));
        }
        Ok(GridColoring { m, n, rows, cols, table })
    }

    /// Colors every edge with `f_row(i, j, j')` / `f_col(i, i', j)` (all 0-based,
    /// `j < j'`, `i < i'`).
    pub fn from_fns(
        m: usize,
        n: usize,
        mut f_row: impl FnMut(usize, usize, usize) -> Color,
        mut f_col: impl FnMut(usize, usize, usize) -> Color,
    ) -> Self {
        let mut table = ColorTable::new();
        let mut rows = vec![ColorId(0); m * pairs(n)];
        for i in 0..m {
            for j2 in 1..n {
                for j in 0..j2 {
                    rows[i * pairs(n) + pair_rank(j, j2)] = table.intern(f_row(i, j, j2));
                }
            }
        }
        let mut cols = vec![ColorId(0); n * pairs(m)];
        for j in 0..n {
            for i2 in 1..m {
                for i in 0..i2 {
                    cols[j * pairs(m) + pair_rank(i, i2)] = table.intern(f_col(i, i2, j));
                }
            }
        }
        GridColoring { m, n, rows, cols, table }
    }

    /// Every edge gets color `1`.
    pub fn monochromatic(m: usize, n: usize) -> Self {
        Self::from_fns(m, n, |_, _, _| Color::int(1), |_, _, _| Color::int(1))
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &ColorTable {
        &self.table
    }

    pub fn palette_size(&self) -> usize {
        self.table.len()
    }

    /// Color of the row edge `{(i,j),(i,j')}`.
    #[inline]
    pub fn row(&self, i: usize, j: usize, j2: usize) -> ColorId {
        self.rows[i * pairs(self.n) + pair_rank(j, j2)]
    }

    /// Color of the column edge `{(i,j),(i',j)}`.
    #[inline]
    pub fn col(&self, i: usize, i2: usize, j: usize) -> ColorId {
        self.cols[j * pairs(self.m) + pair_rank(i, i2)]
    }

    pub fn row_ids(&self) -> &[ColorId] {
        &self.rows
    }

    pub fn col_ids(&self) -> &[ColorId] {
        &self.cols
    }

    /// Distinct colors on row edges.
    pub fn row_colors(&self) -> Vec<ColorId> {
        distinct(&self.rows, self.table.len())
    }

    /// Distinct colors on column edges.
    pub fn col_colors(&self) -> Vec<ColorId> {
        distinct(&self.cols, self.table.len())
    }

    /// Whether the rectangle has equal opposite sides.
    pub fn is_alternating(&self, r: &Rectangle) -> bool {
        self.row(r.i, r.j, r.j2) == self.row(r.i2, r.j, r.j2)
            && self.col(r.i, r.i2, r.j) == self.col(r.i, r.i2, r.j2)
    }

    /// The subgrid on the given rows (in the given order).
    pub fn select_rows(&self, keep: &[usize]) -> Result<Self> {
        if let Some(&bad) = keep.iter().find(|&&i| i >= self.m) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.m });
        }
        let m = keep.len();
        let mut rows = Vec::with_capacity(m * pairs(self.n));
        for &i in keep {
            rows.extend_from_slice(&self.rows[i * pairs(self.n)..(i + 1) * pairs(self.n)]);
        }
        let mut cols = vec![ColorId(0); self.n * pairs(m)];
        for j in 0..self.n {
            for b in 1..m {
                for a in 0..b {
                    cols[j * pairs(m) + pair_rank(a, b)] = self.col(keep[a], keep[b], j);
                }
            }
        }
        Ok(GridColoring {
            m,
            n: self.n,
            rows,
            cols,
            table: self.table.clone(),
        })
    }
}

fn distinct(ids: &[ColorId], palette: usize) -> Vec<ColorId> {
    let mut seen = vec![false; palette];
    ids.iter().for_each(|c| seen[c.index()] = true);
    seen.iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| ColorId(i as u32))
        .collect()
}

/// A partition of the edges of `K_n` into `t` (possibly empty) classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    n: usize,
    t: usize,
    class_of: Vec<u32>,
    labels: Option<ColorTable>,
}

impl EdgePartition {
    /// `class_of` is indexed by the colex rank of the pair.
    pub fn new(n: usize, t: usize, class_of: Vec<u32>) -> Result<Self> {
        if class_of.len() != pairs(n) {
            return Err(Error::InvalidParameter(format!(
                "partition of K_{n} needs {} entries, got {}",
                pairs(n),
                class_of.len()
            )));
        }
        if let Some(&bad) = class_of.iter().find(|&&c| c as usize >= t) {
            return Err(Error::ClassOutOfRange {
                index: bad as usize,
                classes: t,
            });
        }
        Ok(EdgePartition {
            n,
            t,
            class_of,
            labels: None,
        })
    }

    /// Every edge in its own class, classes numbered by colex rank.
    pub fn singletons(n: usize) -> Self {
        let e = pairs(n);
        EdgePartition {
            n,
            t: e,
            class_of: (0..e as u32).collect(),
            labels: None,
        }
    }

    /// Attaches structured labels, one per class.
    pub fn with_labels(mut self, labels: ColorTable) -> Result<Self> {
        if labels.len() != self.t {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} classes",
                labels.len(),
                self.t
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of classes.
    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }

    #[inline]
    pub fn class(&self, u: usize, v: usize) -> usize {
        self.class_of[pair_rank(u, v)] as usize
    }

    /// Classes by colex rank of the pair.
    pub fn classes(&self) -> &[u32] {
        &self.class_of
    }

    pub fn labels(&self) -> Option<&ColorTable> {
        self.labels.as_ref()
    }

    /// Edges of every class, each list in colex order.
    pub fn class_edges(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.t];
        for (r, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(subsets::pair_unrank(r));
        }
        out
    }

    /// Number of nonempty classes.
    pub fn nonempty_classes(&self) -> usize {
        let mut seen = vec![false; self.t];
        self.class_of.iter().for_each(|&c| seen[c as usize] = true);
        seen.into_iter().filter(|&s| s).count()
    }
}

//! Line-oriented text files for colorings and edge partitions.
//!
//! ```text
//! graph <n> <palette>          u v c
//! hyper <n> <k> <palette>      v1 ... vk c
//! grid <n> <m> <palette>       row i j j' c   /   col i i' j c
//! partition <n> <t>            u v class
//! ```
//!
//! Vertices, rows and columns are 1-based; colors are dense 0-based ids into
//! the palette. A trailing `# value` on a body line gives the structured color
//! of that id (or the label of that class). A grid header lists the number of
//! columns `n` before the number of rows `m`. Graph, grid and partition files
//! must cover every edge; hyper files may leave k-sets uncolored.
//!
//! [`ColoringFile::to_text`] writes the canonical form: body lines in
//! lexicographic order, only used colors, renumbered in id order, each line
//! carrying its value comment. Parsing canonical text and writing it again
//! reproduces it byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use crate::color::{Color, ColorId, ColorTable};
use crate::coloring::{EdgePartition, GraphColoring, GridColoring};
use crate::error::{Error, Result};
use crate::subsets::{self, pair_rank, pairs};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringFile {
    Graph(GraphColoring),
    Hyper(GraphColoring),
    Grid(GridColoring),
    Partition(EdgePartition),
}

impl ColoringFile {
    /// Wraps a coloring as `graph` when it is a total 2-uniform coloring and as
    /// `hyper` otherwise.
    pub fn from_coloring(c: GraphColoring) -> Self {
        if c.k() == 2 && c.is_total() {
            ColoringFile::Graph(c)
        } else {
            ColoringFile::Hyper(c)
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ColoringFile::Graph(_) => "graph",
            ColoringFile::Hyper(_) => "hyper",
            ColoringFile::Grid(_) => "grid",
            ColoringFile::Partition(_) => "partition",
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn to_text(&self) -> String {
        match self {
            ColoringFile::Graph(c) | ColoringFile::Hyper(c) => write_hyper(c, self.kind() == "graph"),
            ColoringFile::Grid(g) => write_grid(g),
            ColoringFile::Partition(p) => write_partition(p),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| Line::split(i + 1, l))
            .filter(|l| !l.fields.is_empty());
        let header = lines.next().ok_or(Error::Parse { line: 1, message: "empty file".into() })?;
        let kind = header.fields[0];
        let body: Vec<Line> = lines.collect();
        match kind {
            "graph" => {
                let [n, palette] = header.numbers::<2>(1)?;
                let c = parse_hyper(&body, n, 2, palette)?;
                if !c.is_total() {
                    return Err(header.err("graph file does not color every pair; use a hyper file"));
                }
                Ok(ColoringFile::Graph(c))
            }
            "hyper" => {
                let [n, k, palette] = header.numbers::<3>(1)?;
                if k == 0 {
                    return Err(header.err("uniformity must be at least 1"));
                }
                Ok(ColoringFile::Hyper(parse_hyper(&body, n, k, palette)?))
            }
            "grid" => {
                let [n, m, palette] = header.numbers::<3>(1)?;
                Ok(ColoringFile::Grid(parse_grid(&body, m, n, palette)?))
            }
            "partition" => {
                let [n, t] = header.numbers::<2>(1)?;
                Ok(ColoringFile::Partition(parse_partition(&body, n, t)?))
            }
            other => Err(header.err(&format!("unknown file kind `{other}`"))),
        }
    }
}

struct Line<'a> {
    no: usize,
    fields: Vec<&'a str>,
    comment: Option<&'a str>,
}

impl<'a> Line<'a> {
    fn split(no: usize, raw: &'a str) -> Self {
        let (data, comment) = match raw.split_once('#') {
            Some((d, c)) => (d, Some(c.trim()).filter(|c| !c.is_empty())),
            None => (raw, None),
        };
        let fields: Vec<&str> = data.split_whitespace().collect();
        // a comment-only line carries nothing
        let comment = if fields.is_empty() { None } else { comment };
        Line { no, fields, comment }
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse { line: self.no, message: message.to_string() }
    }

    /// Exactly `N` unsigned integers starting at field `from`, ending the line.
    fn numbers<const N: usize>(&self, from: usize) -> Result<[usize; N]> {
        if self.fields.len() != from + N {
            return Err(self.err(&format!("expected {} fields, found {}", from + N, self.fields.len())));
        }
        let mut out = [0; N];
        for (slot, f) in out.iter_mut().zip(&self.fields[from..]) {
            *slot = f.parse().map_err(|_| self.err(&format!("`{f}` is not a non-negative integer")))?;
        }
        Ok(out)
    }

    fn color(&self) -> Result<Option<Color>> {
        self.comment
            .map(|c| c.parse::<Color>().map_err(|_| self.err(&format!("bad color value `{c}`"))))
            .transpose()
    }
}

/// Collects `# value` comments for dense ids and builds the table. Ids without
/// a comment get the integer value `id + 1`.
struct PaletteBuilder {
    values: Vec<Option<Color>>,
}

impl PaletteBuilder {
    fn new(palette: usize) -> Self {
        PaletteBuilder { values: vec![None; palette] }
    }

    fn id(&mut self, line: &Line, field: &str) -> Result<ColorId> {
        let id: usize = field.parse().map_err(|_| line.err(&format!("`{field}` is not a color id")))?;
        if id >= self.values.len() {
            return Err(line.err(&format!("color id {id} outside palette of {}", self.values.len())));
        }
        if let Some(value) = line.color()? {
            match &self.values[id] {
                Some(prev) if *prev != value => {
                    return Err(line.err(&format!("color id {id} given values {prev} and {value}")));
                }
                _ => self.values[id] = Some(value),
            }
        }
        Ok(ColorId(id as u32))
    }

    fn finish(self) -> Result<ColorTable> {
        let mut table = ColorTable::new();
        let palette = self.values.len();
        for (i, v) in self.values.into_iter().enumerate() {
            table.intern(v.unwrap_or_else(|| Color::int(i as i64 + 1)));
        }
        if table.len() != palette {
            return Err(Error::Parse { line: 0, message: "two color ids share one value".into() });
        }
        Ok(table)
    }
}

fn vertex(line: &Line, field: &str, n: usize) -> Result<usize> {
    match field.parse::<usize>() {
        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
        _ => Err(line.err(&format!("`{field}` is not a vertex in 1..={n}"))),
    }
}

fn parse_hyper(body: &[Line], n: usize, k: usize, palette: usize) -> Result<GraphColoring> {
    let size = GraphColoring::empty(n, k, ColorTable::new())?.ids().len();
    let mut ids: Vec<Option<ColorId>> = vec![None; size];
    let mut pal = PaletteBuilder::new(palette);
    for line in body {
        if line.fields.len() != k + 1 {
            return Err(line.err(&format!("expected {k} vertices and a color")));
        }
        let mut set = line.fields[..k]
            .iter()
            .map(|f| vertex(line, f, n))
            .collect::<Result<Vec<_>>>()?;
        set.sort_unstable();
        if set.windows(2).any(|w| w[0] == w[1]) {
            return Err(line.err("repeated vertex"));
        }
        let id = pal.id(line, line.fields[k])?;
        let slot = &mut ids[subsets::rank(&set)];
        if slot.is_some() {
            return Err(line.err("edge colored twice"));
        }
        *slot = Some(id);
    }
    let table = pal.finish()?;
    let mut c = GraphColoring::empty(n, k, table.clone())?;
    let mut sub = vec![0; k];
    for (r, id) in ids.iter().enumerate() {
        if let Some(id) = id {
            subsets::unrank(r, &mut sub);
            c.set(&sub, table.value(*id).clone())?;
        }
    }
    Ok(c)
}

fn parse_grid(body: &[Line], m: usize, n: usize, palette: usize) -> Result<GridColoring> {
    let mut rows: Vec<Option<ColorId>> = vec![None; m * pairs(n)];
    let mut cols: Vec<Option<ColorId>> = vec![None; n * pairs(m)];
    let mut pal = PaletteBuilder::new(palette);
    for line in body {
        if line.fields.len() != 5 {
            return Err(line.err("expected `row i j j' c` or `col i i' j c`"));
        }
        let slot = match line.fields[0] {
            "row" => {
                let i = vertex(line, line.fields[1], m)?;
                let (a, b) = (vertex(line, line.fields[2], n)?, vertex(line, line.fields[3], n)?);
                if a == b {
                    return Err(line.err("row edge joins a column to itself"));
                }
                &mut rows[i * pairs(n) + pair_rank(a.min(b), a.max(b))]
            }
            "col" => {
                let (a, b) = (vertex(line, line.fields[1], m)?, vertex(line, line.fields[2], m)?);
                let j = vertex(line, line.fields[3], n)?;
                if a == b {
                    return Err(line.err("column edge joins a row to itself"));
                }
                &mut cols[j * pairs(m) + pair_rank(a.min(b), a.max(b))]
            }
            other => return Err(line.err(&format!("unknown edge kind `{other}`"))),
        };
        if slot.is_some() {
            return Err(line.err("edge colored twice"));
        }
        *slot = Some(pal.id(line, line.fields[4])?);
    }
    let missing = |v: &[Option<ColorId>]| v.iter().any(Option::is_none);
    if missing(&rows) || missing(&cols) {
        return Err(Error::Parse { line: 0, message: "grid file does not color every edge".into() });
    }
    let table = pal.finish()?;
    let rows = rows.into_iter().flatten().collect();
    let cols = cols.into_iter().flatten().collect();
    GridColoring::from_ids(m, n, rows, cols, table)
}

fn parse_partition(body: &[Line], n: usize, t: usize) -> Result<EdgePartition> {
    let mut class_of: Vec<Option<u32>> = vec![None; pairs(n)];
    let mut labels: Vec<Option<Color>> = vec![None; t];
    for line in body {
        if line.fields.len() != 3 {
            return Err(line.err("expected `u v class`"));
        }
        let (u, v) = (vertex(line, line.fields[0], n)?, vertex(line, line.fields[1], n)?);
        if u == v {
            return Err(line.err("self-loop"));
        }
        let class: usize = match line.fields[2].parse() {
            Ok(c) if c < t => c,
            _ => return Err(line.err(&format!("`{}` is not a class in 0..{t}", line.fields[2]))),
        };
        let slot = &mut class_of[pair_rank(u.min(v), u.max(v))];
        if slot.is_some() {
            return Err(line.err("pair listed twice"));
        }
        *slot = Some(class as u32);
        if let Some(label) = line.color()? {
            match &labels[class] {
                Some(prev) if *prev != label => {
                    return Err(line.err(&format!("class {class} given labels {prev} and {label}")));
                }
                _ => labels[class] = Some(label),
            }
        }
    }
    if class_of.iter().any(Option::is_none) {
        return Err(Error::Parse { line: 0, message: "partition file does not cover every pair".into() });
    }
    let p = EdgePartition::new(n, t, class_of.into_iter().flatten().collect())?;
    if labels.iter().all(Option::is_some) && t > 0 {
        let mut table = ColorTable::new();
        for l in labels.into_iter().flatten() {
            table.intern(l);
        }
        if table.len() != t {
            return Err(Error::Parse { line: 0, message: "two classes share one label".into() });
        }
        return p.with_labels(table);
    }
    Ok(p)
}

/// Dense renumbering of the used ids, in id order.
fn compact(palette: usize, used: impl Iterator<Item = ColorId>) -> (Vec<u32>, usize) {
    let mut seen = vec![false; palette];
    used.for_each(|id| seen[id.index()] = true);
    let mut map = vec![u32::MAX; palette];
    let mut next = 0;
    for (i, s) in seen.iter().enumerate() {
        if *s {
            map[i] = next;
            next += 1;
        }
    }
    (map, next as usize)
}

fn write_hyper(c: &GraphColoring, graph: bool) -> String {
    let (map, palette) = compact(c.palette_size(), c.ids().iter().flatten().copied());
    let mut s = String::new();
    if graph {
        writeln!(s, "graph {} {palette}", c.n()).unwrap();
    } else {
        writeln!(s, "hyper {} {} {palette}", c.n(), c.k()).unwrap();
    }
    subsets::for_each_combination(c.n(), c.k(), |set| {
        if let Some(id) = c.get_sorted(set) {
            for v in set {
                write!(s, "{} ", v + 1).unwrap();
            }
            writeln!(s, "{} # {}", map[id.index()], c.table().value(id)).unwrap();
        }
    });
    s
}

fn write_grid(g: &GridColoring) -> String {
    let (m, n) = (g.m(), g.n());
    let used = g.row_ids().iter().chain(g.col_ids()).copied();
    let (map, palette) = compact(g.palette_size(), used);
    let mut s = String::new();
    writeln!(s, "grid {n} {m} {palette}").unwrap();
    let line = |s: &mut String, kind: &str, a: usize, b: usize, c: usize, id: ColorId| {
        writeln!(s, "{kind} {} {} {} {} # {}", a + 1, b + 1, c + 1, map[id.index()], g.table().value(id)).unwrap();
    };
    for i in 0..m {
        for j in 0..n {
            for j2 in j + 1..n {
                line(&mut s, "row", i, j, j2, g.row(i, j, j2));
            }
        }
    }
    for i in 0..m {
        for i2 in i + 1..m {
            for j in 0..n {
                line(&mut s, "col", i, i2, j, g.col(i, i2, j));
            }
        }
    }
    s
}

fn write_partition(p: &EdgePartition) -> String {
    let mut s = String::new();
    writeln!(s, "partition {} {}", p.n(), p.t()).unwrap();
    for u in 0..p.n() {
        for v in u + 1..p.n() {
            let class = p.class(u, v);
            write!(s, "{} {} {class}", u + 1, v + 1).unwrap();
            if let Some(labels) = p.labels() {
                write!(s, " # {}", labels.value(ColorId(class as u32))).unwrap();
            }
            s.push('\n');
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Part;

    #[test]
    fn graph_round_trip() {
        let c = GraphColoring::from_fn(4, 2, |s| Some(Color(vec![Part::set(s[0] as i64, 9), Part::Int(1)]))).unwrap();
        let text = ColoringFile::Graph(c.clone()).to_text();
        assert!(text.starts_with("graph 4 3\n1 2 0 # ({0,9},1)\n"), "{text}");
        let back = ColoringFile::parse(&text).unwrap();
        assert_eq!(back, ColoringFile::Graph(c));
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn unused_colors_are_dropped() {
        let c = GraphColoring::from_ids(3, 2, vec![ColorId(2); 3], ColorTable::integers(3)).unwrap();
        let text = ColoringFile::from_coloring(c).to_text();
        assert_eq!(text, "graph 3 1\n1 2 0 # 3\n1 3 0 # 3\n2 3 0 # 3\n");
    }

    #[test]
    fn plain_ids_get_integer_values() {
        let f = ColoringFile::parse("graph 3 2\n1 2 0\n1 3 1\n2 3 0\n").unwrap();
        let ColoringFile::Graph(c) = f else { panic!() };
        assert_eq!(c.value_of(&[0, 2]), Some(&Color::int(2)));
    }

    #[test]
    fn partial_hyper_and_grid() {
        let mut h = GraphColoring::empty(5, 3, ColorTable::new()).unwrap();
        h.set(&[0, 2, 4], Color::int(5)).unwrap();
        let text = ColoringFile::from_coloring(h.clone()).to_text();
        assert_eq!(text, "hyper 5 3 1\n1 3 5 0 # 5\n");
        assert_eq!(ColoringFile::parse(&text).unwrap(), ColoringFile::Hyper(h));

        let g = GridColoring::from_fns(2, 3, |i, j, _| Color::int((i + j) as i64), |_, _, j| Color::int(j as i64));
        let text = ColoringFile::Grid(g.clone()).to_text();
        assert!(text.starts_with("grid 3 2 "));
        assert!(text.contains("\ncol 1 2 3 "));
        let back = ColoringFile::parse(&text).unwrap();
        assert_eq!(back.to_text(), text);
        let ColoringFile::Grid(g2) = back else { panic!() };
        for i in 0..2 {
            for j in 0..3 {
                for j2 in j + 1..3 {
                    assert_eq!(g.table().value(g.row(i, j, j2)), g2.table().value(g2.row(i, j, j2)));
                }
            }
        }
    }

    #[test]
    fn partition_with_labels() {
        let p = EdgePartition::singletons(3).with_labels(ColorTable::integers(3)).unwrap();
        let text = ColoringFile::Partition(p.clone()).to_text();
        assert_eq!(text, "partition 3 3\n1 2 0 # 1\n1 3 1 # 2\n2 3 2 # 3\n");
        assert_eq!(ColoringFile::parse(&text).unwrap(), ColoringFile::Partition(p));
    }

    #[test]
    fn malformed_files() {
        for bad in [
            "",
            "graph 3\n",
            "graph 3 1\n1 2 0\n1 3 0\n",
            "graph 3 1\n1 2 0\n1 3 0\n2 3 1\n",
            "graph 3 1\n1 2 0\n2 1 0\n1 3 0\n2 3 0\n",
            "graph 2 2\n1 2 0 # 2\n",
            "graph 2 1\n1 1 0\n",
            "graph 2 1\n1 2 0 # (1\n",
            "grid 2 2 1\nrow 1 1 2 0\n",
            "partition 2 1\n1 2 1\n",
            "blob 1\n",
        ] {
            assert!(ColoringFile::parse(bad).is_err(), "{bad:?}");
        }
    }
}

//! Text checkpoints of an interrupted search.
//!
//! ```text
//! gridramsey-checkpoint v1
//! problem g <m> <n> <r>            or   problem f <n> <p> <q> <k> <r>
//! symmetry <0|1>
//! nodes <explored so far>
//! path <length>
//! <length space-separated 0-based color values>
//! ```
//!
//! Lines end with LF. [`Checkpoint::to_text`] and [`Checkpoint::parse`] are
//! inverse on this canonical form.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::solve::engine::SearchState;

const MAGIC: &str = "gridramsey-checkpoint v1";

/// Which search a checkpoint belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemSpec {
    /// Alternating-free colorings of the `m x n` grid.
    Grid { m: usize, n: usize },
    /// (p,q)-colorings of the complete k-uniform hypergraph on `n` vertices.
    Hyper { n: usize, p: usize, q: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub problem: ProblemSpec,
    /// Number of colors being tried when the search stopped; smaller counts
    /// were already refuted.
    pub r: usize,
    pub symmetry: bool,
    pub state: SearchState,
}

impl Checkpoint {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(MAGIC);
        s.push('\n');
        match self.problem {
            ProblemSpec::Grid { m, n } => writeln!(s, "problem g {m} {n} {}", self.r),
            ProblemSpec::Hyper { n, p, q, k } => writeln!(s, "problem f {n} {p} {q} {k} {}", self.r),
        }
        .expect("write to string");
        writeln!(s, "symmetry {}", self.symmetry as u8).expect("write to string");
        writeln!(s, "nodes {}", self.state.nodes).expect("write to string");
        writeln!(s, "path {}", self.state.path.len()).expect("write to string");
        let values: Vec<String> = self.state.path.iter().map(u32::to_string).collect();
        s.push_str(&values.join(" "));
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.split('\n').collect();
        let err = |line: usize, message: &str| Error::Parse { line, message: message.to_string() };
        if lines.len() != 7 || !lines[6].is_empty() {
            return Err(err(lines.len().min(7), "expected six LF-terminated lines"));
        }
        if lines[0] != MAGIC {
            return Err(err(1, "not a gridramsey checkpoint (v1)"));
        }
        let fields = |line: usize, key: &str| -> Result<Vec<u64>> {
            let mut it = lines[line - 1].split(' ');
            if it.next() != Some(key) {
                return Err(err(line, &format!("expected `{key}`")));
            }
            it.map(|t| t.parse::<u64>().map_err(|_| err(line, &format!("bad number `{t}`"))))
                .collect()
        };
        let kind = lines[1].split(' ').nth(1).unwrap_or("");
        let head = lines[1].split(' ').next().unwrap_or("");
        if head != "problem" {
            return Err(err(2, "expected `problem`"));
        }
        let nums: Vec<usize> = lines[1]
            .split(' ')
            .skip(2)
            .map(|t| t.parse::<usize>().map_err(|_| err(2, &format!("bad number `{t}`"))))
            .collect::<Result<_>>()?;
        let (problem, r) = match (kind, nums.as_slice()) {
            ("g", &[m, n, r]) => (ProblemSpec::Grid { m, n }, r),
            ("f", &[n, p, q, k, r]) => (ProblemSpec::Hyper { n, p, q, k }, r),
            _ => return Err(err(2, "expected `problem g m n r` or `problem f n p q k r`")),
        };
        let symmetry = match fields(3, "symmetry")?.as_slice() {
            [0] => false,
            [1] => true,
            _ => return Err(err(3, "symmetry must be 0 or 1")),
        };
        let [nodes] = fields(4, "nodes")?[..] else {
            return Err(err(4, "expected one node count"));
        };
        let [len] = fields(5, "path")?[..] else {
            return Err(err(5, "expected one path length"));
        };
        let path: Vec<u32> = if lines[5].is_empty() {
            Vec::new()
        } else {
            lines[5]
                .split(' ')
                .map(|t| t.parse::<u32>().map_err(|_| err(6, &format!("bad value `{t}`"))))
                .collect::<Result<_>>()?
        };
        if path.len() as u64 != len {
            return Err(err(6, "path length does not match header"));
        }
        if path.iter().any(|&v| v as usize >= r) {
            return Err(err(6, "path value outside the palette"));
        }
        Ok(Checkpoint { problem, r, symmetry, state: SearchState { path, nodes } })
    }
}

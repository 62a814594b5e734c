//! Exact small values of `g(m, n)`, `G(r)` and `f_k(n, p, q)` by backtracking
//! with first-use color symmetry breaking, node budgets and checkpoints.

pub mod checkpoint;
mod engine;
mod grid;
mod hyper;

use std::time::Duration;

pub use checkpoint::{Checkpoint, ProblemSpec};
pub use engine::SearchState;
pub use grid::{exact_G, exact_G_resume, exact_g, exact_g_resume};
pub use hyper::{exact_f, exact_f_resume};

use crate::coloring::{GraphColoring, GridColoring};

/// Default node budget per solver call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search nodes (consistency tests) for this call.
    pub budget: u64,
    /// Restrict each variable to at most one more than the largest color used
    /// before it. Never changes the computed value.
    pub symmetry: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET, symmetry: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Grid(GridColoring),
    Coloring(GraphColoring),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The exact value.
    Exact(usize),
    /// No solution up to the given limit; the value is larger.
    AboveLimit(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub verdict: Verdict,
    /// A coloring witnessing the value: for `g` and `f` a coloring with that
    /// many colors; for `G(r)` an alternating-free `r`-coloring of the grid one
    /// size below the value.
    pub certificate: Option<Certificate>,
    /// Parameter values whose search space was exhausted without a solution
    /// (color counts for `g` and `f`, the grid size for `G`).
    pub refuted: Vec<usize>,
    pub stats: SearchStats,
}

#[derive(Debug, thiserror::Error)]
pub enum SolveError {
    /// The node budget ran out. `lower <= value`, and `value <= upper` when known.
    #[error("node budget exhausted; value in [{lower}, {}]", upper.map_or("?".to_string(), |u| u.to_string()))]
    BudgetExhausted {
        lower: usize,
        upper: Option<usize>,
        checkpoint: Box<Checkpoint>,
        stats: SearchStats,
    },
    /// `G(r)` was not determined up to the requested grid size.
    #[error("undecided up to the limit; value in [{lower}, {upper}]")]
    Undecided { lower: usize, upper: u64, stats: SearchStats },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Core(#[from] crate::error::Error),
}

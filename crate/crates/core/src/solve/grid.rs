//! Alternating-free grid colorings: `g(m, n)` and `G(r)`.
//!
//! Only row edges are searched. Two rows can be completed by column colors
//! from `[r]` exactly when their agreement graph is `r`-colorable, so every
//! time a row edge is assigned the agreement graphs it touches (restricted to
//! the edges assigned so far) are tested for `r`-colorability; column colors
//! are filled in by [`grid_from_rows`] once all rows are fixed.

use std::time::Instant;

use crate::chromatic::proper_coloring;
use crate::color::{ColorId, ColorTable};
use crate::coloring::{GraphColoring, GridColoring};
use crate::constructions::rows::grid_from_rows;
use crate::graph::SimpleGraph;
use crate::solve::checkpoint::{Checkpoint, ProblemSpec};
use crate::solve::engine::{search, Outcome, Problem, SearchState};
use crate::solve::{Certificate, SearchResult, SearchStats, SolveError, SolveOptions, Verdict};
use crate::subsets::{pair_unrank, pairs};
use crate::verify::{find_alternating_rectangle, shelah_columns};

/// Largest number of row-edge variables accepted.
const MAX_VARIABLES: usize = 4096;

struct GridProblem {
    m: usize,
    e: usize,
    r: usize,
    edges: Vec<(usize, usize)>,
    n: usize,
}

impl GridProblem {
    fn new(m: usize, n: usize, r: usize) -> Self {
        let e = pairs(n);
        GridProblem { m, e, r, edges: (0..e).map(pair_unrank).collect(), n }
    }
}

impl Problem for GridProblem {
    fn len(&self) -> usize {
        self.m * self.e
    }

    fn colors(&self) -> usize {
        self.r
    }

    fn consistent(&mut self, path: &[u32], d: usize) -> bool {
        let (i, idx) = (d / self.e, d % self.e);
        let v = path[d];
        for i2 in 0..i {
            if path[i2 * self.e + idx] != v {
                continue;
            }
            // the new edge joined the agreement graph of rows i2 and i
            let mut h = SimpleGraph::new(self.n);
            for s in 0..=idx {
                if path[i * self.e + s] == path[i2 * self.e + s] {
                    let (a, b) = self.edges[s];
                    h.insert(a, b);
                }
            }
            if proper_coloring(&h, self.r).is_none() {
                return false;
            }
        }
        true
    }
}

fn check_grid(m: usize, n: usize) -> Result<(), SolveError> {
    if m == 0 || n == 0 {
        return Err(SolveError::InvalidParameters("grid sides must be positive".into()));
    }
    if m * pairs(n) > MAX_VARIABLES {
        return Err(SolveError::InvalidParameters(format!(
            "{m}x{n} grid has {} row edges; at most {MAX_VARIABLES} are searched",
            m * pairs(n)
        )));
    }
    Ok(())
}

fn certificate(m: usize, n: usize, r: usize, path: &[u32]) -> Result<GridColoring, SolveError> {
    let e = pairs(n);
    let rows = (0..m)
        .map(|i| {
            let ids = path[i * e..(i + 1) * e].iter().map(|&c| ColorId(c)).collect();
            GraphColoring::from_ids(n, 2, ids, ColorTable::integers(r))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let grid = grid_from_rows(&rows, r)?;
    assert!(find_alternating_rectangle(&grid).is_none());
    Ok(grid)
}

enum Existence {
    Found(GridColoring),
    Refuted,
    Budget(SearchState),
}

fn exists(
    m: usize,
    n: usize,
    r: usize,
    state: &mut SearchState,
    opts: SolveOptions,
    limit: u64,
) -> Result<Existence, SolveError> {
    let mut problem = GridProblem::new(m, n, r);
    match search(&mut problem, state, opts.symmetry, limit) {
        Outcome::Found(path) => Ok(Existence::Found(certificate(m, n, r, &path)?)),
        Outcome::Exhausted => Ok(Existence::Refuted),
        Outcome::Budget => Ok(Existence::Budget(state.clone())),
    }
}

/// The least `r <= r_max` admitting an alternating-free `r`-coloring of the
/// `m x n` grid.
pub fn exact_g(m: usize, n: usize, r_max: usize, opts: SolveOptions) -> Result<SearchResult, SolveError> {
    check_grid(m, n)?;
    run_g(m, n, 1, r_max, SearchState::start(), opts)
}

/// Continues an interrupted [`exact_g`] run.
pub fn exact_g_resume(cp: &Checkpoint, r_max: usize, opts: SolveOptions) -> Result<SearchResult, SolveError> {
    let ProblemSpec::Grid { m, n } = cp.problem else {
        return Err(SolveError::InvalidParameters("checkpoint is not a grid search".into()));
    };
    check_grid(m, n)?;
    run_g(m, n, cp.r, r_max, cp.state.clone(), SolveOptions { symmetry: cp.symmetry, ..opts })
}

fn run_g(
    m: usize,
    n: usize,
    r_start: usize,
    r_max: usize,
    mut state: SearchState,
    opts: SolveOptions,
) -> Result<SearchResult, SolveError> {
    let clock = Instant::now();
    let limit = state.nodes.saturating_add(opts.budget);
    let mut refuted: Vec<usize> = (1..r_start).collect();
    for r in r_start.max(1)..=r_max {
        match exists(m, n, r, &mut state, opts, limit)? {
            Existence::Found(grid) => {
                return Ok(SearchResult {
                    verdict: Verdict::Exact(r),
                    certificate: Some(Certificate::Grid(grid)),
                    refuted,
                    stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
                })
            }
            Existence::Refuted => {
                refuted.push(r);
                state = SearchState { path: vec![0], nodes: state.nodes };
            }
            Existence::Budget(state) => {
                return Err(SolveError::BudgetExhausted {
                    lower: r,
                    upper: None,
                    stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
                    checkpoint: Box::new(Checkpoint {
                        problem: ProblemSpec::Grid { m, n },
                        r,
                        symmetry: opts.symmetry,
                        state,
                    }),
                })
            }
        }
    }
    Ok(SearchResult {
        verdict: Verdict::AboveLimit(r_max),
        certificate: None,
        refuted,
        stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
    })
}

/// The least `n <= n_max` such that every `r`-coloring of the `n x n` grid has
/// an alternating rectangle. The certificate is an alternating-free coloring
/// of the grid of side `n - 1`.
#[allow(non_snake_case)]
pub fn exact_G(r: usize, n_max: usize, opts: SolveOptions) -> Result<SearchResult, SolveError> {
    if r == 0 {
        return Err(SolveError::InvalidParameters("r must be at least 1".into()));
    }
    run_big_g(r, 1, n_max, SearchState::start(), None, opts)
}

/// Continues an interrupted [`exact_G`] run (the checkpoint names the grid
/// side being searched).
#[allow(non_snake_case)]
pub fn exact_G_resume(cp: &Checkpoint, n_max: usize, opts: SolveOptions) -> Result<SearchResult, SolveError> {
    let ProblemSpec::Grid { m, n } = cp.problem else {
        return Err(SolveError::InvalidParameters("checkpoint is not a grid search".into()));
    };
    if m != n {
        return Err(SolveError::InvalidParameters("checkpoint is not a square grid search".into()));
    }
    let opts = SolveOptions { symmetry: cp.symmetry, ..opts };
    // rebuild the certificate one size down, which the earlier run had found
    let below = if n > 1 {
        let mut s = SearchState::start();
        match exists(n - 1, n - 1, cp.r, &mut s, opts, opts.budget)? {
            Existence::Found(g) => Some(g),
            _ => None,
        }
    } else {
        None
    };
    run_big_g(cp.r, n, n_max, cp.state.clone(), below, opts)
}

fn run_big_g(
    r: usize,
    n_start: usize,
    n_max: usize,
    mut state: SearchState,
    mut last: Option<GridColoring>,
    opts: SolveOptions,
) -> Result<SearchResult, SolveError> {
    let clock = Instant::now();
    let upper = shelah_columns(r);
    let limit = state.nodes.saturating_add(opts.budget);
    for n in n_start.max(1)..=n_max {
        check_grid(n, n)?;
        match exists(n, n, r, &mut state, opts, limit)? {
            Existence::Found(grid) => {
                last = Some(grid);
                state = SearchState { path: vec![0], nodes: state.nodes };
            }
            Existence::Refuted => {
                return Ok(SearchResult {
                    verdict: Verdict::Exact(n),
                    certificate: last.map(Certificate::Grid),
                    refuted: vec![n],
                    stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
                })
            }
            Existence::Budget(state) => {
                return Err(SolveError::BudgetExhausted {
                    lower: n,
                    upper: Some(upper.min(usize::MAX as u64) as usize),
                    stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
                    checkpoint: Box::new(Checkpoint {
                        problem: ProblemSpec::Grid { m: n, n },
                        r,
                        symmetry: opts.symmetry,
                        state,
                    }),
                })
            }
        }
    }
    Err(SolveError::Undecided {
        lower: n_max.max(n_start.saturating_sub(1)) + 1,
        upper,
        stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(res: &SearchResult) -> usize {
        match res.verdict {
            Verdict::Exact(v) => v,
            Verdict::AboveLimit(_) => panic!("no value"),
        }
    }

    #[test]
    fn small_g_values() {
        let opts = SolveOptions::default();
        for n in 1..6 {
            assert_eq!(value(&exact_g(1, n, 3, opts).unwrap()), 1);
        }
        let res = exact_g(2, 2, 3, opts).unwrap();
        assert_eq!(value(&res), 2);
        assert_eq!(res.refuted, vec![1]);
        let Some(Certificate::Grid(g)) = res.certificate else { panic!() };
        assert!(g.palette_size() <= 2);
    }

    #[test]
    fn small_big_g() {
        let res = exact_G(1, 5, SolveOptions::default()).unwrap();
        assert_eq!(value(&res), 2);
        assert_eq!(res.refuted, vec![2]);
    }

    #[test]
    fn budget_then_resume_matches_uninterrupted() {
        let opts = SolveOptions::default();
        let full = exact_g(3, 4, 3, opts).unwrap();
        let small = SolveOptions { budget: 5, ..opts };
        let Err(SolveError::BudgetExhausted { checkpoint, .. }) = exact_g(3, 4, 3, small) else {
            panic!("budget of 5 nodes should not suffice")
        };
        let cp = Checkpoint::parse(&checkpoint.to_text()).unwrap();
        let resumed = exact_g_resume(&cp, 3, opts).unwrap();
        assert_eq!(resumed.verdict, full.verdict);
        assert_eq!(resumed.certificate, full.certificate);
        assert_eq!(resumed.stats.nodes, full.stats.nodes);
    }

    #[test]
    fn g_bracket_for_two_colors() {
        let opts = SolveOptions { budget: 200_000, ..SolveOptions::default() };
        match exact_G(2, 3, opts) {
            Err(SolveError::Undecided { lower, upper, .. }) => {
                assert_eq!(lower, 4);
                assert_eq!(upper, 9);
            }
            other => panic!("{other:?}"),
        }
    }
}

//! (p,q)-colorings of complete k-uniform hypergraphs: `f_k(n, p, q)`.
//!
//! k-subsets are assigned in colex order. A p-set is tested when its top `k`
//! elements (its colex-largest k-subset) receive a color; at that point all
//! of its k-subsets are colored.

use std::time::Instant;

use crate::color::{ColorId, ColorTable};
use crate::coloring::GraphColoring;
use crate::solve::checkpoint::{Checkpoint, ProblemSpec};
use crate::solve::engine::{search, Outcome, Problem, SearchState};
use crate::solve::{Certificate, SearchResult, SearchStats, SolveError, SolveOptions, Verdict};
use crate::subsets::{self, binom};
use crate::verify::verify_pq;

const MAX_VARIABLES: u64 = 4096;

struct HyperProblem {
    p: usize,
    q: usize,
    k: usize,
    r: usize,
    /// The k-subset at each colex rank.
    sets: Vec<Vec<usize>>,
}

impl HyperProblem {
    fn new(n: usize, p: usize, q: usize, k: usize, r: usize) -> Self {
        let sets = (0..binom(n, k) as usize)
            .map(|d| {
                let mut s = vec![0; k];
                subsets::unrank(d, &mut s);
                s
            })
            .collect();
        HyperProblem { p, q, k, r, sets }
    }
}

impl Problem for HyperProblem {
    fn len(&self) -> usize {
        self.sets.len()
    }

    fn colors(&self) -> usize {
        self.r
    }

    fn consistent(&mut self, path: &[u32], d: usize) -> bool {
        let top = &self.sets[d];
        let extra = self.p - self.k;
        if top[0] < extra {
            return true;
        }
        let mut below: Vec<usize> = (0..extra).collect();
        let mut set = vec![0; self.p];
        let mut idx: Vec<usize> = (0..self.k).collect();
        let mut sub = vec![0; self.k];
        let mut colors: Vec<u32> = Vec::with_capacity(self.q);
        loop {
            set[..extra].copy_from_slice(&below);
            set[extra..].copy_from_slice(top);
            colors.clear();
            for (slot, i) in idx.iter_mut().enumerate() {
                *i = slot;
            }
            loop {
                for (s, &i) in sub.iter_mut().zip(&idx) {
                    *s = set[i];
                }
                let c = path[subsets::rank(&sub)];
                if !colors.contains(&c) {
                    colors.push(c);
                    if colors.len() >= self.q {
                        break;
                    }
                }
                if !subsets::next_combination(&mut idx, self.p) {
                    break;
                }
            }
            if colors.len() < self.q {
                return false;
            }
            if !subsets::next_combination(&mut below, top[0]) {
                return true;
            }
        }
    }
}

fn check_params(n: usize, p: usize, q: usize, k: usize) -> Result<(), SolveError> {
    if k == 0 || p < k + 1 || p > n {
        return Err(SolveError::InvalidParameters(format!("need k >= 1 and k+1 <= p <= n, got n={n} p={p} k={k}")));
    }
    if q < 2 || q as u64 > binom(p, k) {
        return Err(SolveError::InvalidParameters(format!("need 2 <= q <= C(p,k) = {}", binom(p, k))));
    }
    if binom(n, k) > MAX_VARIABLES {
        return Err(SolveError::InvalidParameters(format!(
            "C({n},{k}) = {} edges; at most {MAX_VARIABLES} are searched",
            binom(n, k)
        )));
    }
    Ok(())
}

/// The least `r <= r_max` admitting a (p,q)-coloring of the complete
/// k-uniform hypergraph on `n` vertices.
pub fn exact_f(n: usize, p: usize, q: usize, k: usize, r_max: usize, opts: SolveOptions) -> Result<SearchResult, SolveError> {
    check_params(n, p, q, k)?;
    run(n, p, q, k, 1, r_max, SearchState::start(), opts)
}

/// Continues an interrupted [`exact_f`] run.
pub fn exact_f_resume(cp: &Checkpoint, r_max: usize, opts: SolveOptions) -> Result<SearchResult, SolveError> {
    let ProblemSpec::Hyper { n, p, q, k } = cp.problem else {
        return Err(SolveError::InvalidParameters("checkpoint is not a hypergraph search".into()));
    };
    check_params(n, p, q, k)?;
    run(n, p, q, k, cp.r, r_max, cp.state.clone(), SolveOptions { symmetry: cp.symmetry, ..opts })
}

#[allow(clippy::too_many_arguments)]
fn run(
    n: usize,
    p: usize,
    q: usize,
    k: usize,
    r_start: usize,
    r_max: usize,
    mut state: SearchState,
    opts: SolveOptions,
) -> Result<SearchResult, SolveError> {
    let clock = Instant::now();
    let limit = state.nodes.saturating_add(opts.budget);
    let mut refuted: Vec<usize> = (1..r_start).collect();
    for r in r_start.max(1)..=r_max {
        let mut problem = HyperProblem::new(n, p, q, k, r);
        match search(&mut problem, &mut state, opts.symmetry, limit) {
            Outcome::Found(path) => {
                let ids = path.into_iter().map(ColorId).collect();
                let c = GraphColoring::from_ids(n, k, ids, ColorTable::integers(r))?;
                assert!(verify_pq(&c, p, q)?.is_none(), "certificate must be a (p,q)-coloring");
                return Ok(SearchResult {
                    verdict: Verdict::Exact(r),
                    certificate: Some(Certificate::Coloring(c)),
                    refuted,
                    stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
                });
            }
            Outcome::Exhausted => {
                refuted.push(r);
                state = SearchState { path: vec![0], nodes: state.nodes };
            }
            Outcome::Budget => {
                return Err(SolveError::BudgetExhausted {
                    lower: r,
                    upper: None,
                    stats: SearchStats { nodes: state.nodes, elapsed: clock.elapsed() },
                    checkpoint: Box::new(Checkpoint {
                        problem: ProblemSpec::Hyper { n, p, q, k },
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

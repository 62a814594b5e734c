//! Depth-first search over color assignments to a fixed sequence of variables.

/// A constraint problem: variables `0..len()` take colors `0..colors()`.
pub(crate) trait Problem {
    fn len(&self) -> usize;
    fn colors(&self) -> usize;
    /// Whether the assignment `path[..=d]` can still be extended, given that
    /// `path[..d]` already passed this test.
    fn consistent(&mut self, path: &[u32], d: usize) -> bool;
}

/// Resumable search position: `path` is the next node to test (its last entry
/// is the value about to be tried at depth `path.len() - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchState {
    pub path: Vec<u32>,
    pub nodes: u64,
}

impl SearchState {
    pub fn start() -> Self {
        SearchState { path: vec![0], nodes: 0 }
    }
}

pub(crate) enum Outcome {
    Found(Vec<u32>),
    Exhausted,
    Budget,
}

/// Upper bound (exclusive) on the value at depth `d`. With symmetry breaking
/// a value may exceed the largest earlier value by at most one.
fn limit(path: &[u32], d: usize, colors: usize, symmetry: bool) -> u32 {
    if symmetry {
        let top = path[..d].iter().max().map_or(0, |&m| m + 1);
        (top + 1).min(colors as u32)
    } else {
        colors as u32
    }
}

/// Runs until a full consistent assignment is found, the tree is exhausted,
/// or `state.nodes` reaches `budget`. Each consistency test counts as a node.
pub(crate) fn search(problem: &mut impl Problem, state: &mut SearchState, symmetry: bool, budget: u64) -> Outcome {
    let total = problem.len();
    let colors = problem.colors();
    if total == 0 {
        return Outcome::Found(Vec::new());
    }
    if colors == 0 || state.path.is_empty() {
        return Outcome::Exhausted;
    }
    loop {
        if state.nodes >= budget {
            return Outcome::Budget;
        }
        state.nodes += 1;
        let d = state.path.len() - 1;
        let path = &mut state.path;
        if path[d] < limit(path, d, colors, symmetry) && problem.consistent(path, d) {
            if path.len() == total {
                let found = path.clone();
                // leave the state pointing past this solution
                if !advance(path, colors, symmetry) {
                    path.clear();
                }
                return Outcome::Found(found);
            }
            path.push(0);
            continue;
        }
        if !advance(path, colors, symmetry) {
            path.clear();
            return Outcome::Exhausted;
        }
    }
}

/// Moves to the next sibling, backtracking as needed. Returns `false` when
/// the whole tree has been visited.
fn advance(path: &mut Vec<u32>, colors: usize, symmetry: bool) -> bool {
    loop {
        let d = path.len() - 1;
        path[d] += 1;
        if path[d] < limit(path, d, colors, symmetry) {
            return true;
        }
        path.pop();
        if path.is_empty() {
            return false;
        }
    }
}

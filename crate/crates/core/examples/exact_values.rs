//! Small exact values by exhaustive search with color symmetry breaking.

use grid_ramsey::solve::{exact_G, exact_f, exact_g, SolveError, SolveOptions, Verdict};

fn show(name: &str, v: Result<grid_ramsey::solve::SearchResult, SolveError>) {
    match v {
        Ok(res) => match res.verdict {
            Verdict::Exact(x) => println!("{name} = {x}  (refuted {:?}, {} nodes)", res.refuted, res.stats.nodes),
            Verdict::AboveLimit(l) => println!("{name} > {l}"),
        },
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() {
    let opts = SolveOptions::default();
    for (m, n) in [(2, 2), (2, 4), (3, 3), (3, 5), (4, 4)] {
        show(&format!("g({m},{n})"), exact_g(m, n, 8, opts));
    }
    show("G(1)", exact_G(1, 4, opts));
    show("G(2)", exact_G(2, 3, SolveOptions { budget: 1_000_000, ..opts }));
    for (n, p, q) in [(5, 3, 2), (6, 3, 2), (5, 3, 3), (4, 4, 6), (6, 4, 5)] {
        show(&format!("f({n},{p},{q})"), exact_f(n, p, q, 2, 16, opts));
    }
}

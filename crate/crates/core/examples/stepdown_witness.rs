//! Low-color cliques in colorings of complete k-uniform hypergraphs, found by
//! reducing to the (k-1)-uniform problem.

use grid_ramsey::rng::{stream, uniform_hyper};
use grid_ramsey::verify::{stepdown_bound, stepdown_witness};

fn main() -> grid_ramsey::Result<()> {
    for (k, r, p, q) in [(2, 2, 3, 2), (2, 3, 4, 2), (3, 2, 4, 3)] {
        let n = stepdown_bound(k, r, p, q) as usize;
        let c = uniform_hyper(n, k, r, &mut stream(7, 0))?;
        let w = stepdown_witness(&c, r, p, q)?;
        let colors: Vec<String> = w.violation.colors.iter().map(|&id| c.table().value(id).to_string()).collect();
        println!(
            "k={k} r={r}: {p} vertices {:?} of {n} span colors {colors:?}{}",
            w.violation.vertices,
            if w.degenerate { " (degenerate level)" } else { "" }
        );
    }
    Ok(())
}

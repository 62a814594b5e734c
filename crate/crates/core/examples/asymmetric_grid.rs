//! Grids with r row colors and only two column colors, from arithmetic
//! progressions over Z_p.
//!
//!     cargo run --release --example asymmetric_grid -- 10

use std::collections::HashSet;

use grid_ramsey::constructions::{asymmetric_grid, asymmetric_params};
use grid_ramsey::verify::{find_alternating_rectangle, non_bipartite_row_pair};

fn main() -> grid_ramsey::Result<()> {
    let r: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let params = asymmetric_params(r)?;
    let g = asymmetric_grid(r)?;
    let row_colors: HashSet<_> = g.row_ids().iter().collect();
    let col_colors: HashSet<_> = g.col_ids().iter().collect();
    println!("r = {r}: prime {}, {}x{} grid", params.p, g.m(), g.n());
    println!("{} row colors, {} column colors", row_colors.len(), col_colors.len());
    println!("alternating rectangle: {:?}", find_alternating_rectangle(&g));
    println!("non-bipartite row pair: {:?}", non_bipartite_row_pair(&g).map(|(i, i2, _)| (i, i2)));
    Ok(())
}

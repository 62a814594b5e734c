//! Every r-coloring of a grid with r+1 rows and r^C(r+1,2)+1 columns has an
//! alternating rectangle; this extracts one from random colorings.
//!
//!     cargo run --release --example shelah_witness -- 3

use grid_ramsey::rng::{stream, uniform_grid};
use grid_ramsey::verify::{shelah_columns, shelah_witness};

fn main() -> grid_ramsey::Result<()> {
    let r: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let cols = shelah_columns(r) as usize;
    for seed in 0..5 {
        let g = uniform_grid(r + 1, cols, r, &mut stream(seed, 0));
        let rect = shelah_witness(&g, r)?;
        println!("seed {seed}: {}x{cols} grid, rectangle {rect}, re-checked: {}", r + 1, g.is_alternating(&rect));
    }
    Ok(())
}

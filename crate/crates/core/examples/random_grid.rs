//! Randomized grid construction over an edge partition: random color vectors
//! per row, deletion of rows whose agreement unions are not r-colorable.
//!
//!     cargo run --release --example random_grid -- 4 2 5 12

use grid_ramsey::constructions::{product_partition, random_grid};
use grid_ramsey::verify::find_alternating_rectangle;

fn main() -> grid_ramsey::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let &[base, t, r, m] = args.as_slice() else {
        return run(4, 2, 5, 12);
    };
    run(base, t, r, m)
}

fn run(base: usize, t: usize, r: usize, m: usize) -> grid_ramsey::Result<()> {
    let p = product_partition(base, t)?;
    println!("partition of K_{} into {} classes ({} nonempty)", p.n(), p.t(), p.nonempty_classes());
    for seed in 0..5 {
        match random_grid(&p, r, m, seed)? {
            Some(g) => println!(
                "seed {seed}: {} rows survive, {} colors, alternating-free: {}",
                g.m(),
                g.palette_size(),
                find_alternating_rectangle(&g).is_none()
            ),
            None => println!("seed {seed}: fewer than {m} rows survive"),
        }
    }
    Ok(())
}

//! The first-differing-bit coloring of K_n: few colors, no monochromatic
//! triangle, and unions of j color classes need exactly 2^j colors.
//!
//!     cargo run --example binary_coloring -- 64

use grid_ramsey::chromatic::{chromatic_number, union_subgraph};
use grid_ramsey::constructions::{binary_coloring, ceil_log2};
use grid_ramsey::verify::{used_colors, verify_pq};

fn main() -> grid_ramsey::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(64);
    let c = binary_coloring(n)?;
    println!("K_{n}: {} colors (ceil(log2 n) = {})", used_colors(&c).len(), ceil_log2(n));
    match verify_pq(&c, 3, 2)? {
        None => println!("no monochromatic triangle"),
        Some(v) => println!("monochromatic triangle at {:?}", v.vertices),
    }
    let p = c.to_partition()?;
    for j in 1..=p.t().min(4) {
        let classes: Vec<usize> = (0..j).collect();
        let g = union_subgraph(&p, &classes)?;
        let chi = chromatic_number(&g, n).chi().expect("limit is n");
        println!("classes {classes:?}: {} edges, chromatic number {chi}", g.edge_count());
    }
    Ok(())
}

//! Triple-system colorings: the recursive (4,3)-coloring and the (5,6)
//! product coloring.
//!
//!     cargo run --release --example hypergraph_colorings -- 16

use grid_ramsey::constructions::{f3_43_default, f3_43_palette_bound, f3_56_coloring};
use grid_ramsey::verify::{used_colors, verify_pq};

fn main() -> grid_ramsey::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(16);
    let c43 = f3_43_default(n)?;
    let bound = f3_43_palette_bound(n, |m| if m < 2 { 1 } else { m });
    println!("(4,3): {} colors (palette bound with m-color grids: {bound})", used_colors(&c43).len());
    println!("  holds: {}", verify_pq(&c43, 4, 3)?.is_none());
    let c56 = f3_56_coloring(n)?;
    println!("(5,6): {} colors", used_colors(&c56).len());
    println!("  holds: {}", verify_pq(&c56, 5, 6)?.is_none());
    Ok(())
}

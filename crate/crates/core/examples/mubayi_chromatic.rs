//! The digit-pair coloring: a (4,3)-coloring whose color-class pairs are all
//! 3-colorable.
//!
//!     cargo run --release --example mubayi_chromatic -- 64

use grid_ramsey::constructions::{mubayi_coloring, MubayiColor, MubayiParams};
use grid_ramsey::verify::{used_colors, verify_chromatic_pq, verify_pq, SampleMode};

fn main() -> grid_ramsey::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(64);
    let params = MubayiParams::for_n(n);
    let c = mubayi_coloring(n)?;
    let palette = used_colors(&c);
    println!("n = {n}: t = {}, base {}, {} colors used (bound {})", params.t, params.m, palette.len(), params.palette_bound());
    let sample = c.table().value(palette[0]);
    let decoded = MubayiColor::parse(sample)?;
    println!("first color {sample}: first index with a_j = 1 is {}", decoded.iota());
    println!("(4,3): {}", verdict(verify_pq(&c, 4, 3)?.is_none()));
    let w = verify_chromatic_pq(&c, 4, 3, SampleMode::Exhaustive)?;
    println!("chromatic-(4,3) over all color pairs: {}", verdict(w.is_none()));
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok { "holds" } else { "fails" }
}

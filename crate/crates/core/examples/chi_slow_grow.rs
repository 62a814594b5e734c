//! Chromatic numbers of color-class unions in the digit-pair coloring against
//! the bound 2^(3 sqrt(s log2 s)), with the auxiliary-graph checks on samples.
//!
//!     cargo run --release --example chi_slow_grow -- 128 1000

use grid_ramsey::constructions::mubayi_coloring;
use grid_ramsey::verify::{check_chi_slow_grow, chi_slow_grow_bound, SlowGrowConfig};

fn main() -> grid_ramsey::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|a| a.parse::<u64>().ok());
    let n = args.next().unwrap_or(64) as usize;
    let samples = args.next().unwrap_or(500);
    for s in 2..=8 {
        println!("bound for |X| = {s}: {}", chi_slow_grow_bound(s));
    }
    let c = mubayi_coloring(n)?;
    let rep = check_chi_slow_grow(&c, &SlowGrowConfig { samples, ..SlowGrowConfig::default() })?;
    println!(
        "n = {n}: {} exhaustive sets, {} samples, {} independent sets checked, violation: {:?}",
        rep.exhaustive_sets, rep.sampled_sets, rep.independent_sets, rep.violation
    );
    Ok(())
}

//! Grid colorings of K_n x K_n correspond to colorings of the triples meeting
//! both sides of a balanced bipartition; rectangles become balanced 4-sets.

use grid_ramsey::constructions::{asymmetric_grid, grid_to_partite3, partite3_to_grid};
use grid_ramsey::rng::{stream, uniform_grid};
use grid_ramsey::verify::{find_alternating_rectangle, verify_pq};

fn main() -> grid_ramsey::Result<()> {
    let free = asymmetric_grid(4)?;
    let random = uniform_grid(4, 4, 2, &mut stream(1, 0));
    for (name, g) in [("asymmetric", free), ("random", random)] {
        let h = grid_to_partite3(&g)?;
        let back = partite3_to_grid(&h)?;
        // only balanced 4-sets are fully colored, so (4,3) checks exactly those
        let poor = verify_pq(&h, 4, 3)?;
        println!(
            "{name}: rectangle {:?}, poor balanced set {:?}, round trip ok: {}",
            find_alternating_rectangle(&g).map(|r| r.to_string()),
            poor.map(|v| v.vertices),
            back.m() == g.m() && back.row_ids().len() == g.row_ids().len()
        );
    }
    Ok(())
}

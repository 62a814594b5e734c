//! Stacking row colorings of K_n into an alternating-free grid: the column
//! edges between two rows are colored by a proper coloring of the graph of
//! pairs on which the rows agree.

use grid_ramsey::chromatic::{agreement_graph, chromatic_number};
use grid_ramsey::constructions::grid_from_rows;
use grid_ramsey::rng::{stream, uniform_hyper};
use grid_ramsey::verify::find_alternating_rectangle;
use grid_ramsey::{Error, GraphColoring};

fn main() -> grid_ramsey::Result<()> {
    let n = 7;
    let rows: Vec<GraphColoring> = (0..4)
        .map(|i| uniform_hyper(n, 2, 3, &mut stream(42, i)))
        .collect::<Result<_, _>>()?;
    let mut need = 0;
    for i in 0..rows.len() {
        for i2 in i + 1..rows.len() {
            let h = agreement_graph(&rows[i], &rows[i2])?;
            let chi = chromatic_number(&h, n).chi().expect("limit is n");
            need = need.max(chi);
            println!("rows {i},{i2}: agree on {:2} pairs, chromatic number {chi}", h.edge_count());
        }
    }
    println!("column colors needed: {need}");
    for r in 1..=need {
        match grid_from_rows(&rows, r) {
            Ok(g) => println!(
                "r = {r}: {}x{} grid, {} colors, alternating rectangle: {:?}",
                g.m(),
                g.n(),
                g.palette_size(),
                find_alternating_rectangle(&g)
            ),
            Err(Error::ChromaticObstruction(a, b)) => println!("r = {r}: rows {a} and {b} need more colors"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

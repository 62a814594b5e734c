//! Interrupting a search at a node budget, saving the checkpoint as text and
//! resuming it; the result and node count match an uninterrupted run.

use grid_ramsey::solve::{exact_g, exact_g_resume, Checkpoint, SolveError, SolveOptions};

fn main() -> Result<(), SolveError> {
    let full = exact_g(4, 6, 8, SolveOptions::default())?;
    println!("uninterrupted: {:?} after {} nodes", full.verdict, full.stats.nodes);

    let mut opts = SolveOptions { budget: 500, ..SolveOptions::default() };
    let mut attempt = exact_g(4, 6, 8, opts);
    let mut pauses = 0;
    let result = loop {
        match attempt {
            Err(SolveError::BudgetExhausted { checkpoint, lower, .. }) => {
                pauses += 1;
                let text = checkpoint.to_text();
                let restored = Checkpoint::parse(&text)?;
                if pauses == 1 {
                    print!("first checkpoint (value >= {lower}):\n{text}");
                }
                opts.budget = 500;
                attempt = exact_g_resume(&restored, 8, opts);
            }
            other => break other?,
        }
    };
    println!("resumed {pauses} times: {:?} after {} nodes", result.verdict, result.stats.nodes);
    Ok(())
}

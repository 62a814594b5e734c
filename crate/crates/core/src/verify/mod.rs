//! Property checkers and witness finders. Every witness is re-checked against
//! the input before it is returned.

pub mod chromatic_pq;
pub mod pq;
pub mod rectangle;
pub mod shelah;
pub mod slow_grow;
pub mod stepdown;

pub use chromatic_pq::{used_colors, verify_chromatic_pq, verify_chromatic_pq_tracked, ChromaticWitness, SampleMode};
pub use pq::{span_colors, verify_pq, verify_pq_tracked, PQViolation};
pub use rectangle::{find_alternating_rectangle, non_bipartite_row_pair};
pub use shelah::{shelah_columns, shelah_witness};
pub use slow_grow::{
    check_chi_slow_grow, check_chi_slow_grow_tracked, chi_slow_grow_bound, SlowGrowConfig, SlowGrowReport,
    SlowGrowViolation,
};
pub use stepdown::{stepdown_bound, stepdown_witness, StepdownWitness};

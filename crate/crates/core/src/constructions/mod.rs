//! Builders for the explicit colorings, partitions and bijections.

pub mod asymmetric;
pub mod auxiliary;
pub mod binary;
pub mod hyper;
pub mod mubayi;
pub mod partite;
pub mod product;
pub mod rows;

pub use asymmetric::{asymmetric_grid, asymmetric_params, is_prime, modular_sequences, AsymmetricParams};
pub use auxiliary::{auxiliary_color_graph, independent_sets};
pub use binary::{binary_color, binary_coloring, ceil_log2};
pub use hyper::{default_grid_provider, f3_43_coloring, f3_43_default, f3_43_palette_bound, f3_56_coloring, f3_56_from};
pub use mubayi::{mubayi_color, mubayi_coloring, MubayiColor, MubayiParams};
pub use partite::{grid_to_partite3, partite3_to_grid};
pub use product::{product_partition, product_partition_bounded};
pub use rows::{grid_from_rows, random_grid, rows_from_grid};

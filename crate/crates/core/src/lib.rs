//! Edge colorings for the grid Ramsey problem and related hypergraph
//! (p,q)-colorings.
//!
//! The crate builds explicit colorings ([`constructions`]), checks them
//! exhaustively or by seeded sampling ([`verify`]), extracts the monochromatic
//! structures that pigeonhole arguments force ([`verify::shelah_witness`],
//! [`verify::stepdown_witness`]) and computes small exact values by search
//! ([`solve`]). Colorings are stored as dense color ids with an interning
//! table of structured values ([`color`]). The [`cli`] module implements the
//! `gridramsey` binary and its text file formats.

pub mod chromatic;
pub mod cli;
pub mod color;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod rng;
pub mod solve;
pub mod subsets;
pub mod verify;

pub use color::{Color, ColorId, ColorTable, Part};
pub use coloring::{EdgePartition, GraphColoring, GridColoring, Rectangle};
pub use error::{Error, Result};
pub use graph::SimpleGraph;

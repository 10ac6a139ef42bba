//! Packing colorings of claw-free cubic graphs.
//!
//! Every connected claw-free cubic graph admits a (1,1,2,2)-packing
//! coloring: two classes whose vertices are pairwise at distance at least 2
//! and two at distance at least 3. This crate
//! recognizes the graphs, builds the coloring constructively and checks it
//! against an exact backtracking solver.

pub mod bridged;
pub mod canonical;
pub mod coloring;
pub mod factor;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod rng;

pub use bridged::color_claw_free_cubic;
pub use coloring::{Color22, PackingColoring, SPackingSpec};
pub use graph::{GraphFormat, MultiGraph};

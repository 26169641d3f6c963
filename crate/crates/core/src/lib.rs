//! Simultaneous proper colorings of vertices and incidences ("vi-colorings").
//!
//! A vi-coloring assigns colors to every vertex and every incidence `(v, e)`
//! of a graph so that adjacent or incident elements differ. The crate builds
//! such colorings constructively for outerplanar graphs, checks them, and
//! computes exact values by branch and bound at small scale.

pub mod certificates;
pub mod checker;
pub mod coloring;
pub mod construct;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod outerplanar;
pub mod power;
pub mod reproduce;
pub mod structure;

pub use checker::{lower_bound, spread, verify, verify_spread_lemma, CheckReport};
pub use coloring::{Color, ViColoring};
pub use graph::{incidences, ElementId, Graph, GraphError, Incidence};
pub use power::{incidence_graph, power, subdivide, three_thirds_power};
pub use structure::{blocks, girth, BlockDecomposition};

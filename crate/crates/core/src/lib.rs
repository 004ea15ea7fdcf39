#![no_std]
//! Plane maps, the wall-by-wall metric and the constructions relating
//! λ-flat graphs to graphs drawable with few crossings per edge.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod audit;
pub mod constructions;
pub mod crossings;
pub mod equivalence;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod planarity;
pub mod plane_map;
pub mod wbw;

pub use error::{Error, Result};
pub use graph::AbstractGraph;
pub use plane_map::{build_plane_map, DartId, PlaneMap};

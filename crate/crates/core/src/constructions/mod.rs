//! Constructions relating drawings with few crossings per edge to powers of
//! plane graphs.

pub mod draw;
pub mod layout;
pub mod transform;
pub mod triangulate;

pub use draw::{draw_pairs, draw_power, PowerDrawing};
pub use transform::{
    host_reach, keep_crossed_gadget, nearly_planar_to_flat, plane_transformation,
    CrossedGadget, NearlyPlanarFlattening, TransformationRecord,
};
pub use triangulate::{
    check_triangulation, lift_wbw_path, saturate, triangulate, Saturation, TriangulationRecord,
};

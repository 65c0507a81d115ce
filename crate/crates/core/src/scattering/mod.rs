//! Walls, scattering diagrams, wall-crossing automorphisms and path-ordered products.

mod crossing;
mod diagram;
mod equivalence;
mod finite;
mod psi;
mod rank2;
mod sampling;
mod wall;

pub use crossing::{apply_sequence, apply_stable, Ring, WallCrossing};
pub use diagram::{Diagram, PathCrossing, PointFunction};
pub use equivalence::{
    canonicalize, equivalence_witness, equivalent, hyperplane_cells, merge_walls,
};
pub use finite::{explore_chambers, facet_wall, fan_walls, finite_type_diagram, ChamberFan};
pub use psi::{
    crossing_time, factorize_along, primitive_normals, psi_factorize, same_action, segment_order,
    sweep_order, Factorization,
};
pub use rank2::{angle_cmp, complete_rank2, loop_around_origin, rank2_loop};
pub use sampling::{sample_general_points, sample_generic_loops};
pub use wall::{n_degree, primitive_part, Wall, WallKind};

//! Seeds, mutation, and cones in `M_R`.

mod cone;
mod mutation;
mod seed;

pub use cone::{chamber_lattice_intersection, extreme_rays, Cone, LatticeCone};
pub use mutation::{
    follow_green_sequence, is_green_sequence, is_maximal_green_sequence, Frame, PrincipalSeed, Side,
};
pub use seed::Seed;

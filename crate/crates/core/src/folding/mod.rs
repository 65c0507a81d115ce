//! Folding of seeds and scattering diagrams by admissible index permutations.

mod action;
mod fold;

pub use action::{
    act_point, act_point_function, check_admissible, equivariance_witness,
    incoming_walls_invariant, inverse_perm, is_pi_invariant_element, perm_from_cycles, pi_act_wall,
    GroupAction,
};
pub use fold::{fold_seed, perturb, FoldReport, FoldingMap};

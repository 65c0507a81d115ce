//! Chamber atlases, DT transformations, and the gluing of the folded Markov variety.

mod charts;
mod dt;
mod gluing;

pub use charts::{
    along_series, build_atilde, compose, crossing_pullback, identity_pullback, sample_triples,
    verify_cocycle, verify_cocycle_at, vertex_crossings, Atlas, Chart, CocycleReport, CrossEdge,
    Pullback, SeriesPullback, TransitionMap,
};
pub use dt::{
    green_crossings, in_x_variables, mutation_route, prin_m, prin_n, reverse_inverse,
    sigma_conjugated_crossing, sigma_star, split_x_part, DtTransform,
};
pub use gluing::{
    a_monomial, a_var, alpha, alpha_inverse, compose_a, eta, eta_monomial,
    eta_monomial_regular_on_both_charts, laurent_in_charts, mutate_a, pull, pull_eta_monomial,
    regular_on_both_charts, to_a_side, up_membership, ASubstitution,
};

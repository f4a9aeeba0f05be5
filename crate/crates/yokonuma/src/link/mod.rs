//! Braid words for framed solid-torus links and the polynomial link
//! invariants computed from them.

mod braid;
mod checks;
mod invariant;

pub use braid::{BraidLetter, BraidWord};
pub use checks::{
    check_component_vanishing, check_phi_rescaling, check_support_reduction,
    two_variable_average, CheckReport, VanishingReport,
};
pub use invariant::{
    delta_image, jl_specialize, rho_invariant, rho_tilde_invariant, GammaMode, InvariantOptions,
};

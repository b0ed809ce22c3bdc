//! Negative and structural examples: no reflection-positive subspace for
//! the ax+b group, uncorrelated invariant subspaces for the Heisenberg
//! group, and the positive sub-Laplacian form on the upper half space.

mod axb;
mod heisenberg;
mod projection;
mod subspace;
mod sublaplacian;

pub use axb::{
    anticommutator_bound, axb_action, axb_positivity_falsifier, diagonal_contrast, two_mode_form, AxbRepPoint,
    AxbSign, FalsifierWitness, HardyPair, PeriodicGrid,
};
pub use heisenberg::{
    brute_force_span, heisenberg_uncorrelated, invariant_closure, phase_average, HeisenbergDecomposition,
    HeisenbergModel,
};
pub use projection::{projection_field_check, ProjectionField, ProjectionReport};
pub use subspace::{largest_principal_angle, orthonormal_basis};
pub use sublaplacian::{
    bessel_k0, sublaplacian_direct_form, sublaplacian_kernel, sublaplacian_rp_form, HalfSpaceProbe,
};

//! X-cluster seeds and the discrete symmetry groups of the q-Painlevé
//! equations attached to the catalog quivers.
//!
//! The crate provides:
//!
//! - [`XSeed`]: a quiver together with one rational expression per vertex,
//!   evolving under mutations `y_j ↦ y_j^{-1}`,
//!   `y_i ↦ y_i (1 + y_j^{sgn ε_ij})^{ε_ij}`, vertex relabelings, and the
//!   inversion `ς: y_i ↦ y_i^{-1}, ε ↦ −ε`.
//! - [`Factored`] / [`FactoredSeed`]: the same dynamics kept as a product of
//!   normalized polynomial factors, which makes fractional powers of images
//!   computable exactly (the fractional exponents recombine to integers on
//!   the polynomial factors and stay on monomials otherwise).
//! - [`PainleveCase`]: per-label data — generator words, transcribed
//!   closed-form actions, named coordinates (Casimirs and dynamical
//!   variables), the invariant Hamiltonian and the constraint recipe.
//! - verification entry points: [`verify_relation`], [`verify_closed_forms`],
//!   [`casimir_track`], [`verify_hamiltonian`], [`verify_scalar_equation`].

mod cases;
mod factored;
mod seed;
mod verify;

pub use cases::{case, case_labels, PainleveCase, Relation};
pub use factored::{Factored, FactoredSeed};
pub use seed::XSeed;
pub use verify::{
    casimir_track, constrain, coordinate_image, hamiltonian_residual_unconstrained,
    verify_closed_forms, verify_hamiltonian, verify_relation, verify_scalar_equation,
    MismatchReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum XClusterError {
    #[error("symbolic arithmetic failed: {0}")]
    Sym(#[from] ratexpr::SymError),
    #[error("quiver operation failed: {0}")]
    Quiver(#[from] quivers::QuiverError),
    #[error("unknown case label `{0}`")]
    UnknownCase(String),
    #[error("case `{0}` has no generator named `{1}`")]
    UnknownGenerator(String, String),
    #[error("case `{0}` defines no scalar equation")]
    NoScalarEquation(String),
    #[error("closed-form images disagree:\n{0}")]
    Mismatch(verify::MismatchReport),
}

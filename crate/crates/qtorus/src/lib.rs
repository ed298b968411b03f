//! Quantum torus algebras with central parameter p, quantum cluster
//! mutation on the 4-cycle exchange matrix, the associated quantum tau
//! variables with their bilinear flow, and the structural reduction of tau
//! bilinears to Nekrasov-type block identities.

pub mod reduce;
pub mod skew;
pub mod taualg;
pub mod xalg;

pub use skew::{SkewContext, SkewFraction, P};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QTorusError {
    #[error("bad presentation: {0}")]
    BadForm(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is not in the commutative core")]
    NonCoreDenominator,
    #[error("rational power of a non-monomial element")]
    NonMonomialRoot,
    #[error("mutation undefined for exchange weight {0}")]
    UnsupportedExchange(i64),
    #[error("structural mismatch: {0}")]
    StructuralMismatch(String),
    #[error(transparent)]
    Quiver(#[from] quivers::QuiverError),
}

use thiserror::Error;

/// Errors raised by the exact symbolic kernel.
///
/// Every error is a contract violation at the call site; the kernel never
/// falls back to approximation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    /// Division by the zero expression.
    #[error("division by zero expression")]
    DivisionByZero,

    /// A rational (non-integer) power was requested of a multi-term
    /// expression. Fractional powers are only defined for monomials.
    #[error("fractional power of a non-monomial expression")]
    NonMonomialFractionalPower,

    /// A substitution target occurs with fractional exponents, but the
    /// replacement is not a single monomial, so no principal root exists.
    #[error("substitution for `{0}` requires a monomial replacement: the variable occurs with fractional exponents")]
    FractionalPowerOfNonMonomial(String),

    /// Exact evaluation hit a q-th root of a rational that is not a perfect
    /// q-th power (e.g. 2^{1/2}).
    #[error("no exact {root}-th root of {value}")]
    NonEvaluableRoot { value: String, root: String },

    /// The denominator of a fraction evaluates to zero at the given point.
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,

    /// A generator required by the operation was missing from the point map.
    #[error("no value supplied for generator `{0}`")]
    MissingGenerator(String),

    /// Canonical-text parsing failed.
    #[error("parse error: {0}")]
    Parse(String),

    /// JSON decoding failed.
    #[error("invalid expression encoding: {0}")]
    Encoding(String),
}

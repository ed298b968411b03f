//! Exact commutative symbolic arithmetic for cluster-algebra verification.
//!
//! The central carrier is [`RatExpr`], a fraction of multivariate Laurent
//! expressions whose coefficients *and* exponents are exact rationals.
//! Fractional exponents are permitted only on monomials (single-term
//! expressions); a fractional power of a sum is an error, never an
//! approximation. There is no polynomial GCD: fractions are reduced by
//! monomial content only, and equality is decided by cross-multiplication.
//!
//! - [`Monomial`]: rational coefficient times a product of generator powers
//!   with rational exponents.
//! - [`LaurentExpr`]: canonical finite sum of monomials.
//! - [`RatExpr`]: quotient of two `LaurentExpr`s, canonicalized so the
//!   denominator has unit leading coefficient and nonnegative minimal
//!   exponents.
//!
//! Values are immutable after construction and safe to share across threads.

mod error;
mod expr;
mod frac;
mod json;
mod parse;

pub use error::SymError;
pub use expr::{rat_pow, ExpMap, LaurentExpr, Monomial};
pub use frac::RatExpr;
pub use json::{point_from_json, rat_from_str};

use num_bigint::BigInt;
pub use num_rational::BigRational as Rat;

/// Build an exact rational from a numerator/denominator pair of machine ints.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Build an exact integer rational.
pub fn int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

//! Exact multivariate polynomial arithmetic over the rationals: Groebner
//! bases, ideal intersection, and Hilbert functions for homogeneous ideals
//! at desk scale (a handful of variables, generator degrees in single
//! digits).
//!
//! Coefficients are arbitrary-precision rationals throughout. Nothing on a
//! decision path rounds, floats, or reduces modulo a prime.

mod groebner;
mod hilbert;
mod ideal;
mod jacobian;
mod monomial;
mod parse;
mod poly;

pub use groebner::{buchberger, GroebnerBasis};
pub use hilbert::{
    hilbert_function, hilbert_polynomial, hilbert_polynomial_with_bound, HilbertPolynomial,
};
pub use ideal::{ideal_intersect, Ideal};
pub use jacobian::is_smooth_jacobian;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_ideal, parse_poly};
pub use poly::Poly;

use thiserror::Error;

/// Failures surfaced by parsing and by the Hilbert and Jacobian entry points.
/// Groebner basis computation itself cannot fail; it always terminates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator {index} is not homogeneous")]
    NonHomogeneousGenerator { index: usize },
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("the zero polynomial has no Jacobian criterion")]
    ZeroPolynomial,
    #[error("Hilbert function did not stabilize at degrees up to {bound}; values {values:?}")]
    NoStabilization { bound: u32, values: Vec<i128> },
}

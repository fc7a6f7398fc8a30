//! Exact number types and matrix arithmetic shared by the verification crates.
//!
//! Everything here is arbitrary precision. There is no floating point on any
//! computation path; floats may appear only when a caller formats a report.

mod eisenstein;
mod eps;
mod error;
mod gaussian;
mod matrix;
mod rational;

pub use eisenstein::EisensteinInt;
pub use eps::EpsRational;
pub use error::ExactError;
pub use gaussian::{gauss_divides, GaussianInt};
pub use matrix::{conj_transpose, Matrix, Ring};
pub use rational::{parse_rational, rat, rat_int, Rational};

pub use num_bigint::BigInt;

//! Hermitian lattices over the Gaussian and Eisenstein integers, and the
//! finite matrix groups that act on them.
//!
//! The crate carries three pieces of fixed lattice data: a rank-6 Gaussian
//! Hermitian form of hyperbolic type (five eigenvalues of one sign, one of
//! the other), the rank-2 negative definite form induced on an invariant
//! homology piece together with the integer intersection pairing and
//! complex structure it is reconstructed from, and the three unitary
//! reflections generating the order-16 stabilizer of that rank-2 form.  On
//! top of the data sit exact operations: signatures by congruence
//! diagonalization over the rationals, unitarity and congruence-level
//! tests, finite group closure with element-order censuses, and order-3
//! complex reflections (triflections) of Eisenstein lattices.
//!
//! Nothing here is numeric: every verdict is an exact computation over
//! arbitrary precision integers and rationals.

mod forms;
mod group;
mod parse;
mod triflection;

pub use forms::{
    congruence_level, dm_form_h, doubled_real_form, intersection_skew, preserves_form, prym_form,
    prym_reflections, prym_rho, rational_inertia, signature, HermitianForm, RealBlock, SkewForm,
};
pub use group::{generate_group, GroupReport, UnitaryMatrix};
pub use parse::{gaussian_matrix_from_json, parse_gaussian};
pub use triflection::triflection;

use exact::{EisensteinInt, ExactError};
use thiserror::Error;

/// Errors for lattice, group, and triflection construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// Matrix is not equal to its own conjugate transpose.
    #[error("matrix is not Hermitian")]
    NotHermitian,
    /// Matrix is not equal to minus its own transpose.
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    /// Matrix does not preserve the form it was declared unitary for.
    #[error("matrix does not preserve the declared form")]
    NotUnitary,
    /// Mismatched or non-square shapes.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// Group closure grew past the requested cap; the generators have
    /// infinite order or the cap is too small.
    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded {
        /// The cap that was exceeded.
        cap: usize,
    },
    /// Triflection root whose self-pairing is not -3.
    #[error("triflection root must have self-pairing -3, got {found}")]
    RootNorm {
        /// The self-pairing the root actually has.
        found: EisensteinInt,
    },
    /// Triflection matrix with an entry outside the Eisenstein integers;
    /// the root is not admissible for the lattice.
    #[error("triflection matrix entry ({row},{col}) is not integral")]
    NonIntegralTriflection {
        /// Row of the offending entry.
        row: usize,
        /// Column of the offending entry.
        col: usize,
    },
    /// Unreadable scalar or matrix text.
    #[error("parse error: {0}")]
    Parse(String),
    /// Error propagated from the arithmetic kernel.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

//! Degenerations of cubic surfaces paired with their 27 lines.
//!
//! The objects here are pairs (S, cB): a cubic surface S in P^3 together
//! with the sum B of its 27 lines, counted with multiplicity, at a boundary
//! coefficient c slightly above 1/9.  The crate covers the Naruki family of
//! cubics and its degeneration to three planes, the line limits in that
//! degeneration, the stratified multiplicity patterns the limits produce,
//! and the stability checks (log canonicity and ampleness) that decide
//! which degenerate pairs are admissible.
//!
//! All arithmetic is exact.  Boundary coefficients are `EpsRational`
//! values, so every verdict of the form "for all sufficiently small
//! epsilon > 0" is a single lexicographic comparison.

mod cross_ratio;
mod flatness;
mod lines;
mod params;
mod stability;
mod stratum;
mod tritangents;

pub use cross_ratio::{cross_ratio, cross_ratio_in_chart};
pub use flatness::config_ideal;
pub use lines::{
    limit_lines, line_limit_table, naruki_point, LabeledLine, LimitLineRow, LimitLines, Line3,
    PlaneLines,
};
pub use params::{cayley_cubic, naruki_cubic, tritangent_limit, NarukiParams};
pub use stability::{
    check_stable_pair, lc_at_a1, lc_at_smooth_point, AmplenessReport, CensusReport, LcOutcome,
    LcPointReport, StablePairVerdict,
};
pub use stratum::{
    stratum_config, Branch, MeetingPoint, Node, PairConfig, PointKind, Stratum, Surface,
    WeightedLine,
};
pub use tritangents::{tritangent_partition, TritangentTriple};

use thiserror::Error;

/// Errors for cubic-pair construction and checking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    /// Tritangent name not among the symbolically supported ones.
    #[error("unknown tritangent name: {0:?}")]
    UnknownTritangent(String),
    /// Stratum name not recognised.
    #[error("unknown stratum name: {0:?}")]
    UnknownStratum(String),
    /// Parameters incompatible with the requested stratum.
    #[error("parameters violate the {stratum} dictionary: {detail}")]
    DictionaryViolation {
        /// Stratum whose dictionary was violated.
        stratum: String,
        /// Which condition failed.
        detail: String,
    },
    /// Parameters satisfy the stratum dictionary but degenerate the
    /// expected incidence pattern (extra concurrences or merges).
    #[error("parameters are not generic for the stratum: {0}")]
    NonGenericParams(String),
    /// Operation defined only for specific configurations.
    #[error("configuration {0:?} is not supported by this operation")]
    UnsupportedConfiguration(String),
    /// A line given by forms and points that disagree, or degenerate data.
    #[error("invalid line: {0}")]
    InvalidLine(String),
    /// Configuration data that contradicts itself.
    #[error("inconsistent configuration: {0}")]
    InconsistentConfig(String),
    /// Cross-ratio of a quadruple containing a repeated point.
    #[error("cross-ratio requires four distinct points; {0}")]
    CoincidentPoints(String),
    /// Cross-ratio of points not lying on one line.
    #[error("cross-ratio requires collinear points; {0}")]
    NonCollinearPoints(String),
}

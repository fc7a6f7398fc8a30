//! Weighted stability for genus-0 pointed nodal curves.
//!
//! A configuration is a tree of rational components with marked points
//! gathered into coincidence classes. Stability against a weight vector b
//! is two checks: every coincidence class has total weight at most 1, and
//! every component has node count plus marked weight strictly above 2.
//! Reduction toward smaller weights contracts the components that fail the
//! second check, and the codimension-one boundary census counts the two
//! kinds of stratum the uniform weights produce.

mod census;
mod config;
mod stability;

pub use census::{codim1_strata_census, uniform_weights};
pub use config::{parse_config, StableCurveConfig};
pub use stability::{is_weighted_stable, reduction_image, StabilityVerdict, Violation, WallReason};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HassettError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("component {0} declared twice")]
    DuplicateComponent(String),
    #[error("unknown component {0}")]
    UnknownComponent(String),
    #[error("node joins {0} to itself")]
    SelfLoop(String),
    #[error("dual graph is not a tree")]
    NotATree,
    #[error("mark {0} assigned twice")]
    DuplicateMark(usize),
    #[error("marks must be 1..=n with no gaps; {0} is missing")]
    MissingMark(usize),
    #[error("weight {0} lies outside the half-open interval (0,1]")]
    WeightOutOfRange(String),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("target weight exceeds source weight at mark {0}")]
    WeightOrder(usize),
    #[error("configuration is not stable at the source weights")]
    UnstableSource,
    #[error("reduction crosses a wall: {0}")]
    WallCrossed(WallReason),
    #[error("census requires an even point count, got {0}")]
    OddCensus(usize),
    #[error("census requires at least 6 points, got {0}")]
    CensusTooSmall(usize),
}

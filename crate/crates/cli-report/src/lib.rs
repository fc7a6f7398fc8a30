//! Check-suite runner behind the `geocheck` binary.
//!
//! Each suite re-runs one subsystem's headline computations as named
//! checks and collects them into a [`Report`]. Reports are deterministic:
//! the same suite with the same options produces the same checks in the
//! same order, with wall times segregated into their own block.

mod report;
mod runner;
mod suites;

pub use report::{render_json, render_markdown, Check, Report, Status};

use runner::CheckSpec;

/// Sampling seed used when none is given.
pub const DEFAULT_SEED: u64 = 17;

/// The runnable suites, in aggregation order. `run` also accepts "all".
pub const SUITES: [&str; 5] =
    ["dm-tables", "hassett-strata", "cubic-pairs", "hilbert-flatness", "lattice"];

/// Knobs shared by the suites. The default is the reproducible baseline:
/// eight marks, the built-in stabilization bound, seed [`DEFAULT_SEED`].
#[derive(Debug, Clone)]
pub struct Options {
    /// Marked points for the census checks; must be even and at least 6.
    pub n_marks: usize,
    /// Tabulation bound for the Hilbert stabilization, overriding the
    /// built-in choice.
    pub degree_bound: Option<u32>,
    /// Append the full list of per-point coefficient sums to the
    /// stability details.
    pub epsilon_report: bool,
    /// Seed for the randomized property samples.
    pub seed: u64,
    /// Worker threads for the check pool; the global pool decides when
    /// unset.
    pub jobs: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            n_marks: 8,
            degree_bound: None,
            epsilon_report: false,
            seed: DEFAULT_SEED,
            jobs: None,
        }
    }
}

/// Suite lookup or option validation failure; both are usage errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("unknown suite `{0}`; expected one of dm-tables, hassett-strata, cubic-pairs, hilbert-flatness, lattice, all")]
    UnknownSuite(String),
    #[error("invalid option: {0}")]
    InvalidOption(String),
}

fn suite_specs(suite: &str, options: &Options) -> Result<Vec<CheckSpec>, RunError> {
    match suite {
        "dm-tables" => Ok(suites::dm::specs(options)),
        "hassett-strata" => suites::hassett::specs(options),
        "cubic-pairs" => Ok(suites::cubic::specs(options)),
        "hilbert-flatness" => Ok(suites::hilbert::specs(options)),
        "lattice" => Ok(suites::lattice::specs(options)),
        "all" => {
            let mut specs = Vec::new();
            for name in SUITES {
                specs.extend(suite_specs(name, options)?);
            }
            Ok(specs)
        }
        other => Err(RunError::UnknownSuite(other.to_string())),
    }
}

/// Runs one suite (or "all") and assembles its report, checks sorted by
/// id. Errors are reserved for unknown suites and malformed options;
/// failed checks are report content.
pub fn run(suite: &str, options: &Options) -> Result<Report, RunError> {
    let specs = suite_specs(suite, options)?;
    let (checks, timing) = runner::execute(specs, options.jobs);
    Ok(Report { schema: "1", suite: suite.to_string(), checks, timing })
}

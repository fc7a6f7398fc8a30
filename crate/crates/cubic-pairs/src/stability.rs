//! Stability of a pair: log canonicity at every meeting point plus
//! ampleness of the log canonical divisor, all in exact epsilon
//! arithmetic.

use crate::stratum::{Branch, PairConfig, PointKind, Surface};
use crate::CubicError;
use exact::{rat, rat_int, EpsRational, Rational};
use num_traits::Zero;
use serde::Serialize;
use std::cmp::Ordering;

/// Result of a log canonicity check at one point.
#[derive(Debug, Clone)]
pub struct LcOutcome {
    /// Sum of the branch coefficients.
    pub sum: EpsRational,
    pub ok: bool,
    /// Discrepancy of the exceptional divisor of the blowup at the point.
    pub discrepancy: EpsRational,
}

fn assert_positive(coefficients: &[EpsRational]) {
    for c in coefficients {
        assert_eq!(
            c.cmp_rational(&Rational::zero()),
            Ordering::Greater,
            "branch coefficients must be positive"
        );
    }
}

/// Whether every coefficient is at most one and the total at most `bound`.
/// A branch coefficient above one already fails log canonicity on its own,
/// so the range check folds into the verdict rather than a precondition.
fn within(coefficients: &[EpsRational], sum: &EpsRational, bound: i64) -> bool {
    let one = rat_int(1);
    coefficients
        .iter()
        .all(|c| c.cmp_rational(&one) != Ordering::Greater)
        && sum.cmp_rational(&rat_int(bound)) != Ordering::Greater
}

/// Log canonicity of a plane curve germ of smooth branches with distinct
/// tangents at a smooth surface point: holds exactly when the coefficient
/// sum is at most 2.  The discrepancy of the blowup is 1 minus the sum.
pub fn lc_at_smooth_point(coefficients: &[EpsRational]) -> LcOutcome {
    assert_positive(coefficients);
    let sum = EpsRational::sum(coefficients);
    let ok = within(coefficients, &sum, 2);
    let discrepancy = &EpsRational::constant(rat_int(1)) - &sum;
    LcOutcome {
        sum,
        ok,
        discrepancy,
    }
}

/// Log canonicity at a node of the surface through which every branch is a
/// line: holds exactly when the coefficient sum is at most 2.  The minimal
/// resolution contracts a (-2)-curve meeting each branch once, with
/// discrepancy minus half the sum.
pub fn lc_at_a1(coefficients: &[EpsRational]) -> LcOutcome {
    assert_positive(coefficients);
    let sum = EpsRational::sum(coefficients);
    let ok = within(coefficients, &sum, 2);
    let discrepancy = sum.scale(&rat(-1, 2));
    LcOutcome {
        sum,
        ok,
        discrepancy,
    }
}

/// Multiplicity census of the configuration.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    /// Total multiplicity over all lines; 27 when correct.
    pub total: u32,
    /// Per-plane totals on the three-plane surface; 9 each when correct.
    pub per_plane: Option<[u32; 3]>,
    pub ok: bool,
}

/// Log canonicity verdict at one meeting point or point class.
#[derive(Debug, Clone, Serialize)]
pub struct LcPointReport {
    pub label: String,
    /// "node" or "smooth".
    pub kind: String,
    pub count: u32,
    /// Rendered coefficient sum, e.g. "4/3 + 12ε".
    pub sum: String,
    pub discrepancy: String,
    pub ok: bool,
    #[serde(skip)]
    pub sum_value: EpsRational,
    #[serde(skip)]
    pub discrepancy_value: EpsRational,
}

/// Positivity of the log canonical divisor against one component.
#[derive(Debug, Clone, Serialize)]
pub struct AmplenessReport {
    pub component: String,
    /// Rendered degree, e.g. "9ε".
    pub degree: String,
    pub positive: bool,
    #[serde(skip)]
    pub degree_value: EpsRational,
}

/// Full stability verdict for a pair.
#[derive(Debug, Clone, Serialize)]
pub struct StablePairVerdict {
    pub stratum: String,
    pub census: CensusReport,
    pub lc_points: Vec<LcPointReport>,
    /// Index into `lc_points` of the largest coefficient sum.
    pub worst: Option<usize>,
    pub ampleness: Vec<AmplenessReport>,
    pub stable: bool,
}

fn branch_coefficient(
    config: &PairConfig,
    branch: &Branch,
) -> Result<EpsRational, CubicError> {
    match branch {
        Branch::Line(label) => {
            let line = config
                .lines
                .iter()
                .find(|l| l.label == *label)
                .ok_or_else(|| {
                    CubicError::InconsistentConfig(format!(
                        "branch references unknown line {label}"
                    ))
                })?;
            Ok(config
                .coefficient
                .scale(&rat_int(i64::from(line.multiplicity))))
        }
        Branch::LineClass { multiplicity } => Ok(config
            .coefficient
            .scale(&rat_int(i64::from(*multiplicity)))),
        Branch::Conductor(_) => {
            if matches!(config.surface, Surface::ThreePlanes) {
                Ok(EpsRational::constant(rat_int(1)))
            } else {
                Err(CubicError::InconsistentConfig(
                    "conductor branch on an irreducible surface".to_string(),
                ))
            }
        }
    }
}

/// Stability of the pair: the multiplicity census, log canonicity at
/// every listed point, and positivity of the log canonical divisor on
/// every component.  The verdict carries each subcheck; failed checks
/// yield an unstable verdict rather than an error.  Errors are reserved
/// for configurations that are internally inconsistent.
pub fn check_stable_pair(config: &PairConfig) -> Result<StablePairVerdict, CubicError> {
    let total: u32 = config.lines.iter().map(|l| l.multiplicity).sum();
    let per_plane = match config.surface {
        Surface::ThreePlanes => {
            let mut sums = [0u32; 3];
            for line in &config.lines {
                let plane = line.plane.ok_or_else(|| {
                    CubicError::InconsistentConfig(format!(
                        "line {} on the three-plane surface has no plane",
                        line.label
                    ))
                })?;
                sums[plane] += line.multiplicity;
            }
            Some(sums)
        }
        Surface::IrreducibleCubic { .. } => None,
    };
    let census = CensusReport {
        total,
        per_plane,
        ok: total == 27 && per_plane.map_or(true, |sums| sums == [9, 9, 9]),
    };

    let mut lc_points = Vec::with_capacity(config.points.len());
    for point in &config.points {
        let coefficients: Vec<EpsRational> = point
            .branches
            .iter()
            .map(|b| branch_coefficient(config, b))
            .collect::<Result<_, _>>()?;
        let outcome = match point.kind {
            PointKind::Node => {
                if matches!(config.surface, Surface::ThreePlanes) {
                    return Err(CubicError::InconsistentConfig(format!(
                        "point {} marked as a node on the three-plane surface",
                        point.label
                    )));
                }
                lc_at_a1(&coefficients)
            }
            PointKind::SmoothPoint => lc_at_smooth_point(&coefficients),
        };
        lc_points.push(LcPointReport {
            label: point.label.clone(),
            kind: match point.kind {
                PointKind::Node => "node".to_string(),
                PointKind::SmoothPoint => "smooth".to_string(),
            },
            count: point.count,
            sum: outcome.sum.to_string(),
            discrepancy: outcome.discrepancy.to_string(),
            ok: outcome.ok,
            sum_value: outcome.sum,
            discrepancy_value: outcome.discrepancy,
        });
    }
    let worst = lc_points
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.sum_value.cmp(&b.sum_value))
        .map(|(i, _)| i);

    let mut ampleness = Vec::new();
    match &config.surface {
        Surface::IrreducibleCubic { .. } => {
            // K + cB restricted to a hyperplane section: the lines sum to
            // total/3 hyperplane classes, K to minus one.
            let degree = &config.coefficient.scale(&rat(i64::from(total), 3))
                - &EpsRational::constant(rat_int(1));
            ampleness.push(AmplenessReport {
                component: "hyperplane class".to_string(),
                degree: degree.to_string(),
                positive: degree.cmp_rational(&Rational::zero()) == Ordering::Greater,
                degree_value: degree,
            });
        }
        Surface::ThreePlanes => {
            // Per plane: canonical class -3, conductor 2, plus the lines.
            for (plane, sum) in per_plane.unwrap().into_iter().enumerate() {
                let degree = &config.coefficient.scale(&rat_int(i64::from(sum)))
                    - &EpsRational::constant(rat_int(1));
                ampleness.push(AmplenessReport {
                    component: format!("plane H{plane}"),
                    degree: degree.to_string(),
                    positive: degree.cmp_rational(&Rational::zero()) == Ordering::Greater,
                    degree_value: degree,
                });
            }
        }
    }

    let stable = census.ok
        && lc_points.iter().all(|p| p.ok)
        && ampleness.iter().all(|a| a.positive);
    Ok(StablePairVerdict {
        stratum: config.stratum.name().to_string(),
        census,
        lc_points,
        worst,
        ampleness,
        stable,
    })
}

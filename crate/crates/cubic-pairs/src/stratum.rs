//! Boundary strata of the family and their line configurations.

use crate::lines::{
    limit_lines, line_limit_table, normalize4, point_string, proj_eq, solve_point, Line3,
};
use crate::params::{cayley_cubic, naruki_cubic, NarukiParams};
use crate::CubicError;
use exact::{rat, rat_int, EpsRational, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// The nine stratum types of the compactified family, by singularities of
/// the surface: up to four nodes on an irreducible cubic, and the
/// three-plane degeneration N, possibly combined with up to three nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stratum {
    Smooth,
    A1,
    A1x2,
    A1x3,
    A1x4,
    N,
    A1N,
    A1x2N,
    A1x3N,
}

impl Stratum {
    /// All nine strata, from the open one to the deepest degenerations.
    pub fn all() -> [Stratum; 9] {
        [
            Stratum::Smooth,
            Stratum::A1,
            Stratum::A1x2,
            Stratum::A1x3,
            Stratum::A1x4,
            Stratum::N,
            Stratum::A1N,
            Stratum::A1x2N,
            Stratum::A1x3N,
        ]
    }

    /// Whether the surface on this stratum is the three-plane degeneration.
    pub fn is_three_planes(self) -> bool {
        matches!(
            self,
            Stratum::N | Stratum::A1N | Stratum::A1x2N | Stratum::A1x3N
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Stratum::Smooth => "Smooth",
            Stratum::A1 => "A1",
            Stratum::A1x2 => "A1^2",
            Stratum::A1x3 => "A1^3",
            Stratum::A1x4 => "A1^4",
            Stratum::N => "N",
            Stratum::A1N => "A1-N",
            Stratum::A1x2N => "A1^2-N",
            Stratum::A1x3N => "A1^3-N",
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stratum {
    type Err = CubicError;

    fn from_str(s: &str) -> Result<Stratum, CubicError> {
        Stratum::all()
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CubicError::UnknownStratum(s.to_string()))
    }
}

/// A node of the surface.  Coordinates are carried when the stratum has a
/// rational model; the intermediate nodal strata are combinatorial.
#[derive(Debug, Clone)]
pub struct Node {
    pub label: String,
    pub point: Option<[Rational; 4]>,
}

/// The surface underlying a pair.
#[derive(Debug, Clone)]
pub enum Surface {
    /// Normal cubic with the listed nodes and no other singularities.
    IrreducibleCubic {
        equation: Option<polyring::Poly>,
        nodes: Vec<Node>,
    },
    /// The degenerate surface x0*x1*x2 = 0.
    ThreePlanes,
}

impl Surface {
    /// Defining cubic, when one is carried.
    pub fn equation(&self) -> Option<polyring::Poly> {
        match self {
            Surface::IrreducibleCubic { equation, .. } => equation.clone(),
            Surface::ThreePlanes => {
                let x = |i| polyring::Poly::var(4, i);
                Some(&(&x(0) * &x(1)) * &x(2))
            }
        }
    }

    pub fn nodes(&self) -> &[Node] {
        match self {
            Surface::IrreducibleCubic { nodes, .. } => nodes,
            Surface::ThreePlanes => &[],
        }
    }
}

/// One of the 27 line limits, with its multiplicity in the divisor.
#[derive(Debug, Clone)]
pub struct WeightedLine {
    pub label: String,
    /// 1, 2, or 4.
    pub multiplicity: u32,
    /// Geometric model, when the stratum has one.
    pub line: Option<Line3>,
    /// Containing plane of the three-plane surface, when applicable.
    pub plane: Option<usize>,
    /// Table labels of the lines that collapsed onto this one.
    pub merged_from: Vec<String>,
}

/// A branch through a meeting point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Branch {
    /// A weighted line, by label; its coefficient is multiplicity times
    /// the pair coefficient.
    Line(String),
    /// A conductor component, by label; coefficient 1.
    Conductor(String),
    /// An unnamed line of the given multiplicity, for point classes known
    /// only combinatorially.
    LineClass { multiplicity: u32 },
}

/// Where a meeting point sits on the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    SmoothPoint,
    Node,
}

/// A point where at least two branches of the divisor (or conductor) meet,
/// or a class of `count` such points with identical branch profiles.
#[derive(Debug, Clone)]
pub struct MeetingPoint {
    pub label: String,
    pub kind: PointKind,
    /// Plane of the three-plane surface the check runs on, if any.
    pub plane: Option<usize>,
    /// Coordinates, when computed from a geometric model.
    pub point: Option<[Rational; 4]>,
    pub branches: Vec<Branch>,
    /// Number of points sharing this profile.
    pub count: u32,
}

/// A pair: surface, weighted lines, and the boundary coefficient attached
/// to each line multiplicity unit.
#[derive(Debug, Clone)]
pub struct PairConfig {
    pub stratum: Stratum,
    pub surface: Surface,
    /// Coefficient of a multiplicity-one line, 1/9 + epsilon.
    pub coefficient: EpsRational,
    pub lines: Vec<WeightedLine>,
    /// Every point where the log canonicity of the pair is checked.
    pub points: Vec<MeetingPoint>,
}

fn default_coefficient() -> EpsRational {
    EpsRational::new(rat(1, 9), rat_int(1))
}

/// Line configuration of the pair over a stratum.
///
/// For the three-plane strata the 27 limit lines are specialized to the
/// parameter point, coincident lines are merged into multiplicities, and
/// every meeting point is computed by intersecting the merged lines and
/// the conductor pairwise.  For the irreducible strata the multiplicity
/// pattern and node incidences are carried as data; the four-nodal member
/// additionally has a full rational model whose meeting points are
/// computed the same way.
///
/// Errors if the parameters violate the dictionary of the stratum, or
/// degenerate the expected incidence pattern.
pub fn stratum_config(stratum: Stratum, params: &NarukiParams) -> Result<PairConfig, CubicError> {
    match stratum {
        Stratum::Smooth => smooth_config(params),
        Stratum::A1 | Stratum::A1x2 | Stratum::A1x3 => Ok(nodal_config(stratum)),
        Stratum::A1x4 => Ok(cayley_config()),
        _ => three_planes_config(stratum, params),
    }
}

fn line_class(multiplicity: u32) -> Branch {
    Branch::LineClass { multiplicity }
}

/// Smooth member: 27 reduced lines crossing pairwise at 135 points.
fn smooth_config(params: &NarukiParams) -> Result<PairConfig, CubicError> {
    let equation = naruki_cubic(params);
    let smooth = polyring::is_smooth_jacobian(&equation)
        .expect("the family equation is a nonzero homogeneous cubic");
    if !smooth {
        return Err(CubicError::DictionaryViolation {
            stratum: Stratum::Smooth.name().to_string(),
            detail: "the surface at these parameters is singular".to_string(),
        });
    }
    let lines = line_limit_table()
        .iter()
        .map(|row| WeightedLine {
            label: row.cayley.to_string(),
            multiplicity: 1,
            line: None,
            plane: None,
            merged_from: Vec::new(),
        })
        .collect();
    let points = vec![MeetingPoint {
        label: "pairwise crossing of two lines".to_string(),
        kind: PointKind::SmoothPoint,
        plane: None,
        point: None,
        branches: vec![line_class(1), line_class(1)],
        count: 135,
    }];
    Ok(PairConfig {
        stratum: Stratum::Smooth,
        surface: Surface::IrreducibleCubic {
            equation: Some(equation),
            nodes: Vec::new(),
        },
        coefficient: default_coefficient(),
        lines,
        points,
    })
}

/// Multiplicity patterns of the one-, two-, and three-nodal strata: lines
/// through one node are double, through two nodes quadruple, and each node
/// sees total branch multiplicity twelve.  The patterns are carried as
/// data; no rational model is attached.
fn nodal_config(stratum: Stratum) -> PairConfig {
    // (label, multiplicity, nodes the line passes through)
    let mut lines: Vec<(String, u32, Vec<usize>)> = Vec::new();
    let node_count;
    match stratum {
        Stratum::A1 => {
            node_count = 1;
            for i in 1..=6 {
                lines.push((format!("d{i}"), 2, vec![0]));
            }
            for i in 1..=15 {
                lines.push((format!("s{i}"), 1, vec![]));
            }
        }
        Stratum::A1x2 => {
            node_count = 2;
            lines.push(("q12".to_string(), 4, vec![0, 1]));
            for i in 1..=8 {
                lines.push((format!("d{i}"), 2, vec![(i - 1) / 4]));
            }
            for i in 1..=7 {
                lines.push((format!("s{i}"), 1, vec![]));
            }
        }
        Stratum::A1x3 => {
            node_count = 3;
            lines.push(("q12".to_string(), 4, vec![0, 1]));
            lines.push(("q13".to_string(), 4, vec![0, 2]));
            lines.push(("q23".to_string(), 4, vec![1, 2]));
            for i in 1..=6 {
                lines.push((format!("d{i}"), 2, vec![(i - 1) / 2]));
            }
            for i in 1..=3 {
                lines.push((format!("s{i}"), 1, vec![]));
            }
        }
        _ => unreachable!("nodal_config covers A1, A1^2, A1^3"),
    }

    let nodes: Vec<Node> = (0..node_count)
        .map(|i| Node {
            label: format!("n{}", i + 1),
            point: None,
        })
        .collect();
    let mut points: Vec<MeetingPoint> = (0..node_count)
        .map(|i| MeetingPoint {
            label: format!("n{}", i + 1),
            kind: PointKind::Node,
            plane: None,
            point: None,
            branches: lines
                .iter()
                .filter(|(_, _, through)| through.contains(&i))
                .map(|(label, _, _)| Branch::Line(label.clone()))
                .collect(),
            count: 1,
        })
        .collect();
    let max_mult = lines.iter().map(|(_, m, _)| *m).max().unwrap();
    points.push(MeetingPoint {
        label: format!("smooth-point bound: three lines at multiplicity {max_mult}"),
        kind: PointKind::SmoothPoint,
        plane: None,
        point: None,
        branches: vec![line_class(max_mult); 3],
        count: 1,
    });

    PairConfig {
        stratum,
        surface: Surface::IrreducibleCubic {
            equation: None,
            nodes,
        },
        coefficient: default_coefficient(),
        lines: lines
            .into_iter()
            .map(|(label, multiplicity, _)| WeightedLine {
                label,
                multiplicity,
                line: None,
                plane: None,
                merged_from: Vec::new(),
            })
            .collect(),
        points,
    }
}

/// Four-nodal member: the surface x0*x1*x2 + x0*x1*x3 + x0*x2*x3 +
/// x1*x2*x3 with nodes at the coordinate points.  The six quadruple lines
/// are the edges x_i = x_j = 0 and the three reduced lines are cut by the
/// plane x0 + x1 + x2 + x3 = 0.
fn cayley_config() -> PairConfig {
    let z = Rational::zero;
    let o = || rat_int(1);
    let neg_one = || -rat_int(1);
    let unit = |i: usize| {
        let mut v = [z(), z(), z(), z()];
        v[i] = o();
        v
    };

    let nodes: Vec<Node> = (0..4)
        .map(|i| Node {
            label: format!("P{i}"),
            point: Some(unit(i)),
        })
        .collect();

    let mut named: Vec<(String, u32, Line3)> = Vec::new();
    for i in 0..4usize {
        for j in i + 1..4 {
            let rest: Vec<usize> = (0..4).filter(|k| *k != i && *k != j).collect();
            let line = Line3::new(
                [unit(rest[0]), unit(rest[1])],
                [unit(i), unit(j)],
            )
            .expect("coordinate edges are valid lines");
            named.push((format!("E{i}{j}"), 4, line));
        }
    }
    let pair_form = |i: usize, j: usize| {
        let mut v = [z(), z(), z(), z()];
        v[i] = o();
        v[j] = o();
        v
    };
    let diag = |k: usize, i: usize, j: usize, p: [Rational; 4], q: [Rational; 4]| {
        let line = Line3::new([pair_form(0, k), pair_form(i, j)], [p, q])
            .expect("diagonal lines are valid");
        (format!("D{k}"), 1, line)
    };
    named.push(diag(1, 2, 3, [o(), neg_one(), z(), z()], [z(), z(), o(), neg_one()]));
    named.push(diag(2, 1, 3, [o(), z(), neg_one(), z()], [z(), o(), z(), neg_one()]));
    named.push(diag(3, 1, 2, [o(), z(), z(), neg_one()], [z(), o(), neg_one(), z()]));

    let node_coords: Vec<([Rational; 4], String)> = nodes
        .iter()
        .map(|n| (n.point.clone().unwrap(), n.label.clone()))
        .collect();
    let curves: Vec<CurveData> = named
        .iter()
        .map(|(label, multiplicity, line)| CurveData {
            label: label.clone(),
            conductor: false,
            multiplicity: *multiplicity,
            line: line.clone(),
        })
        .collect();
    let points = computed_meeting_points(&curves, None, &node_coords);

    PairConfig {
        stratum: Stratum::A1x4,
        surface: Surface::IrreducibleCubic {
            equation: Some(cayley_cubic()),
            nodes,
        },
        coefficient: default_coefficient(),
        lines: named
            .into_iter()
            .map(|(label, multiplicity, line)| WeightedLine {
                label,
                multiplicity,
                line: Some(line),
                plane: None,
                merged_from: Vec::new(),
            })
            .collect(),
        points,
    }
}

struct CurveData {
    label: String,
    conductor: bool,
    multiplicity: u32,
    line: Line3,
}

/// All pairwise intersection points of the curves, grouped, with branches
/// recomputed by membership so concurrences beyond the generating pair are
/// caught.  Points coinciding with a listed node are marked as such.
fn computed_meeting_points(
    curves: &[CurveData],
    plane: Option<usize>,
    nodes: &[([Rational; 4], String)],
) -> Vec<MeetingPoint> {
    let mut found: BTreeMap<String, [Rational; 4]> = BTreeMap::new();
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let fi = curves[i].line.forms().expect("computed curves carry forms");
            let fj = curves[j].line.forms().expect("computed curves carry forms");
            let stacked = [
                fi[0].clone(),
                fi[1].clone(),
                fj[0].clone(),
                fj[1].clone(),
            ];
            if let Some(p) = solve_point(&stacked) {
                let canonical = normalize4(&p);
                found.insert(point_string(&canonical), canonical);
            }
        }
    }
    found
        .into_iter()
        .map(|(key, p)| {
            let branches: Vec<Branch> = curves
                .iter()
                .filter(|c| c.line.contains(&p))
                .map(|c| {
                    if c.conductor {
                        Branch::Conductor(c.label.clone())
                    } else {
                        Branch::Line(c.label.clone())
                    }
                })
                .collect();
            let node = nodes.iter().find(|(coords, _)| proj_eq(coords, &p));
            let label = match (&node, plane) {
                (Some((_, name)), _) => format!("{name} {key}"),
                (None, Some(a)) => format!("H{a} {key}"),
                (None, None) => key,
            };
            MeetingPoint {
                label,
                kind: if node.is_some() {
                    PointKind::Node
                } else {
                    PointKind::SmoothPoint
                },
                plane,
                point: Some(p),
                branches,
                count: 1,
            }
        })
        .collect()
}

/// Incidence shape of one plane of a three-plane configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PlaneShape {
    /// Nine distinct reduced lines.
    Generic9,
    /// Three double lines and three reduced ones.
    Merged3,
    /// One quadruple line, two doubles, one reduced.
    Quad4,
}

impl PlaneShape {
    fn census(self) -> Vec<u32> {
        match self {
            PlaneShape::Generic9 => vec![1; 9],
            PlaneShape::Merged3 => vec![2, 2, 2, 1, 1, 1],
            PlaneShape::Quad4 => vec![4, 2, 2, 1],
        }
    }

    /// Expected signatures of the points where at least three branches
    /// meet: conductor count and descending line multiplicities.
    fn multiple_points(self) -> Vec<(u32, Vec<u32>)> {
        let mut profile = match self {
            PlaneShape::Generic9 => vec![(1, vec![1, 1, 1]); 6],
            PlaneShape::Merged3 => vec![
                (1, vec![2, 2, 2]),
                (1, vec![1, 1, 1]),
                (1, vec![2, 1]),
                (1, vec![2, 1]),
                (1, vec![2, 1]),
            ],
            PlaneShape::Quad4 => vec![
                (1, vec![4, 2]),
                (1, vec![4, 2]),
                (1, vec![2, 1]),
                (1, vec![2, 1]),
            ],
        };
        profile.sort();
        profile
    }
}

fn plane_shapes(stratum: Stratum) -> [PlaneShape; 3] {
    match stratum {
        Stratum::N => [PlaneShape::Generic9; 3],
        Stratum::A1N => [PlaneShape::Generic9, PlaneShape::Merged3, PlaneShape::Merged3],
        Stratum::A1x2N => [PlaneShape::Merged3, PlaneShape::Merged3, PlaneShape::Quad4],
        Stratum::A1x3N => [PlaneShape::Quad4; 3],
        _ => unreachable!("only three-plane strata have plane shapes"),
    }
}

/// Dictionary of the three-plane strata: rho = 0, the listed parameters
/// vanish, and the remaining ones avoid 0 and 1.
fn check_dictionary(stratum: Stratum, params: &NarukiParams) -> Result<(), CubicError> {
    let violation = |detail: String| CubicError::DictionaryViolation {
        stratum: stratum.name().to_string(),
        detail,
    };
    if !params.rho.is_zero() {
        return Err(violation("rho must be 0 on a three-plane stratum".into()));
    }
    let zero_count = match stratum {
        Stratum::N => 0,
        Stratum::A1N => 1,
        Stratum::A1x2N => 2,
        Stratum::A1x3N => 3,
        _ => unreachable!(),
    };
    let values = [
        ("lambda", &params.lambda),
        ("mu", &params.mu),
        ("nu", &params.nu),
    ];
    for (name, value) in values.iter().take(zero_count) {
        if !value.is_zero() {
            return Err(violation(format!("{name} must be 0")));
        }
    }
    for (name, value) in values.iter().skip(zero_count) {
        if value.is_zero() || value.is_one() {
            return Err(violation(format!("{name} must avoid 0 and 1")));
        }
    }
    Ok(())
}

/// Configuration over a three-plane stratum, computed from the limit lines
/// at the parameter point.
fn three_planes_config(
    stratum: Stratum,
    params: &NarukiParams,
) -> Result<PairConfig, CubicError> {
    check_dictionary(stratum, params)?;
    let table = limit_lines(&params.lambda, &params.mu, &params.nu);
    let shapes = plane_shapes(stratum);

    let mut lines: Vec<WeightedLine> = Vec::new();
    let mut points: Vec<MeetingPoint> = Vec::new();
    for plane in 0..3usize {
        // Merge coincident rows: same second defining form up to scale.
        let mut classes: Vec<([Rational; 4], Vec<String>)> = Vec::new();
        for row in &table.planes[plane].lines {
            let form = normalize4(&row.line.forms().unwrap()[1]);
            match classes.iter_mut().find(|(f, _)| *f == form) {
                Some((_, members)) => members.push(row.label.clone()),
                None => classes.push((form, vec![row.label.clone()])),
            }
        }

        let mut merged: Vec<WeightedLine> = Vec::new();
        for (form, members) in &classes {
            let multiplicity = members.len() as u32;
            if ![1, 2, 4].contains(&multiplicity) {
                return Err(CubicError::NonGenericParams(format!(
                    "H{plane} carries a line of multiplicity {multiplicity}"
                )));
            }
            let mut plane_form = [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ];
            plane_form[plane] = rat_int(1);
            let line = Line3::from_forms(plane_form, form.clone())
                .expect("plane form and table form are independent");
            merged.push(WeightedLine {
                label: members.join("="),
                multiplicity,
                line: Some(line),
                plane: Some(plane),
                merged_from: members.clone(),
            });
        }

        let mut census: Vec<u32> = merged.iter().map(|l| l.multiplicity).collect();
        census.sort_unstable_by(|a, b| b.cmp(a));
        if census != shapes[plane].census() {
            return Err(CubicError::NonGenericParams(format!(
                "H{plane} multiplicities {census:?} differ from the expected {:?}",
                shapes[plane].census()
            )));
        }

        // Conductor components of the plane: its intersections with the
        // other two planes.
        let mut curves: Vec<CurveData> = merged
            .iter()
            .map(|l| CurveData {
                label: l.label.clone(),
                conductor: false,
                multiplicity: l.multiplicity,
                line: l.line.clone().unwrap(),
            })
            .collect();
        for other in (0..3).filter(|o| *o != plane) {
            let mut f = [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ];
            f[plane] = rat_int(1);
            let mut g = f.clone();
            g[plane] = Rational::zero();
            g[other] = rat_int(1);
            let (a, b) = (plane.min(other), plane.max(other));
            curves.push(CurveData {
                label: format!("H{a}{b}"),
                conductor: true,
                multiplicity: 1,
                line: Line3::from_forms(f, g).expect("distinct coordinate forms"),
            });
        }

        let plane_points = computed_meeting_points(&curves, Some(plane), &[]);

        // The arrangement must degenerate exactly as the stratum predicts:
        // compare the points with at least three branches against the
        // expected profile.
        let mut profile: Vec<(u32, Vec<u32>)> = plane_points
            .iter()
            .filter(|p| p.branches.len() >= 3)
            .map(|p| {
                let conductors = p
                    .branches
                    .iter()
                    .filter(|b| matches!(b, Branch::Conductor(_)))
                    .count() as u32;
                let mut mults: Vec<u32> = p
                    .branches
                    .iter()
                    .filter_map(|b| match b {
                        Branch::Line(label) => Some(
                            curves
                                .iter()
                                .find(|c| c.label == *label)
                                .expect("branch label from the curve list")
                                .multiplicity,
                        ),
                        _ => None,
                    })
                    .collect();
                mults.sort_unstable_by(|a, b| b.cmp(a));
                (conductors, mults)
            })
            .collect();
        profile.sort();
        if profile != shapes[plane].multiple_points() {
            return Err(CubicError::NonGenericParams(format!(
                "H{plane} multiple points {profile:?} differ from the expected {:?}",
                shapes[plane].multiple_points()
            )));
        }

        lines.extend(merged);
        points.extend(plane_points);
    }

    Ok(PairConfig {
        stratum,
        surface: Surface::ThreePlanes,
        coefficient: default_coefficient(),
        lines,
        points,
    })
}

//! Lines in P^3 and the limits of the 27 lines on the three-plane
//! degeneration x0*x1*x2 = 0.

use crate::params::NarukiParams;
use crate::CubicError;
use exact::{rat_int, Rational};
use num_traits::Zero;

/// Value of the linear form f at the point p.
pub(crate) fn eval_form(f: &[Rational; 4], p: &[Rational; 4]) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..4 {
        acc += &f[i] * &p[i];
    }
    acc
}

pub(crate) fn is_zero4(v: &[Rational; 4]) -> bool {
    v.iter().all(Rational::is_zero)
}

/// Canonical representative of a nonzero 4-vector up to scale: the first
/// nonzero entry is rescaled to 1.
pub(crate) fn normalize4(v: &[Rational; 4]) -> [Rational; 4] {
    let pivot = v
        .iter()
        .find(|c| !c.is_zero())
        .expect("cannot normalize the zero vector");
    let mut out = v.clone();
    for c in out.iter_mut() {
        *c = &*c / pivot;
    }
    out
}

/// Projective equality of nonzero 4-vectors.
pub(crate) fn proj_eq(a: &[Rational; 4], b: &[Rational; 4]) -> bool {
    normalize4(a) == normalize4(b)
}

/// Renders a point as "[p0:p1:p2:p3]".
pub(crate) fn point_string(p: &[Rational; 4]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(":"))
}

/// Rank of a small list of 4-vectors, by Gaussian elimination.
pub(crate) fn rank4(rows: &[[Rational; 4]]) -> usize {
    let mut mat: Vec<[Rational; 4]> = rows.to_vec();
    let mut rank = 0;
    for col in 0..4 {
        let pivot = (rank..mat.len()).find(|&r| !mat[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        mat.swap(rank, pivot);
        let head = mat[rank][col].clone();
        for r in rank + 1..mat.len() {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &head;
            for c in col..4 {
                let delta = &factor * &mat[rank][c];
                mat[r][c] = &mat[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// Unique projective solution of the given linear forms, if the solution
/// space is one-dimensional.
pub(crate) fn solve_point(forms: &[[Rational; 4]]) -> Option<[Rational; 4]> {
    // Row-reduce, remembering pivot columns.
    let mut mat: Vec<[Rational; 4]> = forms.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        let pivot = (row..mat.len()).find(|&r| !mat[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        mat.swap(row, pivot);
        let head = mat[row][col].clone();
        for c in mat[row].iter_mut() {
            *c = &*c / &head;
        }
        for r in 0..mat.len() {
            if r == row || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for c in 0..4 {
                let delta = &factor * &mat[row][c];
                mat[r][c] = &mat[r][c] - &delta;
            }
        }
        pivots.push(col);
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    if pivots.len() != 3 {
        return None;
    }
    let free = (0..4).find(|c| !pivots.contains(c)).expect("one free column");
    let mut point = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    point[free] = rat_int(1);
    for (r, &col) in pivots.iter().enumerate() {
        point[col] = -mat[r][free].clone();
    }
    Some(point)
}

/// A line in P^3, carried as two independent linear forms cutting it out,
/// two distinct points spanning it, or both.  When both representations
/// are present they are cross-checked at construction: each spanning point
/// annihilates each form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line3 {
    forms: Option<[[Rational; 4]; 2]>,
    points: Option<[[Rational; 4]; 2]>,
}

impl Line3 {
    /// Line cut out by two independent linear forms.
    pub fn from_forms(f: [Rational; 4], g: [Rational; 4]) -> Result<Line3, CubicError> {
        if is_zero4(&f) || is_zero4(&g) {
            return Err(CubicError::InvalidLine("zero linear form".into()));
        }
        if proj_eq(&f, &g) {
            return Err(CubicError::InvalidLine(
                "the two forms are proportional".into(),
            ));
        }
        Ok(Line3 {
            forms: Some([f, g]),
            points: None,
        })
    }

    /// Line spanned by two distinct points.
    pub fn from_points(p: [Rational; 4], q: [Rational; 4]) -> Result<Line3, CubicError> {
        if is_zero4(&p) || is_zero4(&q) {
            return Err(CubicError::InvalidLine("zero point vector".into()));
        }
        if proj_eq(&p, &q) {
            return Err(CubicError::InvalidLine(
                format!("coincident spanning points {}", point_string(&p)),
            ));
        }
        Ok(Line3 {
            forms: None,
            points: Some([p, q]),
        })
    }

    /// Line with both representations, cross-validated.
    pub fn new(
        forms: [[Rational; 4]; 2],
        points: [[Rational; 4]; 2],
    ) -> Result<Line3, CubicError> {
        let with_forms = Line3::from_forms(forms[0].clone(), forms[1].clone())?;
        Line3::from_points(points[0].clone(), points[1].clone())?;
        for p in &points {
            for f in &forms {
                if !eval_form(f, p).is_zero() {
                    return Err(CubicError::InvalidLine(format!(
                        "spanning point {} does not lie on a defining form",
                        point_string(p)
                    )));
                }
            }
        }
        Ok(Line3 {
            forms: with_forms.forms,
            points: Some(points),
        })
    }

    /// Defining forms, if carried.
    pub fn forms(&self) -> Option<&[[Rational; 4]; 2]> {
        self.forms.as_ref()
    }

    /// Spanning points, if carried.
    pub fn spanning_points(&self) -> Option<&[[Rational; 4]; 2]> {
        self.points.as_ref()
    }

    /// Whether the point lies on the line.
    pub fn contains(&self, p: &[Rational; 4]) -> bool {
        if is_zero4(p) {
            return false;
        }
        if let Some(forms) = &self.forms {
            return forms.iter().all(|f| eval_form(f, p).is_zero());
        }
        let span = self.points.as_ref().expect("line carries a representation");
        rank4(&[span[0].clone(), span[1].clone(), p.clone()]) <= 2
    }
}

/// The nine limit points of the 27 lines for rho -> 0: A1..A3 on the axis
/// x1 = x2 = 0, B1..B3 on x0 = x2 = 0, C1..C3 on x0 = x1 = 0.
pub fn naruki_point(name: &str, params: &NarukiParams) -> Option<[Rational; 4]> {
    let z = Rational::zero();
    let o = rat_int(1);
    let p = match name {
        "A1" => [o.clone(), z.clone(), z.clone(), z.clone()],
        "A2" => [o.clone(), z.clone(), z.clone(), o.clone()],
        "A3" => [o.clone(), z.clone(), z.clone(), params.lambda.clone()],
        "B1" => [z.clone(), o.clone(), z.clone(), z.clone()],
        "B2" => [z.clone(), o.clone(), z.clone(), o.clone()],
        "B3" => [z.clone(), o.clone(), z.clone(), params.mu.clone()],
        "C1" => [z.clone(), z.clone(), o.clone(), z.clone()],
        "C2" => [z.clone(), z.clone(), o.clone(), o.clone()],
        "C3" => [z.clone(), z.clone(), o.clone(), params.nu.clone()],
        _ => return None,
    };
    Some(p)
}

/// One of the 27 limit lines, named by its two spanning limit points.
#[derive(Debug, Clone)]
pub struct LabeledLine {
    /// Index of the plane H_plane = {x_plane = 0} containing the line.
    pub plane: usize,
    /// Concatenated endpoint names, e.g. "B1C1".
    pub label: String,
    /// The two endpoint names, e.g. ("B1", "C1").
    pub endpoints: (String, String),
    /// The line, with forms {x_plane, second form} and the endpoints as
    /// spanning points.
    pub line: Line3,
}

/// The nine limit lines on one plane of x0*x1*x2 = 0.
#[derive(Debug, Clone)]
pub struct PlaneLines {
    /// Index of the plane {x_plane = 0}.
    pub plane: usize,
    /// The nine lines, in table order.
    pub lines: Vec<LabeledLine>,
}

/// The 27 limit lines grouped by the plane containing them.
#[derive(Debug, Clone)]
pub struct LimitLines {
    pub planes: [PlaneLines; 3],
}

impl LimitLines {
    /// All 27 lines in plane-major table order.
    pub fn all(&self) -> impl Iterator<Item = &LabeledLine> {
        self.planes.iter().flat_map(|p| p.lines.iter())
    }

    /// Lookup by endpoint label such as "B2C3".
    pub fn by_label(&self, label: &str) -> Option<&LabeledLine> {
        self.all().find(|l| l.label == label)
    }
}

/// Limits of the 27 lines for rho -> 0 at the given (lambda, mu, nu).
///
/// H0 = {x0 = 0} carries the lines B_jC_k, H1 = {x1 = 0} the lines A_iC_k,
/// and H2 = {x2 = 0} the lines A_iB_j.  Within its plane, each line is cut
/// out by the listed second form; the spanning points are the limit points
/// of `naruki_point`.  Repetitions among the forms (for special parameter
/// values) are preserved: exactly 9 rows are produced per plane.
pub fn limit_lines(lambda: &Rational, mu: &Rational, nu: &Rational) -> LimitLines {
    let params = NarukiParams::new(
        lambda.clone(),
        mu.clone(),
        nu.clone(),
        Rational::zero(),
    );
    let z = Rational::zero;
    let o = || rat_int(1);
    let neg = |x: &Rational| -x;

    // Second defining forms, in table order.  Coefficients of [x0,x1,x2,x3].
    let h0: [(&str, [Rational; 4]); 9] = [
        ("B1C1", [z(), z(), z(), o()]),
        ("B1C2", [z(), z(), neg(&o()), o()]),
        ("B1C3", [z(), z(), neg(nu), o()]),
        ("B2C1", [z(), neg(&o()), z(), o()]),
        ("B2C2", [z(), neg(&o()), neg(&o()), o()]),
        ("B2C3", [z(), neg(&o()), neg(nu), o()]),
        ("B3C1", [z(), neg(mu), z(), o()]),
        ("B3C2", [z(), neg(mu), neg(&o()), o()]),
        ("B3C3", [z(), neg(mu), neg(nu), o()]),
    ];
    let h1: [(&str, [Rational; 4]); 9] = [
        ("A1C1", [z(), z(), z(), o()]),
        ("A1C2", [z(), z(), neg(&o()), o()]),
        ("A1C3", [z(), z(), neg(nu), o()]),
        ("A2C1", [neg(&o()), z(), z(), o()]),
        ("A2C2", [neg(&o()), z(), neg(&o()), o()]),
        ("A2C3", [neg(&o()), z(), neg(nu), o()]),
        ("A3C1", [neg(lambda), z(), z(), o()]),
        ("A3C2", [neg(lambda), z(), neg(&o()), o()]),
        ("A3C3", [neg(lambda), z(), neg(nu), o()]),
    ];
    let h2: [(&str, [Rational; 4]); 9] = [
        ("A1B1", [z(), z(), z(), o()]),
        ("A1B2", [z(), neg(&o()), z(), o()]),
        ("A1B3", [z(), neg(mu), z(), o()]),
        ("A2B1", [neg(&o()), z(), z(), o()]),
        ("A2B2", [neg(&o()), neg(&o()), z(), o()]),
        ("A2B3", [neg(&o()), neg(mu), z(), o()]),
        ("A3B1", [neg(lambda), z(), z(), o()]),
        ("A3B2", [neg(lambda), neg(&o()), z(), o()]),
        ("A3B3", [neg(lambda), neg(mu), z(), o()]),
    ];

    let build_plane = |plane: usize, rows: &[(&str, [Rational; 4]); 9]| {
        let mut plane_form = [z(), z(), z(), z()];
        plane_form[plane] = o();
        let lines = rows
            .iter()
            .map(|(label, form)| {
                let first = &label[..2];
                let second = &label[2..];
                let p = naruki_point(first, &params).expect("known endpoint name");
                let q = naruki_point(second, &params).expect("known endpoint name");
                let line = Line3::new([plane_form.clone(), form.clone()], [p, q])
                    .expect("table rows define valid lines for all parameters");
                LabeledLine {
                    plane,
                    label: (*label).to_string(),
                    endpoints: (first.to_string(), second.to_string()),
                    line,
                }
            })
            .collect();
        PlaneLines { plane, lines }
    };

    LimitLines {
        planes: [
            build_plane(0, &h0),
            build_plane(1, &h1),
            build_plane(2, &h2),
        ],
    }
}

/// Row of the line-limit correspondence: each of the 27 lines in Cayley's
/// labeling, the two tritangent planes cutting it out, and the limit line
/// it degenerates to for rho -> 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LimitLineRow {
    /// Cayley's label for the line, "a1".."c9".
    pub cayley: &'static str,
    /// Names of the two tritangent planes whose intersection is the line.
    pub tritangents: (&'static str, &'static str),
    /// Endpoint label of the limit line, e.g. "B3C3".
    pub limit: &'static str,
}

/// The limit correspondence for all 27 lines.
pub fn line_limit_table() -> Vec<LimitLineRow> {
    let row = |cayley, t1, t2, limit| LimitLineRow {
        cayley,
        tritangents: (t1, t2),
        limit,
    };
    vec![
        row("a1", "(w)", "(x)", "B1C1"),
        row("b1", "(w)", "(y)", "A1C1"),
        row("c1", "(w)", "(z)", "A1B1"),
        row("a2", "(p,)", "(theta)", "B3C3"),
        row("b2", "(q,)", "(theta)", "A3C3"),
        row("c2", "(r,)", "(theta)", "A3B3"),
        row("a3", "(pbar,)", "(thetabar)", "B2C2"),
        row("b3", "(qbar,)", "(thetabar)", "A2C2"),
        row("c3", "(rbar,)", "(thetabar)", "A2B2"),
        row("a4", "(x)", "(g)", "B3C2"),
        row("b4", "(y)", "(fbar)", "A2C3"),
        row("c4", "(z)", "(f)", "A3B2"),
        row("a5", "(x)", "(gbar)", "B2C3"),
        row("b5", "(y)", "(f)", "A3C2"),
        row("c5", "(z)", "(fbar)", "A2B3"),
        row("a6", "(x)", "(r,)", "A2B1"),
        row("b6", "(y)", "(p,)", "B2C1"),
        row("c6", "(z)", "(q,)", "A1C2"),
        row("a7", "(q,)", "(x)", "A2C1"),
        row("b7", "(r,)", "(y)", "A1B2"),
        row("c7", "(p,)", "(z)", "B1C2"),
        row("a8", "(qbar,)", "(xbar)", "A3C1"),
        row("b8", "(rbar,)", "(ybar)", "A1B3"),
        row("c8", "(pbar,)", "(zbar)", "B1C3"),
        row("a9", "(rbar,)", "(xbar)", "A3B1"),
        row("b9", "(pbar,)", "(ybar)", "B3C1"),
        row("c9", "(qbar,)", "(zbar)", "A1C3"),
    ]
}

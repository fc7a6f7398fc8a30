//! Cross-ratio of four collinear points in P^3.

use crate::lines::{is_zero4, point_string, proj_eq, rank4};
use crate::CubicError;
use exact::Rational;
use num_traits::Zero;

/// 2x2 minor of the points a, b restricted to coordinates (s, t).
fn minor(a: &[Rational; 4], b: &[Rational; 4], s: usize, t: usize) -> Rational {
    &(&a[s] * &b[t]) - &(&a[t] * &b[s])
}

/// Cross-ratio computed in the affine chart given by the coordinate pair
/// (s, t): each point projects to [p_s : p_t] on P^1 and the cross-ratio is
///
/// ```text
/// (z3 - z1)(z4 - z2) / ((z3 - z2)(z4 - z1))
/// ```
///
/// in the affine coordinate z = p_t / p_s, evaluated through 2x2 minors so
/// points at infinity of the chart need no special casing.  The chart must
/// separate the four points; otherwise an error is returned.
pub fn cross_ratio_in_chart(
    points: &[[Rational; 4]; 4],
    s: usize,
    t: usize,
) -> Result<Rational, CubicError> {
    let m = |i: usize, j: usize| minor(&points[i], &points[j], s, t);
    let denom = &m(2, 1) * &m(3, 0);
    if denom.is_zero() {
        return Err(CubicError::CoincidentPoints(format!(
            "chart ({s}, {t}) does not separate the four points"
        )));
    }
    Ok(&(&m(2, 0) * &m(3, 1)) / &denom)
}

/// Cross-ratio of four distinct collinear points in P^3.
///
/// The value does not depend on the chart: any coordinate pair that embeds
/// the common line into P^1 yields the same rational number.
pub fn cross_ratio(points: &[[Rational; 4]; 4]) -> Result<Rational, CubicError> {
    for p in points {
        if is_zero4(p) {
            return Err(CubicError::CoincidentPoints(
                "zero vector is not a projective point".into(),
            ));
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if proj_eq(&points[i], &points[j]) {
                return Err(CubicError::CoincidentPoints(format!(
                    "points {} and {} coincide at {}",
                    i + 1,
                    j + 1,
                    point_string(&points[i])
                )));
            }
        }
    }
    if rank4(points) > 2 {
        return Err(CubicError::NonCollinearPoints(format!(
            "{}, {}, {}, {} do not span a line",
            point_string(&points[0]),
            point_string(&points[1]),
            point_string(&points[2]),
            point_string(&points[3])
        )));
    }
    // The first two points are distinct, so some coordinate pair already
    // separates them; on a line that chart separates all four points.
    for s in 0..4 {
        for t in s + 1..4 {
            if !minor(&points[0], &points[1], s, t).is_zero() {
                return cross_ratio_in_chart(points, s, t);
            }
        }
    }
    unreachable!("distinct projective points admit a separating chart")
}

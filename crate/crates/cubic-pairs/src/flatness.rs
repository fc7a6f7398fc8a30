//! Defining ideals of the maximally degenerate line configurations.
//!
//! Flatness of the line divisor over the parameter space reduces to the
//! Hilbert polynomials of the two deepest degenerations matching the
//! generic value 27m - 108; this module builds their saturated ideals as
//! intersections of the per-line primary pieces.

use crate::stratum::{PairConfig, Stratum};
use crate::CubicError;
use polyring::{ideal_intersect, parse_poly, Ideal, Poly};

fn p(text: &str) -> Poly {
    parse_poly(text, 4).expect("fixed generator text parses")
}

fn ideal(gens: &[Poly]) -> Ideal {
    Ideal::new(4, gens.to_vec())
}

fn intersect_all(ideals: &[Ideal]) -> Ideal {
    ideals
        .iter()
        .skip(1)
        .fold(ideals[0].clone(), |acc, next| ideal_intersect(&acc, next))
}

fn ideal_sum(a: &Ideal, b: &Ideal) -> Ideal {
    let mut gens = a.gens().to_vec();
    gens.extend_from_slice(b.gens());
    Ideal::new(4, gens)
}

/// Ideal of the quadruple lines on the three-plane surface: each plane
/// carries its fourfold line with a length-four structure in the normal
/// direction x3.
fn three_planes_quadruple_part() -> Ideal {
    intersect_all(&[
        ideal(&[p("x0"), p("x3^4")]),
        ideal(&[p("x1"), p("x3^4")]),
        ideal(&[p("x2"), p("x3^4")]),
    ])
}

/// The reduced line of each plane.
fn three_planes_reduced_part() -> Ideal {
    intersect_all(&[
        ideal(&[p("x0"), p("x1 + x2 - x3")]),
        ideal(&[p("x1"), p("x0 + x2 - x3")]),
        ideal(&[p("x2"), p("x0 + x1 - x3")]),
    ])
}

/// The two double lines of each plane, one per family.
fn three_planes_double_parts() -> [Ideal; 2] {
    [
        intersect_all(&[
            ideal(&[p("x0"), p("x1 - x3").pow(2)]),
            ideal(&[p("x1"), p("x2 - x3").pow(2)]),
            ideal(&[p("x2"), p("x0 - x3").pow(2)]),
        ]),
        intersect_all(&[
            ideal(&[p("x0"), p("x2 - x3").pow(2)]),
            ideal(&[p("x1"), p("x0 - x3").pow(2)]),
            ideal(&[p("x2"), p("x1 - x3").pow(2)]),
        ]),
    ]
}

fn three_planes_ideal() -> Ideal {
    let [first_doubles, second_doubles] = three_planes_double_parts();
    intersect_all(&[
        three_planes_quadruple_part(),
        three_planes_reduced_part(),
        first_doubles,
        second_doubles,
    ])
}

fn cayley_ideal() -> Ideal {
    // Doubled coordinate planes; cutting the surface with them yields the
    // six edges with multiplicity four.
    let doubled_planes = intersect_all(&[
        ideal(&[p("x0^2")]),
        ideal(&[p("x1^2")]),
        ideal(&[p("x2^2")]),
        ideal(&[p("x3^2")]),
    ]);
    let surface = ideal(&[p(
        "x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3",
    )]);
    let diagonals = ideal_sum(&surface, &ideal(&[p("x0 + x1 + x2 + x3")]));
    ideal_intersect(&ideal_sum(&surface, &doubled_planes), &diagonals)
}

/// Defining ideal of the full line configuration of a maximally
/// degenerate pair, supported on the two deepest strata.  Other strata
/// are covered by semicontinuity and are not built here.
pub fn config_ideal(config: &PairConfig) -> Result<Ideal, CubicError> {
    match config.stratum {
        Stratum::A1x3N => Ok(three_planes_ideal()),
        Stratum::A1x4 => Ok(cayley_ideal()),
        other => Err(CubicError::UnsupportedConfiguration(format!(
            "configuration ideal is only built for the maximal degenerations, not {other}"
        ))),
    }
}

use std::collections::BTreeSet;

use cubic_pairs::{
    check_stable_pair, cross_ratio, limit_lines, naruki_cubic, naruki_point, stratum_config,
    tritangent_limit, tritangent_partition, NarukiParams, Stratum,
};
use exact::{rat, rat_int, Rational};
use num_traits::Zero;
use polyring::{is_smooth_jacobian, parse_poly, Poly};

use crate::runner::{require, spec, CheckSpec, Outcome};
use crate::Options;

/// Parameter points used throughout: a generic member for the irreducible
/// strata, the dictionary values for the degenerate ones.
fn params_for(stratum: Stratum) -> NarukiParams {
    match stratum {
        Stratum::A1x4 => NarukiParams::from_ints(0, 0, 0, 1),
        Stratum::N => NarukiParams::from_ints(2, 3, 5, 0),
        Stratum::A1N => NarukiParams::from_ints(0, 3, 5, 0),
        Stratum::A1x2N => NarukiParams::from_ints(0, 0, 5, 0),
        Stratum::A1x3N => NarukiParams::from_ints(0, 0, 0, 0),
        _ => NarukiParams::from_ints(2, 3, 5, 7),
    }
}

fn slug(stratum: Stratum) -> String {
    stratum.name().to_lowercase().replace('^', "x")
}

/// The four marked points on the axis x0 = x3 = 0 cut by the neighbouring
/// limit lines; their cross-ratio recovers the modulus.
fn axis_quadruple(nu: &Rational) -> [[Rational; 4]; 4] {
    let z = Rational::zero;
    [
        [z(), rat_int(1), z(), z()],
        [z(), z(), rat_int(1), z()],
        [z(), -rat_int(1), rat_int(1), z()],
        [z(), -nu.clone(), rat_int(1), z()],
    ]
}

fn stratum_check(stratum: Stratum, epsilon_report: bool) -> Outcome {
    let config = match stratum_config(stratum, &params_for(stratum)) {
        Ok(config) => config,
        Err(e) => return Outcome::fail(format!("configuration error: {e}")),
    };
    let verdict = match check_stable_pair(&config) {
        Ok(verdict) => verdict,
        Err(e) => return Outcome::fail(format!("stability error: {e}")),
    };
    let mut detail = match verdict.worst {
        Some(i) => format!(
            "worst sum {} at {}",
            verdict.lc_points[i].sum, verdict.lc_points[i].label
        ),
        None => "no meeting points".to_string(),
    };
    let degrees: BTreeSet<&str> =
        verdict.ampleness.iter().map(|a| a.degree.as_str()).collect();
    let degrees: Vec<&str> = degrees.into_iter().collect();
    detail.push_str(&format!(
        "; ampleness {} on {} component{}",
        degrees.join("/"),
        verdict.ampleness.len(),
        if verdict.ampleness.len() == 1 { "" } else { "s" },
    ));
    if epsilon_report {
        let sums: Vec<String> = verdict
            .lc_points
            .iter()
            .map(|p| format!("{}={}", p.label, p.sum))
            .collect();
        detail.push_str(&format!("; sums {}", sums.join(", ")));
    }
    if verdict.stable {
        Outcome::pass(detail)
    } else {
        Outcome::fail(format!("unstable; {detail}"))
    }
}

/// Stability of the pair over each stratum, then the geometry the pairs
/// are built from: the three-plane degeneration, the tritangent limits,
/// the 27 line incidences, generic smoothness, and the cross-ratio modulus.
pub fn specs(options: &Options) -> Vec<CheckSpec> {
    let epsilon_report = options.epsilon_report;
    let mut specs: Vec<CheckSpec> = Stratum::all()
        .into_iter()
        .enumerate()
        .map(|(index, stratum)| {
            spec(
                format!("cubic/{:02}-{}", index + 1, slug(stratum)),
                format!("the pair over the {stratum} stratum is stable"),
                move || stratum_check(stratum, epsilon_report),
            )
        })
        .collect();

    specs.push(spec(
        "cubic/10-three-planes-limit",
        "the family degenerates to the coordinate planes at rho = 0",
        || {
            let x = |i| Poly::var(4, i);
            let planes = &(&x(0) * &x(1)) * &x(2);
            for (l, m, n) in [(2, 3, 5), (1, 1, 1), (3, 1, 4)] {
                let f = naruki_cubic(&NarukiParams::from_ints(l, m, n, 0));
                if f != planes {
                    return Outcome::fail(format!("({l}, {m}, {n}, 0) gives {f}"));
                }
            }
            Outcome::pass("x0*x1*x2 at three parameter points")
        },
    ));

    specs.push(spec(
        "cubic/11-tritangent-limits",
        "tritangent planes limit onto their closed forms at rho = 0",
        || {
            let params = NarukiParams::from_ints(2, 3, 5, 0);
            let first = match tritangent_limit("(p,)", &params) {
                Ok(p) => p,
                Err(e) => return Outcome::fail(format!("limit error: {e}")),
            };
            if first != parse_poly("x0", 4).expect("fixture") {
                return Outcome::fail(format!("(p,) limits onto {first}"));
            }
            let second = match tritangent_limit("(theta)", &params) {
                Ok(p) => p,
                Err(e) => return Outcome::fail(format!("limit error: {e}")),
            };
            if second != parse_poly("2*x0 + 3*x1 + 5*x2 - x3", 4).expect("fixture") {
                return Outcome::fail(format!("(theta) limits onto {second}"));
            }
            Outcome::pass("(p,) gives x0, (theta) gives λx0 + μx1 + νx2 - x3")
        },
    ));

    specs.push(spec(
        "cubic/12-line-incidence",
        "each of the 27 limit lines joins its two marked points",
        || {
            let params = NarukiParams::from_ints(2, 3, 5, 7);
            let table = limit_lines(&params.lambda, &params.mu, &params.nu);
            let mut seen = 0;
            for labeled in table.all() {
                let (p_name, q_name) = &labeled.endpoints;
                let (Some(p), Some(q)) =
                    (naruki_point(p_name, &params), naruki_point(q_name, &params))
                else {
                    return Outcome::fail(format!("unknown endpoint on {}", labeled.label));
                };
                if !labeled.line.contains(&p) || !labeled.line.contains(&q) {
                    return Outcome::fail(format!("{} misses an endpoint", labeled.label));
                }
                seen += 1;
            }
            require(seen == 27, "27 lines, 54 incidences", format!("only {seen} lines"))
        },
    ));

    specs.push(spec(
        "cubic/13-generic-smoothness",
        "the generic member is smooth and the four-nodal member is not",
        || {
            let generic = match is_smooth_jacobian(&naruki_cubic(&NarukiParams::from_ints(2, 3, 5, 7))) {
                Ok(s) => s,
                Err(e) => return Outcome::fail(format!("Jacobian error: {e}")),
            };
            let nodal = match is_smooth_jacobian(&naruki_cubic(&NarukiParams::from_ints(0, 0, 0, 1))) {
                Ok(s) => s,
                Err(e) => return Outcome::fail(format!("Jacobian error: {e}")),
            };
            require(
                generic && !nodal,
                "smooth at (2, 3, 5, 7), singular at (0, 0, 0, 1)",
                format!("generic smooth: {generic}, four-nodal smooth: {nodal}"),
            )
        },
    ));

    specs.push(spec(
        "cubic/14-cross-ratio-injectivity",
        "distinct moduli give distinct axis cross-ratios",
        || {
            let moduli = [
                rat_int(2),
                rat_int(3),
                rat_int(5),
                rat_int(-1),
                rat_int(-4),
                rat(1, 2),
                rat(3, 2),
                rat(7, 3),
                rat(-5, 6),
                rat(22, 7),
            ];
            let mut ratios = Vec::with_capacity(moduli.len());
            for nu in &moduli {
                match cross_ratio(&axis_quadruple(nu)) {
                    Ok(r) => ratios.push(r),
                    Err(e) => return Outcome::fail(format!("cross-ratio error at {nu}: {e}")),
                }
            }
            for i in 0..ratios.len() {
                for j in (i + 1)..ratios.len() {
                    if ratios[i] == ratios[j] {
                        return Outcome::fail(format!(
                            "moduli {} and {} collide at {}",
                            moduli[i], moduli[j], ratios[i]
                        ));
                    }
                }
            }
            Outcome::pass(format!("{} moduli, all cross-ratios distinct", moduli.len()))
        },
    ));

    specs.push(spec(
        "cubic/15-tritangent-partition",
        "nine tritangent planes partition the 27 lines",
        || {
            let triples = tritangent_partition();
            let mut seen = BTreeSet::new();
            for triple in &triples {
                for line in triple.lines {
                    if !seen.insert(line) {
                        return Outcome::fail(format!("{line} appears in two planes"));
                    }
                }
            }
            let count = |prefix: char| seen.iter().filter(|l| l.starts_with(prefix)).count();
            require(
                seen.len() == 27 && count('a') == 6 && count('b') == 6 && count('c') == 15,
                "27 lines in 9 triples: 6 a, 6 b, 15 c",
                format!("covered {} lines", seen.len()),
            )
        },
    ));

    specs
}

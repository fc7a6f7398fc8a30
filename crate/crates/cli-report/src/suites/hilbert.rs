use cubic_pairs::{config_ideal, stratum_config, NarukiParams, Stratum};
use exact::rat_int;
use polyring::{
    buchberger, hilbert_function, hilbert_polynomial, hilbert_polynomial_with_bound,
    ideal_intersect, parse_poly, Ideal, Monomial, MonomialOrder, Poly,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::runner::{require, spec, CheckSpec, Outcome};
use crate::Options;

/// The two fully transcribed degenerations carrying a line-configuration
/// ideal: the three-plane maximal one and the four-nodal one.
fn configurations() -> [(&'static str, Stratum, NarukiParams); 2] {
    [
        ("three-plane", Stratum::A1x3N, NarukiParams::from_ints(0, 0, 0, 0)),
        ("four-nodal", Stratum::A1x4, NarukiParams::from_ints(0, 0, 0, 1)),
    ]
}

fn line_ideal(stratum: Stratum, params: &NarukiParams) -> Result<Ideal, String> {
    let config = stratum_config(stratum, params).map_err(|e| format!("configuration error: {e}"))?;
    config_ideal(&config).map_err(|e| format!("ideal error: {e}"))
}

fn flatness_check(stratum: Stratum, params: &NarukiParams, bound: Option<u32>) -> Outcome {
    let ideal = match line_ideal(stratum, params) {
        Ok(ideal) => ideal,
        Err(e) => return Outcome::fail(e),
    };
    let result = match bound {
        Some(bound) => hilbert_polynomial_with_bound(&ideal, bound),
        None => hilbert_polynomial(&ideal),
    };
    let hp = match result {
        Ok(hp) => hp,
        Err(e) => return Outcome::fail(format!("no stable polynomial: {e}")),
    };
    require(
        hp.coeffs() == [rat_int(-108), rat_int(27)],
        format!("Hilbert polynomial {hp}"),
        format!("Hilbert polynomial {hp}, expected 27*m - 108"),
    )
}

fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Poly> {
    let mut exps = vec![0u32; nvars];
    let mut out = Vec::new();
    enumerate(&mut exps, 0, max_degree, &mut out);
    out
}

fn enumerate(exps: &mut Vec<u32>, slot: usize, budget: u32, out: &mut Vec<Poly>) {
    if slot == exps.len() {
        out.push(Poly::monomial(Monomial::new(exps.clone()), rat_int(1)));
        return;
    }
    for e in 0..=budget {
        exps[slot] = e;
        enumerate(exps, slot + 1, budget - e, out);
    }
    exps[slot] = 0;
}

fn fixture_ideal(nvars: usize, gens: &[&str]) -> Ideal {
    let polys = gens.iter().map(|g| parse_poly(g, nvars).expect("fixture")).collect();
    Ideal::new(nvars, polys)
}

/// Degree-two flatness of both line configurations, stabilization of the
/// Hilbert function, and the eliminator properties the computation leans
/// on: reduced-basis uniqueness and intersection against brute-force
/// membership.
pub fn specs(options: &Options) -> Vec<CheckSpec> {
    let bound = options.degree_bound;
    let seed = options.seed;
    let mut specs = Vec::new();

    for (index, (label, stratum, params)) in configurations().into_iter().enumerate() {
        let suffix = match bound {
            Some(bound) => format!(" (bound {bound})"),
            None => String::new(),
        };
        specs.push(spec(
            format!("hilbert/{:02}-{label}-ideal", index + 1),
            format!("the {label} configuration ideal has Hilbert polynomial 27*m - 108{suffix}"),
            move || flatness_check(stratum, &params, bound),
        ));
    }

    specs.push(spec(
        "hilbert/03-function-stabilizes",
        "the Hilbert function of both ideals meets 27*m - 108 at large degrees",
        || {
            for (label, stratum, params) in configurations() {
                let ideal = match line_ideal(stratum, &params) {
                    Ok(ideal) => ideal,
                    Err(e) => return Outcome::fail(e),
                };
                for m in [10u32, 12] {
                    let expected = 27 * u64::from(m) - 108;
                    match hilbert_function(&ideal, m) {
                        Ok(value) if value == expected => {}
                        Ok(value) => {
                            return Outcome::fail(format!(
                                "{label} at degree {m}: {value}, expected {expected}"
                            ))
                        }
                        Err(e) => return Outcome::fail(format!("{label}: {e}")),
                    }
                }
            }
            Outcome::pass("both ideals: 162 at degree 10, 216 at degree 12")
        },
    ));

    specs.push(spec(
        "hilbert/04-groebner-permutation",
        "the reduced basis is independent of generator order",
        move || {
            let ideal = match line_ideal(Stratum::A1x3N, &NarukiParams::from_ints(0, 0, 0, 0)) {
                Ok(ideal) => ideal,
                Err(e) => return Outcome::fail(e),
            };
            let baseline = buchberger(&ideal, MonomialOrder::Grevlex);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for round in 0..4 {
                let mut gens: Vec<Poly> = ideal.gens().to_vec();
                gens.shuffle(&mut rng);
                let shuffled = buchberger(&Ideal::new(ideal.nvars(), gens), MonomialOrder::Grevlex);
                if shuffled.basis() != baseline.basis() {
                    return Outcome::fail(format!("round {round} produced a different basis"));
                }
            }
            Outcome::pass(format!(
                "4 shuffles of {} generators, identical reduced basis",
                ideal.gens().len()
            ))
        },
    ));

    specs.push(spec(
        "hilbert/05-intersection-membership",
        "ideal intersection matches brute-force membership to degree four",
        || {
            let fixtures: [(usize, Vec<&str>, Vec<&str>); 3] = [
                (4, vec!["x0", "x3"], vec!["x1", "x3"]),
                (3, vec!["x0^2", "x1"], vec!["x0", "x1^3"]),
                (3, vec!["x0 + x1", "x2"], vec!["x0 - x1", "x2"]),
            ];
            let mut checked = 0;
            for (nvars, a, b) in fixtures {
                let i = fixture_ideal(nvars, &a);
                let j = fixture_ideal(nvars, &b);
                let meet = buchberger(&ideal_intersect(&i, &j), MonomialOrder::Grevlex);
                let igb = buchberger(&i, MonomialOrder::Grevlex);
                let jgb = buchberger(&j, MonomialOrder::Grevlex);
                for monomial in monomials_up_to(nvars, 4) {
                    if meet.contains(&monomial) != (igb.contains(&monomial) && jgb.contains(&monomial)) {
                        return Outcome::fail(format!(
                            "{a:?} meet {b:?} disagrees at {monomial}"
                        ));
                    }
                    checked += 1;
                }
            }
            Outcome::pass(format!("{checked} monomial memberships agree"))
        },
    ));

    specs
}

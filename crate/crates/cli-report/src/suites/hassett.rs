use exact::{rat, rat_int, EpsRational};
use hassett_curves::{
    codim1_strata_census, is_weighted_stable, parse_config, reduction_image, uniform_weights,
    Violation,
};

use crate::runner::{require, spec, CheckSpec, Outcome};
use crate::{Options, RunError};

fn quarter_eps(n: usize) -> Vec<EpsRational> {
    vec![EpsRational::new(rat(1, 4), rat_int(1)); n]
}

fn ones(n: usize) -> Vec<EpsRational> {
    vec![EpsRational::constant(rat_int(1)); n]
}

/// Unordered pair collisions counted one by one.
fn pairs_by_enumeration(n: usize) -> u64 {
    let mut count = 0;
    for i in 1..=n {
        for _ in (i + 1)..=n {
            count += 1;
        }
    }
    count
}

/// Balanced splittings counted by walking subsets (small n) or a Pascal
/// triangle built by additions alone (large n); either way the count is
/// independent of the closed-form binomial in the census.
fn splittings_by_enumeration(n: usize) -> u64 {
    let halved = if n <= 20 {
        let mut count: u64 = 0;
        for mask in 0u32..(1u32 << n) {
            if mask.count_ones() as usize == n / 2 {
                count += 1;
            }
        }
        count
    } else {
        let mut row: Vec<u128> = vec![1];
        for _ in 0..n {
            let mut next = vec![1u128];
            next.extend(row.windows(2).map(|w| w[0] + w[1]));
            next.push(1);
            row = next;
        }
        row[n / 2] as u64
    };
    halved / 2
}

/// Census at the uniform perturbed weights plus the three reduction
/// behaviours of the eight-mark fixtures. The census checks run at the
/// requested number of marks; the fixtures stay at eight.
pub fn specs(options: &Options) -> Result<Vec<CheckSpec>, RunError> {
    let n = options.n_marks;
    if n % 2 != 0 || n < 6 {
        return Err(RunError::InvalidOption(format!(
            "--n must be even and at least 6, got {n}"
        )));
    }

    let mut specs = Vec::new();

    specs.push(spec(
        "hassett/01-uniform-weights",
        format!("every one of the {n} marks carries weight 2/{n} + ε"),
        move || {
            let weights = uniform_weights(n);
            let expected = EpsRational::new(rat(2, n as i64), rat_int(1));
            require(
                weights.len() == n && weights.iter().all(|w| *w == expected),
                format!("{n} weights, each {expected}"),
                format!("weights differ from {expected}"),
            )
        },
    ));

    specs.push(spec(
        "hassett/02-pair-collisions",
        format!("type (A) strata at {n} marks equal the unordered pair count"),
        move || {
            let (type_a, _) = match codim1_strata_census(n) {
                Ok(census) => census,
                Err(e) => return Outcome::fail(format!("census error: {e}")),
            };
            let enumerated = pairs_by_enumeration(n);
            require(
                type_a == enumerated,
                format!("typeA={type_a}, enumeration agrees"),
                format!("typeA={type_a}, enumeration gives {enumerated}"),
            )
        },
    ));

    specs.push(spec(
        "hassett/03-balanced-splittings",
        format!("type (B) strata at {n} marks equal the balanced splitting count"),
        move || {
            let (_, type_b) = match codim1_strata_census(n) {
                Ok(census) => census,
                Err(e) => return Outcome::fail(format!("census error: {e}")),
            };
            let enumerated = splittings_by_enumeration(n);
            require(
                type_b == enumerated,
                format!("typeB={type_b}, enumeration agrees"),
                format!("typeB={type_b}, enumeration gives {enumerated}"),
            )
        },
    ));

    specs.push(spec(
        "hassett/04-tail-contraction",
        "a three-mark tail contracts to a coincidence class at quarter weights",
        || {
            let cfg = parse_config("A B A-B 1@A 2@A 3@A 4@B 5@B 6@B 7@B 8@B").expect("fixture");
            let expected = parse_config("B {1,2,3}@B 4@B 5@B 6@B 7@B 8@B").expect("fixture");
            let image = match reduction_image(&cfg, &ones(8), &quarter_eps(8)) {
                Ok(image) => image,
                Err(e) => return Outcome::fail(format!("reduction error: {e}")),
            };
            if image != expected {
                return Outcome::fail(format!("reduced to {}", image.to_text()));
            }
            match is_weighted_stable(&image, &quarter_eps(8)) {
                Ok(v) if v.ok => Outcome::pass(format!("image {}", image.to_text())),
                Ok(_) => Outcome::fail("image is not stable at the target weights"),
                Err(e) => Outcome::fail(format!("stability error: {e}")),
            }
        },
    ));

    specs.push(spec(
        "hassett/05-balanced-splitting-stable",
        "a 4+4 two-component splitting stays stable at quarter weights",
        || {
            let cfg = parse_config("A B A-B 1@A 2@A 3@A 4@A 5@B 6@B 7@B 8@B").expect("fixture");
            let verdict = match is_weighted_stable(&cfg, &quarter_eps(8)) {
                Ok(v) => v,
                Err(e) => return Outcome::fail(format!("stability error: {e}")),
            };
            if !verdict.ok {
                return Outcome::fail(format!("violations: {:?}", verdict.violations));
            }
            match reduction_image(&cfg, &quarter_eps(8), &quarter_eps(8)) {
                Ok(image) if image == cfg => Outcome::pass("stable, reduction is the identity"),
                Ok(image) => Outcome::fail(format!("reduction moved it to {}", image.to_text())),
                Err(e) => Outcome::fail(format!("reduction error: {e}")),
            }
        },
    ));

    specs.push(spec(
        "hassett/06-collision-wall",
        "four coinciding marks violate the coincidence bound at quarter weights",
        || {
            let cfg = parse_config("A {1,2,3,4}@A 5@A 6@A 7@A 8@A").expect("fixture");
            let verdict = match is_weighted_stable(&cfg, &quarter_eps(8)) {
                Ok(v) => v,
                Err(e) => return Outcome::fail(format!("stability error: {e}")),
            };
            let overweight = verdict
                .violations
                .iter()
                .any(|v| matches!(v, Violation::CoincidenceOverweight { marks, .. } if marks == &[1, 2, 3, 4]));
            require(
                !verdict.ok && overweight,
                "rejected with the {1,2,3,4} class overweight",
                format!("ok={}, violations {:?}", verdict.ok, verdict.violations),
            )
        },
    ));

    Ok(specs)
}

use std::collections::BTreeMap;

use ball_lattice::{
    congruence_level, dm_form_h, generate_group, intersection_skew, preserves_form, prym_form,
    prym_reflections, prym_rho, signature, triflection, HermitianForm, UnitaryMatrix,
};
use exact::{rat, EisensteinInt, GaussianInt, Matrix, Rational, Ring};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::runner::{require, spec, CheckSpec, Outcome};
use crate::Options;

fn e(a: i64, b: i64) -> EisensteinInt {
    EisensteinInt::new(a, b)
}

/// Rank-two Eisenstein form with a norm -3 root that mixes the basis.
fn mixing_form() -> HermitianForm<EisensteinInt> {
    let rows = vec![vec![e(-3, 0), e(1, 2)], vec![e(-1, -2), e(-3, 0)]];
    HermitianForm::new(Matrix::from_rows(rows).expect("fixture")).expect("fixture")
}

/// The reflection group of the rank-two form, generated by the three unit
/// reflections. Order 16, so a cap of 64 is comfortable.
fn reflection_group() -> Result<(Vec<Matrix<GaussianInt>>, BTreeMap<usize, usize>), String> {
    let form = prym_form();
    let generators = prym_reflections();
    let unitary: Result<Vec<UnitaryMatrix>, _> =
        generators.iter().map(|g| UnitaryMatrix::new(g.clone(), &form)).collect();
    let unitary = unitary.map_err(|e| format!("generator error: {e}"))?;
    let report = generate_group(&unitary, 64).map_err(|e| format!("closure error: {e}"))?;
    Ok((report.elements().to_vec(), report.order_census().clone()))
}

/// Commutativity, associativity, distributivity, identities, inverses,
/// and multiplicativity of the involution, on seeded samples.
fn ring_axioms<R: Ring>(label: &str, samples: &[R]) -> Outcome {
    let zero = R::ring_zero();
    let one = R::ring_one();
    let mut triples = 0;
    for triple in samples.chunks_exact(3) {
        let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
        let checks: [(&str, bool); 9] = [
            ("a+b = b+a", a.ring_add(b) == b.ring_add(a)),
            ("(a+b)+c = a+(b+c)", a.ring_add(b).ring_add(c) == a.ring_add(&b.ring_add(c))),
            ("ab = ba", a.ring_mul(b) == b.ring_mul(a)),
            ("(ab)c = a(bc)", a.ring_mul(b).ring_mul(c) == a.ring_mul(&b.ring_mul(c))),
            (
                "a(b+c) = ab+ac",
                a.ring_mul(&b.ring_add(c)) == a.ring_mul(b).ring_add(&a.ring_mul(c)),
            ),
            ("a+0 = a", a.ring_add(&zero) == *a),
            ("a*1 = a", a.ring_mul(&one) == *a),
            ("a+(-a) = 0", a.ring_add(&a.ring_neg()) == zero),
            (
                "conj(ab) = conj(a)conj(b)",
                a.ring_mul(b).ring_conj() == a.ring_conj().ring_mul(&b.ring_conj()),
            ),
        ];
        for (law, holds) in checks {
            if !holds {
                return Outcome::fail(format!("{label}: {law} fails on sample triple {triples}"));
            }
        }
        triples += 1;
    }
    Outcome::pass(format!("{label}: 9 laws on {triples} sampled triples"))
}

/// The Hermitian forms and their isometries: inertia of the rank-six and
/// rank-two forms, the skew intersection pairing, the order-16 reflection
/// group, and the order-3 triflections on the Eisenstein side.
pub fn specs(options: &Options) -> Vec<CheckSpec> {
    let seed = options.seed;
    let mut specs = Vec::new();

    specs.push(spec(
        "lattice/01-ball-signature",
        "the rank-six form has hyperbolic inertia, one against five",
        || {
            let (pos, neg, zero) = signature(&dm_form_h());
            require(
                zero == 0 && pos.min(neg) == 1 && pos.max(neg) == 5,
                format!("inertia ({pos}, {neg}), nondegenerate"),
                format!("inertia ({pos}, {neg}, {zero})"),
            )
        },
    ));

    specs.push(spec(
        "lattice/02-prym-definite",
        "the rank-two form is definite with determinant of norm two",
        || {
            let form = prym_form();
            let (pos, neg, zero) = signature(&form);
            let det = form.det();
            require(
                (pos, neg, zero) == (0, 2, 0) && det == GaussianInt::new(2, 0),
                format!("inertia (0, 2), det {det} of absolute value 2"),
                format!("inertia ({pos}, {neg}, {zero}), det {det}"),
            )
        },
    ));

    specs.push(spec(
        "lattice/03-skew-pairing",
        "the intersection pairing is skew and the complex structure preserves it",
        || {
            let q = intersection_skew();
            let rho = prym_rho();
            let minus_identity = Matrix::identity(4).neg();
            let square = match rho.mul(&rho) {
                Ok(square) => square,
                Err(e) => return Outcome::fail(format!("dimension error: {e}")),
            };
            if square != minus_identity {
                return Outcome::fail("the complex structure does not square to -1");
            }
            let pulled = rho
                .transpose()
                .mul(q.matrix())
                .and_then(|m| m.mul(&rho));
            match pulled {
                Ok(pulled) if pulled == *q.matrix() => {
                    Outcome::pass("skew, rho^2 = -1, rho preserves the pairing")
                }
                Ok(_) => Outcome::fail("the complex structure moves the pairing"),
                Err(e) => Outcome::fail(format!("dimension error: {e}")),
            }
        },
    ));

    specs.push(spec(
        "lattice/04-reflection-group-order",
        "the three reflections generate a group of order 16",
        || match reflection_group() {
            Ok((elements, _)) => require(
                elements.len() == 16,
                "closure has 16 elements",
                format!("closure has {} elements", elements.len()),
            ),
            Err(e) => Outcome::fail(e),
        },
    ));

    specs.push(spec(
        "lattice/05-scalar-units",
        "the group contains the four scalar units",
        || {
            let (elements, _) = match reflection_group() {
                Ok(group) => group,
                Err(e) => return Outcome::fail(e),
            };
            let identity: Matrix<GaussianInt> = Matrix::identity(2);
            let scalars = [
                GaussianInt::one(),
                GaussianInt::one().ring_neg(),
                GaussianInt::i(),
                GaussianInt::i().ring_neg(),
            ];
            for unit in scalars {
                let scalar = identity.scalar_mul(&unit);
                if !elements.contains(&scalar) {
                    return Outcome::fail(format!("missing the scalar {unit:?}"));
                }
            }
            Outcome::pass("1, -1, i, -i all occur")
        },
    ));

    specs.push(spec(
        "lattice/06-reflection-squares",
        "the six signed generators square to the identity",
        || {
            let identity: Matrix<GaussianInt> = Matrix::identity(2);
            let minus_one = GaussianInt::one().ring_neg();
            let mut seen = 0;
            for generator in prym_reflections() {
                for signed in [generator.clone(), generator.scalar_mul(&minus_one)] {
                    match signed.mul(&signed) {
                        Ok(square) if square == identity => seen += 1,
                        Ok(_) => return Outcome::fail("a signed generator has order > 2"),
                        Err(e) => return Outcome::fail(format!("dimension error: {e}")),
                    }
                }
            }
            require(seen == 6, "all six square to 1", format!("only {seen} square to 1"))
        },
    ));

    specs.push(spec(
        "lattice/07-order-census",
        "element orders are 1 once, 2 seven times, 4 eight times",
        || {
            let (_, census) = match reflection_group() {
                Ok(group) => group,
                Err(e) => return Outcome::fail(e),
            };
            let expected: BTreeMap<usize, usize> = [(1, 1), (2, 7), (4, 8)].into();
            require(
                census == expected,
                "census {1: 1, 2: 7, 4: 8}",
                format!("census {census:?}"),
            )
        },
    ));

    specs.push(spec(
        "lattice/08-congruence-level",
        "every group element is congruent to the identity modulo 1 - i",
        || {
            let (elements, _) = match reflection_group() {
                Ok(group) => group,
                Err(e) => return Outcome::fail(e),
            };
            let level = GaussianInt::new(1, -1);
            for element in &elements {
                match congruence_level(element, &level) {
                    Ok(true) => {}
                    Ok(false) => return Outcome::fail("an element escapes the congruence"),
                    Err(e) => return Outcome::fail(format!("congruence error: {e}")),
                }
            }
            Outcome::pass(format!("{} elements, all congruent", elements.len()))
        },
    ));

    specs.push(spec(
        "lattice/09-triflection-order",
        "a norm -3 root induces an integral isometry of order three",
        || {
            let form = mixing_form();
            let root = [e(1, 0), e(0, 0)];
            let t = match triflection(&root, &form) {
                Ok(t) => t,
                Err(e) => return Outcome::fail(format!("triflection error: {e}")),
            };
            let identity: Matrix<EisensteinInt> = Matrix::identity(2);
            if t == identity {
                return Outcome::fail("the triflection is trivial");
            }
            let cube = t.mul(&t).and_then(|s| s.mul(&t));
            match cube {
                Ok(cube) if cube == identity => {}
                Ok(_) => return Outcome::fail("the cube is not the identity"),
                Err(e) => return Outcome::fail(format!("dimension error: {e}")),
            }
            match preserves_form(&t, &form) {
                Ok(true) => Outcome::pass("order 3, preserves the form"),
                Ok(false) => Outcome::fail("the triflection moves the form"),
                Err(e) => Outcome::fail(format!("preservation error: {e}")),
            }
        },
    ));

    let axiom_suites: [(&str, &str); 3] = [
        ("lattice/10-rational-axioms", "rational"),
        ("lattice/11-gaussian-axioms", "Gaussian"),
        ("lattice/12-eisenstein-axioms", "Eisenstein"),
    ];
    for (id, label) in axiom_suites {
        specs.push(spec(
            id,
            format!("{label} arithmetic satisfies the commutative ring laws"),
            move || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                match label {
                    "rational" => {
                        let samples: Vec<Rational> = (0..60)
                            .map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=12)))
                            .collect();
                        ring_axioms(label, &samples)
                    }
                    "Gaussian" => {
                        let samples: Vec<GaussianInt> = (0..60)
                            .map(|_| GaussianInt::new(rng.gen_range(-30..=30), rng.gen_range(-30..=30)))
                            .collect();
                        ring_axioms(label, &samples)
                    }
                    _ => {
                        let samples: Vec<EisensteinInt> = (0..60)
                            .map(|_| EisensteinInt::new(rng.gen_range(-30..=30), rng.gen_range(-30..=30)))
                            .collect();
                        ring_axioms(label, &samples)
                    }
                }
            },
        ));
    }

    specs
}

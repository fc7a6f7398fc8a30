//! The acceptance gate: one test per criterion, each ending in a single
//! pass line. A failure here means the corresponding subsystem no longer
//! reproduces its committed results.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use ball_lattice::{
    dm_form_h, generate_group, intersection_skew, preserves_form, prym_form, prym_reflections,
    signature, triflection, HermitianForm, UnitaryMatrix,
};
use cubic_pairs::{
    check_stable_pair, config_ideal, cross_ratio, limit_lines, naruki_cubic, naruki_point,
    stratum_config, tritangent_limit, NarukiParams, Stratum,
};
use dm_weights::{builtin_tables, verify_tables, RingTag};
use exact::{
    rat, rat_int, EisensteinInt, EpsRational, GaussianInt, Matrix, Rational, Ring,
};
use hassett_curves::{
    codim1_strata_census, is_weighted_stable, parse_config, reduction_image, Violation,
};
use num_traits::Zero;
use polyring::{
    buchberger, hilbert_polynomial, ideal_intersect, is_smooth_jacobian, parse_poly, Ideal,
    Monomial, MonomialOrder, Poly,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn criterion_1_weight_tables_reclassify_exactly() {
    let start = Instant::now();
    let report = verify_tables();
    let elapsed = start.elapsed();

    assert_eq!(report.rows.len(), 42);
    assert!(report.all_match(), "mismatches: {:?}", report.mismatches());
    let eisenstein =
        builtin_tables().iter().filter(|r| matches!(r.ring, RingTag::Eisenstein)).count();
    assert_eq!(eisenstein, 36);
    assert_eq!(builtin_tables().len() - eisenstein, 6);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1: pass - 42/42 rows reclassified in {elapsed:?}");
}

#[test]
fn criterion_2_census_matches_enumeration() {
    let (type_a, type_b) = codim1_strata_census(8).expect("census at eight marks");
    assert_eq!((type_a, type_b), (28, 35));

    let mut pairs = 0;
    for i in 1..=8u32 {
        for _j in (i + 1)..=8 {
            pairs += 1;
        }
    }
    assert_eq!(type_a, pairs);

    let balanced = (0u32..(1 << 8)).filter(|mask| mask.count_ones() == 4).count() as u64;
    assert_eq!(type_b, balanced / 2);
    println!("criterion 2: pass - census (28, 35) agrees with enumeration");
}

fn quarter_eps(n: usize) -> Vec<EpsRational> {
    vec![EpsRational::new(rat(1, 4), rat_int(1)); n]
}

fn ones(n: usize) -> Vec<EpsRational> {
    vec![EpsRational::constant(rat_int(1)); n]
}

#[test]
fn criterion_3_reduction_behaviour_at_quarter_weights() {
    let tail = parse_config("A B A-B 1@A 2@A 3@A 4@B 5@B 6@B 7@B 8@B").unwrap();
    let image = reduction_image(&tail, &ones(8), &quarter_eps(8)).expect("tail reduces");
    let merged = parse_config("B {1,2,3}@B 4@B 5@B 6@B 7@B 8@B").unwrap();
    assert_eq!(image, merged);
    assert!(is_weighted_stable(&image, &quarter_eps(8)).unwrap().ok);

    let balanced = parse_config("A B A-B 1@A 2@A 3@A 4@A 5@B 6@B 7@B 8@B").unwrap();
    assert!(is_weighted_stable(&balanced, &quarter_eps(8)).unwrap().ok);
    let fixed = reduction_image(&balanced, &quarter_eps(8), &quarter_eps(8)).unwrap();
    assert_eq!(fixed, balanced);

    let collision = parse_config("A {1,2,3,4}@A 5@A 6@A 7@A 8@A").unwrap();
    let verdict = is_weighted_stable(&collision, &quarter_eps(8)).unwrap();
    assert!(!verdict.ok);
    assert!(verdict
        .violations
        .iter()
        .any(|v| matches!(v, Violation::CoincidenceOverweight { marks, .. } if marks == &[1, 2, 3, 4])));
    println!("criterion 3: pass - tails contract, splittings persist, collisions are rejected");
}

fn line_configurations() -> [(Stratum, NarukiParams); 2] {
    [
        (Stratum::A1x3N, NarukiParams::from_ints(0, 0, 0, 0)),
        (Stratum::A1x4, NarukiParams::from_ints(0, 0, 0, 1)),
    ]
}

#[test]
fn criterion_4_hilbert_polynomials_of_both_configurations() {
    for (stratum, params) in line_configurations() {
        let start = Instant::now();
        let config = stratum_config(stratum, &params).unwrap();
        let ideal = config_ideal(&config).unwrap();
        let hp = hilbert_polynomial(&ideal).expect("stable polynomial");
        let elapsed = start.elapsed();
        assert_eq!(hp.coeffs(), [rat_int(-108), rat_int(27)], "{stratum}");
        assert_eq!(hp.to_string(), "27*m - 108");
        assert!(elapsed < Duration::from_secs(60), "{stratum} took {elapsed:?}");
    }
    println!("criterion 4: pass - both configuration ideals have Hilbert polynomial 27*m - 108");
}

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

#[test]
fn criterion_5_every_stratum_is_stable_and_mutations_flip() {
    let two = rat_int(2);
    for stratum in Stratum::all() {
        let config = stratum_config(stratum, &params_for(stratum)).unwrap();
        let verdict = check_stable_pair(&config).unwrap();
        assert!(verdict.stable, "{stratum}");
        assert!(verdict.census.ok, "{stratum}");
        for point in &verdict.lc_points {
            assert!(point.ok, "{stratum} at {}", point.label);
            assert_ne!(
                point.sum_value.cmp_rational(&two),
                Ordering::Greater,
                "{stratum} at {}: sum {}",
                point.label,
                point.sum
            );
        }
        for ampleness in &verdict.ampleness {
            assert!(ampleness.positive, "{stratum} on {}", ampleness.component);
            assert_eq!(ampleness.degree, "9ε", "{stratum} on {}", ampleness.component);
        }

        let mut mutated = config.clone();
        mutated.lines[0].multiplicity += 1;
        assert!(!check_stable_pair(&mutated).unwrap().stable, "{stratum} mutated");
    }

    let mut flat = stratum_config(Stratum::Smooth, &params_for(Stratum::Smooth)).unwrap();
    flat.coefficient = EpsRational::constant(rat(1, 9));
    let verdict = check_stable_pair(&flat).unwrap();
    assert!(!verdict.stable);
    assert!(verdict.ampleness.iter().all(|a| !a.positive));
    println!("criterion 5: pass - nine stable strata, mutations and flat weights flip the verdict");
}

fn e(a: i64, b: i64) -> EisensteinInt {
    EisensteinInt::new(a, b)
}

#[test]
fn criterion_6_forms_reflections_and_triflections() {
    let (pos, neg, zero) = signature(&dm_form_h());
    assert_eq!(zero, 0);
    assert_eq!((pos.min(neg), pos.max(neg)), (1, 5));

    let form = prym_form();
    assert_eq!(signature(&form), (0, 2, 0));
    assert_eq!(form.det(), GaussianInt::new(2, 0));

    let q = intersection_skew();
    assert_eq!(q.matrix().transpose(), q.matrix().neg());

    let generators = prym_reflections();
    let unitary: Vec<UnitaryMatrix> = generators
        .iter()
        .map(|g| UnitaryMatrix::new(g.clone(), &form).expect("preserves the form"))
        .collect();
    let group = generate_group(&unitary, 64).expect("finite closure");
    assert_eq!(group.order(), 16);

    let identity: Matrix<GaussianInt> = Matrix::identity(2);
    for unit in [
        GaussianInt::one(),
        GaussianInt::one().ring_neg(),
        GaussianInt::i(),
        GaussianInt::i().ring_neg(),
    ] {
        assert!(group.contains(&identity.scalar_mul(&unit)), "missing scalar {unit}");
    }
    let minus_one = GaussianInt::one().ring_neg();
    for generator in &generators {
        for signed in [generator.clone(), generator.scalar_mul(&minus_one)] {
            assert_eq!(signed.mul(&signed).unwrap(), identity);
        }
    }

    let rank_one =
        HermitianForm::new(Matrix::from_rows(vec![vec![e(-3, 0)]]).unwrap()).unwrap();
    let omega = triflection(&[e(1, 0)], &rank_one).unwrap();
    assert_eq!(*omega.at(0, 0), e(0, 1));

    let mixing = HermitianForm::new(
        Matrix::from_rows(vec![vec![e(-3, 0), e(1, 2)], vec![e(-1, -2), e(-3, 0)]]).unwrap(),
    )
    .unwrap();
    for (root, form) in [(vec![e(1, 0)], &rank_one), (vec![e(1, 0), e(0, 0)], &mixing)] {
        let t = triflection(&root, form).unwrap();
        let identity: Matrix<EisensteinInt> = Matrix::identity(t.rows());
        assert_ne!(t, identity);
        assert_eq!(t.mul(&t).unwrap().mul(&t).unwrap(), identity);
        assert!(preserves_form(&t, form).unwrap());
    }
    println!("criterion 6: pass - inertia, skewness, the order-16 group, and order-3 triflections");
}

#[test]
fn criterion_7_family_lines_and_smoothness() {
    let x = |i| Poly::var(4, i);
    let planes = &(&x(0) * &x(1)) * &x(2);
    for (l, m, n) in [(2, 3, 5), (1, 1, 1), (3, 1, 4)] {
        assert_eq!(naruki_cubic(&NarukiParams::from_ints(l, m, n, 0)), planes);
    }

    let at_wall = NarukiParams::from_ints(2, 3, 5, 0);
    assert_eq!(tritangent_limit("(p,)", &at_wall).unwrap(), parse_poly("x0", 4).unwrap());
    assert_eq!(
        tritangent_limit("(theta)", &at_wall).unwrap(),
        parse_poly("2*x0 + 3*x1 + 5*x2 - x3", 4).unwrap(),
    );

    let table = limit_lines(&at_wall.lambda, &at_wall.mu, &at_wall.nu);
    let mut seen = 0;
    for labeled in table.all() {
        let (p_name, q_name) = &labeled.endpoints;
        let p = naruki_point(p_name, &at_wall).unwrap();
        let q = naruki_point(q_name, &at_wall).unwrap();
        assert!(labeled.line.contains(&p), "{} through {p_name}", labeled.label);
        assert!(labeled.line.contains(&q), "{} through {q_name}", labeled.label);
        seen += 1;
    }
    assert_eq!(seen, 27);

    assert!(is_smooth_jacobian(&naruki_cubic(&NarukiParams::from_ints(2, 3, 5, 7))).unwrap());
    println!("criterion 7: pass - three-plane limit, tritangent planes, 27 lines, smooth member");
}

#[test]
fn criterion_8_cross_ratios_separate_moduli() {
    let z = Rational::zero;
    let quadruple = |nu: &Rational| {
        [
            [z(), rat_int(1), z(), z()],
            [z(), z(), rat_int(1), z()],
            [z(), -rat_int(1), rat_int(1), z()],
            [z(), -nu.clone(), rat_int(1), z()],
        ]
    };
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
    let ratios: Vec<Rational> =
        moduli.iter().map(|nu| cross_ratio(&quadruple(nu)).unwrap()).collect();
    for i in 0..ratios.len() {
        for j in (i + 1)..ratios.len() {
            assert_ne!(ratios[i], ratios[j], "{} vs {}", moduli[i], moduli[j]);
        }
    }
    println!("criterion 8: pass - 10 rational moduli, all 45 cross-ratio pairs distinct");
}

fn ring_laws<R: Ring>(samples: &[R]) {
    let zero = R::ring_zero();
    let one = R::ring_one();
    for triple in samples.chunks_exact(3) {
        let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
        assert_eq!(a.ring_add(b), b.ring_add(a));
        assert_eq!(a.ring_add(b).ring_add(c), a.ring_add(&b.ring_add(c)));
        assert_eq!(a.ring_mul(b), b.ring_mul(a));
        assert_eq!(a.ring_mul(b).ring_mul(c), a.ring_mul(&b.ring_mul(c)));
        assert_eq!(a.ring_mul(&b.ring_add(c)), a.ring_mul(b).ring_add(&a.ring_mul(c)));
        assert_eq!(a.ring_add(&zero), *a);
        assert_eq!(a.ring_mul(&one), *a);
        assert_eq!(a.ring_add(&a.ring_neg()), zero);
        assert_eq!(a.ring_mul(b).ring_conj(), a.ring_conj().ring_mul(&b.ring_conj()));
    }
}

fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Poly> {
    fn walk(exps: &mut Vec<u32>, slot: usize, budget: u32, out: &mut Vec<Poly>) {
        if slot == exps.len() {
            out.push(Poly::monomial(Monomial::new(exps.clone()), rat_int(1)));
            return;
        }
        for e in 0..=budget {
            exps[slot] = e;
            walk(exps, slot + 1, budget - e, out);
        }
        exps[slot] = 0;
    }
    let mut exps = vec![0u32; nvars];
    let mut out = Vec::new();
    walk(&mut exps, 0, max_degree, &mut out);
    out
}

#[test]
fn criterion_9_property_suites() {
    let config =
        stratum_config(Stratum::A1x3N, &NarukiParams::from_ints(0, 0, 0, 0)).unwrap();
    let ideal = config_ideal(&config).unwrap();
    let baseline = buchberger(&ideal, MonomialOrder::Grevlex);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..4 {
        let mut gens: Vec<Poly> = ideal.gens().to_vec();
        gens.shuffle(&mut rng);
        let shuffled = buchberger(&Ideal::new(ideal.nvars(), gens), MonomialOrder::Grevlex);
        assert_eq!(shuffled.basis(), baseline.basis());
    }

    let fixtures: [(usize, Vec<&str>, Vec<&str>); 3] = [
        (4, vec!["x0", "x3"], vec!["x1", "x3"]),
        (3, vec!["x0^2", "x1"], vec!["x0", "x1^3"]),
        (3, vec!["x0 + x1", "x2"], vec!["x0 - x1", "x2"]),
    ];
    for (nvars, a, b) in fixtures {
        let parse = |gens: &[&str]| {
            Ideal::new(nvars, gens.iter().map(|g| parse_poly(g, nvars).unwrap()).collect())
        };
        let (i, j) = (parse(&a), parse(&b));
        let meet = buchberger(&ideal_intersect(&i, &j), MonomialOrder::Grevlex);
        let igb = buchberger(&i, MonomialOrder::Grevlex);
        let jgb = buchberger(&j, MonomialOrder::Grevlex);
        for monomial in monomials_up_to(nvars, 4) {
            assert_eq!(
                meet.contains(&monomial),
                igb.contains(&monomial) && jgb.contains(&monomial),
                "{a:?} meet {b:?} at {monomial}"
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let rationals: Vec<Rational> =
        (0..60).map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=12))).collect();
    ring_laws(&rationals);
    let gaussians: Vec<GaussianInt> = (0..60)
        .map(|_| GaussianInt::new(rng.gen_range(-30..=30), rng.gen_range(-30..=30)))
        .collect();
    ring_laws(&gaussians);
    let eisensteins: Vec<EisensteinInt> = (0..60)
        .map(|_| EisensteinInt::new(rng.gen_range(-30..=30), rng.gen_range(-30..=30)))
        .collect();
    ring_laws(&eisensteins);
    println!("criterion 9: pass - basis uniqueness, intersection membership, ring laws");
}

/// The five suites the binary exposes stay green under their default
/// options; the acceptance criteria above are what their checks verify.
#[test]
fn suites_pass_under_default_options() {
    let mut counts = BTreeMap::new();
    for suite in cli_report::SUITES {
        let report = cli_report::run(suite, &cli_report::Options::default()).expect("suite runs");
        assert!(report.passed(), "{suite}: {:?}", report.checks);
        counts.insert(suite, report.checks.len());
    }
    let ids: BTreeSet<&str> = counts.keys().copied().collect();
    assert_eq!(ids.len(), 5);
}

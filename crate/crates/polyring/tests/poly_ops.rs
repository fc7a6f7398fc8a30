use exact::{rat, rat_int, Rational};
use polyring::{parse_ideal, parse_poly, Monomial, MonomialOrder, Poly, PolyError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(nvars: usize, text: &str) -> Poly {
    parse_poly(text, nvars).expect("fixture parses")
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> Poly {
    let terms = rng.gen_range(0..=5);
    Poly::from_terms(
        nvars,
        (0..terms).map(|_| {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=3)).collect();
            let num = rng.gen_range(-6..=6);
            let den = rng.gen_range(1..=6);
            (Monomial::new(exps), rat(num, den))
        }),
    )
}

fn random_point(rng: &mut ChaCha8Rng, nvars: usize) -> Vec<Rational> {
    (0..nvars)
        .map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
        .collect()
}

#[test]
fn parse_display_round_trip_on_the_grammar_example() {
    let f = p(4, "3/2*x0^2*x3 - x1*x2");
    assert_eq!(f.term_count(), 2);
    assert_eq!(f.coeff(&Monomial::new(vec![2, 0, 0, 1])), rat(3, 2));
    assert_eq!(f.coeff(&Monomial::new(vec![0, 1, 1, 0])), rat(-1, 1));
    assert_eq!(f.to_string(), "3/2*x0^2*x3 - x1*x2");
    assert_eq!(p(4, &f.to_string()), f);
}

#[test]
fn parse_accepts_signs_constants_and_trivial_exponents() {
    assert_eq!(p(2, "x0^0"), Poly::one(2));
    assert_eq!(p(2, "-x0"), -Poly::var(2, 0));
    assert_eq!(p(2, "0"), Poly::zero(2));
    assert_eq!(p(2, "2/4"), Poly::constant(2, rat(1, 2)));
    assert_eq!(p(2, "x0*3"), Poly::var(2, 0).scale(&rat_int(3)));
    assert_eq!(p(2, "x0*x0"), Poly::var(2, 0).pow(2));
    assert_eq!(p(3, "+x1 - x1"), Poly::zero(3));
}

#[test]
fn parse_rejects_malformed_text() {
    for bad in ["", "x10", "x4", "y1", "x0^", "3//2", "x0 +", "1/0", "x0 x1"] {
        let got = parse_poly(bad, 4);
        assert!(
            matches!(got, Err(PolyError::Parse(_))),
            "{bad:?} gave {got:?}"
        );
    }
}

#[test]
fn ideal_files_skip_comments_and_blank_lines() {
    let ideal = parse_ideal("# header\nx0\n\nx3^4 # thickened\n", 4).unwrap();
    assert_eq!(ideal.gens(), &[p(4, "x0"), p(4, "x3^4")]);
    assert!(parse_ideal("x0\nx1 +\n", 4).is_err());
}

#[test]
fn ring_axioms_hold_on_seeded_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let f = random_poly(&mut rng, 3);
        let g = random_poly(&mut rng, 3);
        let h = random_poly(&mut rng, 3);
        assert_eq!(&f + &g, &g + &f);
        assert_eq!(&f * &g, &g * &f);
        assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        assert_eq!(&f - &f, Poly::zero(3));
        assert_eq!(&f * &Poly::one(3), f);
        assert_eq!(&f * &Poly::zero(3), Poly::zero(3));
    }
}

#[test]
fn evaluation_is_a_ring_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..60 {
        let f = random_poly(&mut rng, 3);
        let g = random_poly(&mut rng, 3);
        let pt = random_point(&mut rng, 3);
        assert_eq!((&f + &g).eval(&pt), f.eval(&pt) + g.eval(&pt));
        assert_eq!((&f * &g).eval(&pt), f.eval(&pt) * g.eval(&pt));
    }
}

#[test]
fn derivative_is_linear_and_satisfies_the_product_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..60 {
        let f = random_poly(&mut rng, 3);
        let g = random_poly(&mut rng, 3);
        for i in 0..3 {
            assert_eq!((&f + &g).derivative(i), &f.derivative(i) + &g.derivative(i));
            let product_rule = &(&f.derivative(i) * &g) + &(&f * &g.derivative(i));
            assert_eq!((&f * &g).derivative(i), product_rule);
        }
    }
}

#[test]
fn euler_identity_on_homogeneous_cubics() {
    // sum of x_i * df/dx_i equals degree times f.
    let f = p(4, "x0^3 + 2*x0*x1*x2 - 5/7*x1*x2*x3 - x3^3");
    assert_eq!(f.homogeneous_degree(), Some(3));
    let mut acc = Poly::zero(4);
    for i in 0..4 {
        acc = &acc + &(&Poly::var(4, i) * &f.derivative(i));
    }
    assert_eq!(acc, f.scale(&rat_int(3)));
}

#[test]
fn homogeneity_detection() {
    assert_eq!(p(4, "x0*x1 - x2^2").homogeneous_degree(), Some(2));
    assert_eq!(p(4, "x0 + 1").homogeneous_degree(), None);
    assert_eq!(Poly::zero(4).homogeneous_degree(), None);
    assert_eq!(p(4, "x0 + 1").total_degree(), Some(1));
    assert_eq!(Poly::zero(4).total_degree(), None);
}

#[test]
fn leading_terms_follow_the_declared_order() {
    let f = p(3, "x0*x2 + x1^2");
    let (m, _) = f.leading(MonomialOrder::Grevlex).unwrap();
    assert_eq!(m, &Monomial::new(vec![0, 2, 0]));
    let (m, _) = f.leading(MonomialOrder::Lex).unwrap();
    assert_eq!(m, &Monomial::new(vec![1, 0, 1]));
    assert!(Poly::zero(3).leading(MonomialOrder::Grevlex).is_none());
}

#[test]
fn powers_match_repeated_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..20 {
        let f = random_poly(&mut rng, 2);
        assert_eq!(f.pow(0), Poly::one(2));
        assert_eq!(f.pow(3), &(&f * &f) * &f);
    }
    assert!(Poly::zero(2).pow(2).is_zero());
}

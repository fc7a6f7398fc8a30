use exact::{gauss_divides, rat, rat_int, EisensteinInt, EpsRational, ExactError, GaussianInt};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gi(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(re, im)
}

fn ei(a: i64, b: i64) -> EisensteinInt {
    EisensteinInt::new(a, b)
}

#[test]
fn gauss_divides_fixed_examples() {
    let d = gi(1, -1);
    assert_eq!(gauss_divides(&d, &gi(-2, 0)), Ok(true), "(1-i)(-1-i) = -2");
    assert_eq!(gauss_divides(&d, &gi(1, 0)), Ok(false), "norm 2 does not divide norm 1");
    assert_eq!(gauss_divides(&gi(0, 0), &gi(1, 0)), Err(ExactError::ZeroDivisor));
}

/// Brute-force oracle: search for an explicit quotient q with d*q = x.
fn divides_by_search(d: &GaussianInt, x: &GaussianInt, range: i64) -> bool {
    for qr in -range..=range {
        for qi in -range..=range {
            if &(d * &gi(qr, qi)) == x {
                return true;
            }
        }
    }
    false
}

#[test]
fn gauss_divides_by_one_minus_i_iff_component_sum_even() {
    let d = gi(1, -1);
    for a in -10..=10 {
        for b in -10..=10 {
            let x = gi(a, b);
            let fast = gauss_divides(&d, &x).unwrap();
            // |x/d| <= |x| so the search window covers every possible quotient.
            let slow = divides_by_search(&d, &x, 15);
            assert_eq!(fast, slow, "mismatch vs quotient search at {a}+{b}i");
            assert_eq!(fast, (a + b) % 2 == 0, "parity rule at {a}+{b}i");
        }
    }
}

#[test]
fn gaussian_division_is_euclidean() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let x = gi(rng.gen_range(-60..=60), rng.gen_range(-60..=60));
        let mut d = gi(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        if d.is_zero() {
            d = gi(1, 1);
        }
        let (q, r) = x.div_rem(&d).unwrap();
        assert_eq!(&(&d * &q) + &r, x);
        assert!(r.norm() < d.norm(), "remainder {r} too large for divisor {d}");
    }
}

#[test]
fn eisenstein_division_is_euclidean() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..2000 {
        let x = ei(rng.gen_range(-60..=60), rng.gen_range(-60..=60));
        let mut d = ei(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        if d.is_zero() {
            d = ei(2, 1);
        }
        let (q, r) = x.div_rem(&d).unwrap();
        assert_eq!(&(&d * &q) + &r, x);
        assert!(r.norm() < d.norm(), "remainder {r} too large for divisor {d}");
    }
}

#[test]
fn eisenstein_divisibility_matches_division() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..2000 {
        let x = ei(rng.gen_range(-40..=40), rng.gen_range(-40..=40));
        let mut d = ei(rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        if d.is_zero() {
            d = ei(1, -1);
        }
        let (_, r) = x.div_rem(&d).unwrap();
        assert_eq!(x.divisible_by(&d).unwrap(), r.is_zero());
    }
}

#[test]
fn gaussian_norm_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..2000 {
        let z = gi(rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        let w = gi(rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        assert_eq!((&z * &w).norm(), z.norm() * w.norm());
    }
}

#[test]
fn eisenstein_norm_is_multiplicative_and_matches_conjugate_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..2000 {
        let z = ei(rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        let w = ei(rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        assert_eq!((&z * &w).norm(), z.norm() * w.norm());
        // z * conj(z) is the norm embedded as an ordinary integer.
        let p = &z * &z.conj();
        assert_eq!(p.a, z.norm());
        assert!(p.b.is_zero());
    }
}

#[test]
fn omega_satisfies_its_minimal_polynomial() {
    let w = EisensteinInt::omega();
    let w2 = &w * &w;
    assert_eq!(&(&w2 + &w) + &EisensteinInt::one(), EisensteinInt::zero());
    assert_eq!(&w2 * &w, EisensteinInt::one());
    // conj(w) = w^2 = -1 - w
    assert_eq!(w.conj(), w2);
}

#[test]
fn gaussian_conjugation_is_an_involution_and_i_squares_to_minus_one() {
    let i = GaussianInt::i();
    assert_eq!(&i * &i, -&GaussianInt::one());
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..500 {
        let z = gi(rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        assert_eq!(z.conj().conj(), z);
        let p = &z * &z.conj();
        assert_eq!(p.re, z.norm());
        assert!(p.im.is_zero());
    }
}

#[test]
fn rational_field_axioms_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let random_rat = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(-50i64..=50);
        let d = loop {
            let d = rng.gen_range(-12i64..=12);
            if d != 0 {
                break d;
            }
        };
        rat(n, d)
    };
    for _ in 0..2000 {
        let p = random_rat(&mut rng);
        let q = random_rat(&mut rng);
        let r = random_rat(&mut rng);
        assert_eq!((&p + &q) + &r, &p + &(&q + &r));
        assert_eq!(&p * &(&q + &r), &p * &q + &p * &r);
        if !p.is_zero() {
            assert_eq!(&p * &(rat_int(1) / &p), rat_int(1));
        }
    }
}

#[test]
fn rational_parsing_and_normalization() {
    assert_eq!(exact::parse_rational("5/6").unwrap(), rat(5, 6));
    assert_eq!(exact::parse_rational(" -3/9 ").unwrap(), rat(-1, 3));
    assert_eq!(exact::parse_rational("7").unwrap(), rat_int(7));
    assert!(exact::parse_rational("1/0").is_err());
    assert!(exact::parse_rational("").is_err());
    assert!(exact::parse_rational("x").is_err());
    // Lowest terms and positive denominator are canonical.
    assert_eq!(rat(2, -4), rat(-1, 2));
}

#[test]
fn eps_rational_order_is_lexicographic() {
    let c = |n, d| EpsRational::constant(rat(n, d));
    let third_plus = EpsRational::new(rat(1, 3), rat_int(1));
    assert!(c(1, 3) < third_plus);
    assert!(third_plus < EpsRational::new(rat(1, 3), rat_int(2)));
    assert!(EpsRational::new(rat(1, 3), rat_int(1000)) < c(1, 2));
    assert!(EpsRational::new(rat(1, 3), rat(-1, 1)) < c(1, 3));

    let sum = EpsRational::sum([&third_plus, &third_plus, &third_plus]);
    assert_eq!(sum, EpsRational::new(rat_int(1), rat_int(3)));
    assert_eq!(sum.cmp_rational(&rat_int(1)), std::cmp::Ordering::Greater);

    assert_eq!(format!("{}", EpsRational::new(rat(1, 9), rat_int(1))), "1/9 + ε");
    assert_eq!(format!("{}", EpsRational::new(rat(4, 3), rat_int(3))), "4/3 + 3ε");
    assert_eq!(format!("{}", c(2, 1)), "2");
}

//! The family equation and its tritangent plane limits.

use cubic_pairs::{cayley_cubic, naruki_cubic, tritangent_limit, CubicError, NarukiParams};
use exact::{rat, rat_int, Rational};
use num_traits::Zero;
use polyring::{is_smooth_jacobian, parse_poly, Poly};

fn p(text: &str) -> Poly {
    parse_poly(text, 4).unwrap()
}

#[test]
fn family_is_a_homogeneous_cubic() {
    for (l, m, n, r) in [(2, 3, 5, 7), (1, 1, 1, 1), (-2, 3, -5, 11), (0, 0, 0, 1)] {
        let f = naruki_cubic(&NarukiParams::from_ints(l, m, n, r));
        assert_eq!(f.homogeneous_degree(), Some(3), "at ({l},{m},{n},{r})");
    }
}

#[test]
fn family_degenerates_to_three_planes_at_rho_zero() {
    let planes = p("x0*x1*x2");
    for (l, m, n) in [(2, 3, 5), (7, 11, 13), (-1, 4, 9), (0, 0, 0)] {
        let f = naruki_cubic(&NarukiParams::from_ints(l, m, n, 0));
        assert_eq!(f, planes, "at ({l},{m},{n})");
    }
}

#[test]
fn generic_member_is_smooth() {
    let f = naruki_cubic(&NarukiParams::from_ints(2, 3, 5, 7));
    assert!(is_smooth_jacobian(&f).unwrap());
}

#[test]
fn cayley_member_is_singular_at_the_coordinate_points() {
    let f = cayley_cubic();
    assert!(!is_smooth_jacobian(&f).unwrap());
    // All four partials vanish at each coordinate point.
    for i in 0..4 {
        let mut point = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        point[i] = rat_int(1);
        assert!(f.eval(&point).is_zero());
        for j in 0..4 {
            assert!(f.derivative(j).eval(&point).is_zero(), "d{j} at e{i}");
        }
    }
}

#[test]
fn four_nodal_member_sits_at_the_unit_parameter_point() {
    // lambda = mu = nu = 0, rho = 1 lands exactly on the four-nodal
    // surface.
    let f = naruki_cubic(&NarukiParams::from_ints(0, 0, 0, 1));
    assert_eq!(f, cayley_cubic());
}

#[test]
fn tritangent_limits_match_their_closed_forms() {
    let params = NarukiParams::from_ints(2, 3, 5, 0);
    assert_eq!(tritangent_limit("(p,)", &params).unwrap(), p("x0"));
    assert_eq!(
        tritangent_limit("(theta)", &params).unwrap(),
        p("2*x0 + 3*x1 + 5*x2 - x3"),
    );
}

#[test]
fn tritangent_limits_share_the_two_expected_points() {
    // Both limit planes contain [0:1:0:mu] and [0:0:1:nu]; their common
    // line is the limit of the line they cut out.
    let params = NarukiParams::new(rat(1, 2), rat(5, 3), rat(-7, 4), Rational::zero());
    let b3 = [Rational::zero(), rat_int(1), Rational::zero(), rat(5, 3)];
    let c3 = [Rational::zero(), Rational::zero(), rat_int(1), rat(-7, 4)];
    for name in ["(p,)", "(theta)"] {
        let plane = tritangent_limit(name, &params).unwrap();
        assert!(plane.eval(&b3).is_zero(), "{name} through [0:1:0:mu]");
        assert!(plane.eval(&c3).is_zero(), "{name} through [0:0:1:nu]");
    }
}

#[test]
fn unknown_tritangent_names_are_rejected() {
    let params = NarukiParams::from_ints(2, 3, 5, 0);
    assert_eq!(
        tritangent_limit("(sigma)", &params),
        Err(CubicError::UnknownTritangent("(sigma)".to_string())),
    );
}

use ball_lattice::{gaussian_matrix_from_json, parse_gaussian, prym_reflections, LatticeError};
use exact::GaussianInt;

fn g(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(re, im)
}

#[test]
fn scalar_forms_parse() {
    let cases = [
        ("0", g(0, 0)),
        ("3", g(3, 0)),
        ("-2", g(-2, 0)),
        ("i", g(0, 1)),
        ("-i", g(0, -1)),
        ("2i", g(0, 2)),
        ("1-i", g(1, -1)),
        ("1+i", g(1, 1)),
        ("-4+3i", g(-4, 3)),
        ("-1 - 2i", g(-1, -2)),
        ("10-100i", g(10, -100)),
    ];
    for (text, want) in cases {
        assert_eq!(parse_gaussian(text).unwrap(), want, "parsing {text:?}");
    }
}

#[test]
fn malformed_scalars_are_rejected() {
    for text in ["", "x", "1+", "ii", "i3", "1+1", "2.5", "1+i+i"] {
        assert!(
            matches!(parse_gaussian(text), Err(LatticeError::Parse(_))),
            "expected parse failure for {text:?}"
        );
    }
}

#[test]
fn matrices_read_from_json_rows() {
    let [alpha, _, _] = prym_reflections();
    let m = gaussian_matrix_from_json(r#"[["-1", "1-i"], ["0", "1"]]"#).unwrap();
    assert_eq!(m, alpha);
}

#[test]
fn ragged_or_unreadable_json_is_rejected() {
    assert!(matches!(
        gaussian_matrix_from_json(r#"[["1"], ["0", "1"]]"#),
        Err(LatticeError::Exact(_))
    ));
    assert!(matches!(gaussian_matrix_from_json("not json"), Err(LatticeError::Parse(_))));
    assert!(matches!(
        gaussian_matrix_from_json(r#"[["1", "oops"]]"#),
        Err(LatticeError::Parse(_))
    ));
}

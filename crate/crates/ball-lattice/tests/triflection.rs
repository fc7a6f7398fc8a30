use ball_lattice::{preserves_form, triflection, HermitianForm, LatticeError};
use exact::{EisensteinInt, Matrix};

fn e(a: i64, b: i64) -> EisensteinInt {
    EisensteinInt::new(a, b)
}

fn form(rows: Vec<Vec<EisensteinInt>>) -> HermitianForm<EisensteinInt> {
    HermitianForm::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

fn diag_minus_three() -> HermitianForm<EisensteinInt> {
    form(vec![vec![e(-3, 0), e(0, 0)], vec![e(0, 0), e(-3, 0)]])
}

#[test]
fn rank_one_root_gives_multiplication_by_omega() {
    let l = form(vec![vec![e(-3, 0)]]);
    let t = triflection(&[e(1, 0)], &l).unwrap();
    assert_eq!(*t.at(0, 0), EisensteinInt::omega());
    let cube = t.mul(&t).unwrap().mul(&t).unwrap();
    assert!(cube.is_identity());
    assert!(!t.is_identity());
    assert!(!t.mul(&t).unwrap().is_identity());
}

#[test]
fn unit_scaling_of_the_root_gives_the_same_triflection() {
    let l = diag_minus_three();
    let from_one = triflection(&[e(1, 0), e(0, 0)], &l).unwrap();
    let from_omega = triflection(&[e(0, 1), e(0, 0)], &l).unwrap();
    assert_eq!(from_one, from_omega);
    let expected = Matrix::from_rows(vec![
        vec![EisensteinInt::omega(), e(0, 0)],
        vec![e(0, 0), e(1, 0)],
    ])
    .unwrap();
    assert_eq!(from_one, expected);
}

/// A lattice whose off-diagonal entry is the purely imaginary 1 + 2w
/// (a square root of -3), giving a triflection with genuine mixing.
#[test]
fn mixing_fixture_cubes_to_the_identity_and_preserves_the_form() {
    let t_entry = e(1, 2);
    let l = form(vec![vec![e(-3, 0), t_entry.clone()], vec![-&t_entry, e(-3, 0)]]);
    let root = [e(1, 0), e(0, 0)];
    let t = triflection(&root, &l).unwrap();
    let expected =
        Matrix::from_rows(vec![vec![e(0, 1), e(1, 1)], vec![e(0, 0), e(1, 0)]]).unwrap();
    assert_eq!(t, expected);
    assert!(t.mul(&t).unwrap().mul(&t).unwrap().is_identity());
    assert!(!t.is_identity());
    assert!(preserves_form(&t, &l).unwrap());
    // The root is an omega-eigenvector of its own triflection.
    let col = Matrix::from_rows(root.iter().map(|x| vec![x.clone()]).collect()).unwrap();
    assert_eq!(t.mul(&col).unwrap(), col.scalar_mul(&EisensteinInt::omega()));
}

#[test]
fn roots_of_the_wrong_norm_are_rejected() {
    let l = diag_minus_three();
    let err = triflection(&[e(1, 0), e(1, 0)], &l).unwrap_err();
    assert_eq!(err, LatticeError::RootNorm { found: e(-6, 0) });
}

#[test]
fn inadmissible_roots_surface_as_non_integrality() {
    let l = form(vec![vec![e(-1, 0), e(0, 0)], vec![e(0, 0), e(-2, 0)]]);
    let err = triflection(&[e(1, 0), e(1, 0)], &l).unwrap_err();
    assert_eq!(err, LatticeError::NonIntegralTriflection { row: 0, col: 0 });
}

#[test]
fn root_length_must_match_the_form() {
    let l = diag_minus_three();
    assert!(matches!(triflection(&[e(1, 0)], &l), Err(LatticeError::Dimension(_))));
}

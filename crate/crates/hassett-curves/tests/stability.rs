use exact::{rat, rat_int, EpsRational};
use hassett_curves::{is_weighted_stable, parse_config, HassettError, Violation};

fn quarter_eps(n: usize) -> Vec<EpsRational> {
    vec![EpsRational::new(rat(1, 4), rat_int(1)); n]
}

fn ones(n: usize) -> Vec<EpsRational> {
    vec![EpsRational::constant(rat_int(1)); n]
}

#[test]
fn eight_distinct_points_on_one_component_are_stable() {
    let cfg = parse_config("A 1@A 2@A 3@A 4@A 5@A 6@A 7@A 8@A").unwrap();
    let verdict = is_weighted_stable(&cfg, &quarter_eps(8)).unwrap();
    assert!(verdict.ok, "{:?}", verdict.violations);
}

#[test]
fn three_point_tail_is_underweight_at_quarter_weights() {
    let cfg = parse_config("A B A-B 1@A 2@A 3@A 4@B 5@B 6@B 7@B 8@B").unwrap();
    // With unit weights both components clear the bound.
    assert!(is_weighted_stable(&cfg, &ones(8)).unwrap().ok);
    // At 1/4 + e the three-point side has 1 + 3/4 + 3e, short of 2.
    let verdict = is_weighted_stable(&cfg, &quarter_eps(8)).unwrap();
    assert!(!verdict.ok);
    assert_eq!(
        verdict.violations,
        vec![Violation::ComponentUnderweight {
            component: "A".into(),
            nodes: 1,
            total: "7/4 + 3ε".into(),
        }]
    );
}

#[test]
fn four_point_coincidence_class_is_overweight_at_quarter_weights() {
    let cfg = parse_config("A {1,2,3,4}@A 5@A 6@A 7@A 8@A").unwrap();
    let verdict = is_weighted_stable(&cfg, &quarter_eps(8)).unwrap();
    assert!(!verdict.ok);
    assert_eq!(
        verdict.violations,
        vec![Violation::CoincidenceOverweight {
            component: "A".into(),
            marks: vec![1, 2, 3, 4],
            total: "1 + 4ε".into(),
        }]
    );
}

#[test]
fn balanced_two_component_splitting_is_stable_at_quarter_weights() {
    let cfg = parse_config("A B A-B 1@A 2@A 3@A 4@A 5@B 6@B 7@B 8@B").unwrap();
    let verdict = is_weighted_stable(&cfg, &quarter_eps(8)).unwrap();
    assert!(verdict.ok, "{:?}", verdict.violations);
}

#[test]
fn wall_values_follow_the_stated_inequalities() {
    // A class of total exactly 1 is allowed (five half-weights keep the
    // component total above 2).
    let cfg = parse_config("A {1,2}@A 3@A 4@A 5@A").unwrap();
    let half5 = vec![EpsRational::constant(rat(1, 2)); 5];
    assert!(is_weighted_stable(&cfg, &half5).unwrap().ok);

    // A component total of exactly 2 is not.
    let two_each = parse_config("A 1@A 2@A 3@A 4@A").unwrap();
    let half = vec![EpsRational::constant(rat(1, 2)); 4];
    let verdict = is_weighted_stable(&two_each, &half).unwrap();
    assert!(!verdict.ok);
    assert!(matches!(
        verdict.violations[0],
        Violation::ComponentUnderweight { nodes: 0, .. }
    ));
}

#[test]
fn unit_weights_reproduce_three_special_points_stability() {
    // Middle component with no marks has only 2 special points.
    let cfg = parse_config("A B C A-B B-C 1@A 2@A 3@C 4@C 5@C").unwrap();
    let verdict = is_weighted_stable(&cfg, &ones(5)).unwrap();
    assert_eq!(
        verdict.violations,
        vec![Violation::ComponentUnderweight { component: "B".into(), nodes: 2, total: "2".into() }]
    );

    // Give the middle component a mark and everything clears.
    let cfg = parse_config("A B C A-B B-C 1@A 2@A 3@B 4@C 5@C").unwrap();
    assert!(is_weighted_stable(&cfg, &ones(5)).unwrap().ok);
}

#[test]
fn weight_validation_errors() {
    let cfg = parse_config("A 1@A 2@A 3@A").unwrap();
    let mut b = ones(3);
    b[0] = EpsRational::constant(rat_int(0));
    assert!(matches!(
        is_weighted_stable(&cfg, &b),
        Err(HassettError::WeightOutOfRange(_))
    ));
    let mut b = ones(3);
    b[2] = EpsRational::new(rat_int(1), rat_int(1));
    assert!(matches!(
        is_weighted_stable(&cfg, &b),
        Err(HassettError::WeightOutOfRange(_))
    ));
    assert!(matches!(
        is_weighted_stable(&cfg, &ones(2)),
        Err(HassettError::WeightCount { expected: 3, got: 2 })
    ));
    // A bare infinitesimal is a legal positive weight.
    let mut b = ones(3);
    b[1] = EpsRational::epsilon(rat_int(1));
    assert!(is_weighted_stable(&cfg, &b).is_ok());
}

#[test]
fn config_parsing_and_normalization() {
    let a = parse_config("A B A-B {1,2,3}@A 4@B 5@B 6@B 7@B 8@B").unwrap();
    let b = parse_config("B A; 8@B 7@B 6@B 5@B 4@B; B-A; {3,2,1}@A").unwrap();
    assert_eq!(a, b);
    assert_eq!(parse_config(&a.to_text()).unwrap(), a);

    assert!(matches!(parse_config(""), Err(HassettError::Parse(_))));
    assert!(matches!(parse_config("A A 1@A 2@A 3@A"), Err(HassettError::DuplicateComponent(_))));
    assert!(matches!(parse_config("A 1@B 2@A 3@A"), Err(HassettError::UnknownComponent(_))));
    assert!(matches!(parse_config("A A-A 1@A 2@A 3@A"), Err(HassettError::SelfLoop(_))));
    assert!(matches!(parse_config("A B 1@A 2@A 3@A"), Err(HassettError::NotATree)));
    assert!(matches!(parse_config("A 1@A 1@A 2@A"), Err(HassettError::DuplicateMark(1))));
    assert!(matches!(parse_config("A 1@A 3@A 4@A"), Err(HassettError::MissingMark(2))));
    assert!(matches!(parse_config("A {1,2@A 3@A"), Err(HassettError::Parse(_))));
    assert!(matches!(parse_config("A 0@A 1@A"), Err(HassettError::Parse(_))));
}

#[test]
fn verdicts_serialize_with_kind_tags() {
    let cfg = parse_config("A {1,2,3,4}@A 5@A 6@A 7@A 8@A").unwrap();
    let verdict = is_weighted_stable(&cfg, &quarter_eps(8)).unwrap();
    let v = serde_json::to_value(&verdict).unwrap();
    assert_eq!(v["ok"], serde_json::json!(false));
    assert_eq!(v["violations"][0]["kind"], "CoincidenceOverweight");
    assert_eq!(v["violations"][0]["marks"], serde_json::json!([1, 2, 3, 4]));
}

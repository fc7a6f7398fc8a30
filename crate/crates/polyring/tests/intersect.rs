use polyring::{buchberger, ideal_intersect, parse_poly, Ideal, Monomial, MonomialOrder, Poly};

fn p(nvars: usize, text: &str) -> Poly {
    parse_poly(text, nvars).expect("fixture parses")
}

fn ideal(nvars: usize, gens: &[&str]) -> Ideal {
    Ideal::new(nvars, gens.iter().map(|g| p(nvars, g)).collect())
}

fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
    buchberger(a, MonomialOrder::Grevlex) == buchberger(b, MonomialOrder::Grevlex)
}

fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    enumerate(&mut exps, 0, max_degree, &mut out);
    out
}

fn enumerate(exps: &mut Vec<u32>, slot: usize, budget: u32, out: &mut Vec<Poly>) {
    if slot == exps.len() {
        out.push(Poly::monomial(
            Monomial::new(exps.clone()),
            exact::rat_int(1),
        ));
        return;
    }
    for e in 0..=budget {
        exps[slot] = e;
        enumerate(exps, slot + 1, budget - e, out);
    }
    exps[slot] = 0;
}

#[test]
fn intersection_with_itself_is_identity() {
    for (nvars, gens) in [
        (4usize, vec!["x0", "x3"]),
        (4, vec!["x0*x1 - x2*x3"]),
        (3, vec!["x0^2", "x1 - x2"]),
    ] {
        let i = ideal(nvars, &gens);
        assert!(same_ideal(&ideal_intersect(&i, &i), &i));
    }
}

#[test]
fn principal_ideals_intersect_in_their_product() {
    // With coprime generators the intersection is the product ideal.
    let got = ideal_intersect(&ideal(4, &["x0"]), &ideal(4, &["x1"]));
    assert!(same_ideal(&got, &ideal(4, &["x0*x1"])));
}

#[test]
fn two_coordinate_lines_through_a_common_plane() {
    let i = ideal(4, &["x0", "x3"]);
    let j = ideal(4, &["x1", "x3"]);
    let got = ideal_intersect(&i, &j);
    assert!(same_ideal(&got, &ideal(4, &["x3", "x0*x1"])));

    // Independent check on every monomial of degree at most two.
    let gotgb = buchberger(&got, MonomialOrder::Grevlex);
    for m in monomials_up_to(4, 2) {
        assert_eq!(gotgb.contains(&m), i.contains(&m) && j.contains(&m), "{m}");
    }
}

#[test]
fn membership_matches_brute_force_to_degree_four() {
    let fixtures: Vec<(usize, Vec<&str>, Vec<&str>)> = vec![
        (4, vec!["x0", "x3"], vec!["x1", "x3"]),
        (3, vec!["x0"], vec!["x1"]),
        (4, vec!["x0", "x3^4"], vec!["x1", "x3^4"]),
        (3, vec!["x0^2", "x1"], vec!["x0", "x1^3"]),
        (3, vec!["x0 + x1", "x2"], vec!["x0 - x1", "x2"]),
    ];
    for (nvars, a, b) in fixtures {
        let i = ideal(nvars, &a);
        let j = ideal(nvars, &b);
        let meet = buchberger(&ideal_intersect(&i, &j), MonomialOrder::Grevlex);
        let igb = buchberger(&i, MonomialOrder::Grevlex);
        let jgb = buchberger(&j, MonomialOrder::Grevlex);
        for m in monomials_up_to(nvars, 4) {
            assert_eq!(
                meet.contains(&m),
                igb.contains(&m) && jgb.contains(&m),
                "{a:?} meet {b:?} at {m}"
            );
        }
    }
}

#[test]
fn intersection_is_commutative_and_associative() {
    let a = ideal(4, &["x0", "x1 + x2 - x3"]);
    let b = ideal(4, &["x1", "x0 + x2 - x3"]);
    let c = ideal(4, &["x2", "x0 + x1 - x3"]);
    assert!(same_ideal(&ideal_intersect(&a, &b), &ideal_intersect(&b, &a)));
    let left = ideal_intersect(&ideal_intersect(&a, &b), &c);
    let right = ideal_intersect(&a, &ideal_intersect(&b, &c));
    assert!(same_ideal(&left, &right));
}

#[test]
fn zero_and_unit_ideals_are_absorbing_and_neutral() {
    let i = ideal(3, &["x0^2", "x1 - x2"]);
    let zero = Ideal::new(3, vec![]);
    assert!(ideal_intersect(&i, &zero).gens().is_empty());
    assert!(ideal_intersect(&zero, &i).gens().is_empty());
    let unit = ideal(3, &["1"]);
    assert!(same_ideal(&ideal_intersect(&i, &unit), &i));
}

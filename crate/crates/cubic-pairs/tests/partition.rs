//! The nine-tritangent partition of the 27 lines.

use cubic_pairs::{line_limit_table, tritangent_partition};
use std::collections::BTreeSet;

#[test]
fn nine_triples_partition_the_twenty_seven_lines() {
    let triples = tritangent_partition();
    assert_eq!(triples.len(), 9);
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for triple in &triples {
        for line in triple.lines {
            assert!(seen.insert(line), "{line} appears twice");
        }
    }
    assert_eq!(seen.len(), 27);
    // Schlaefli census: six a-lines, six b-lines, fifteen c-lines.
    assert_eq!(seen.iter().filter(|l| l.starts_with('a')).count(), 6);
    assert_eq!(seen.iter().filter(|l| l.starts_with('b')).count(), 6);
    assert_eq!(seen.iter().filter(|l| l.starts_with('c')).count(), 15);
}

#[test]
fn partition_tritangents_are_pairwise_distinct() {
    let triples = tritangent_partition();
    let weyl: BTreeSet<&str> = triples.iter().map(|t| t.weyl).collect();
    let cayley: BTreeSet<&str> = triples.iter().map(|t| t.cayley).collect();
    assert_eq!(weyl.len(), 9);
    assert_eq!(cayley.len(), 9);
}

#[test]
fn mixed_triples_pair_an_a_and_b_line_with_the_joining_c_line() {
    // Triples not made of three c-lines have the shape {a_i, b_j, c_ij}.
    for triple in tritangent_partition() {
        let c_count = triple.lines.iter().filter(|l| l.starts_with('c')).count();
        if c_count == 3 {
            continue;
        }
        assert_eq!(c_count, 1);
        let a = triple.lines.iter().find(|l| l.starts_with('a')).unwrap();
        let b = triple.lines.iter().find(|l| l.starts_with('b')).unwrap();
        let c = triple.lines.iter().find(|l| l.starts_with('c')).unwrap();
        let (i, j) = (&a[1..], &b[1..]);
        let digits = &c[1..];
        let expected = [format!("{i}{j}"), format!("{j}{i}")];
        assert!(
            expected.iter().any(|e| e == digits),
            "{a} {b} should join via c with digits {{{i},{j}}}, got {c}"
        );
    }
}

#[test]
fn partition_shares_exactly_three_planes_with_the_limit_table() {
    let table_names: BTreeSet<&str> = line_limit_table()
        .iter()
        .flat_map(|r| [r.tritangents.0, r.tritangents.1])
        .collect();
    let shared: BTreeSet<&str> = tritangent_partition()
        .iter()
        .map(|t| t.cayley)
        .filter(|name| table_names.contains(name))
        .collect();
    let expected: BTreeSet<&str> = ["(w)", "(theta)", "(thetabar)"].into_iter().collect();
    assert_eq!(shared, expected);
}

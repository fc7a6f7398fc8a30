use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use exact::Rational;
use num_traits::{One, Zero};

use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;

/// Reduced Groebner basis: every element monic, no leading monomial
/// dividing another, no term of any element divisible by another element's
/// leading monomial. For a fixed order this representation of an ideal is
/// unique, so structural equality decides ideal equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    basis: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading(self.order).expect("basis elements are nonzero").0.clone())
            .collect()
    }

    /// The whole ring: basis is exactly `{1}`.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].total_degree() == Some(0)
    }

    /// Full normal form: the unique representative of `f` modulo the ideal
    /// with no term divisible by any basis leading monomial.
    pub fn reduce(&self, f: &Poly) -> Poly {
        assert_eq!(f.nvars(), self.nvars, "polynomial arity mismatch");
        let basis: Vec<SortedPoly> = self.basis.iter().map(|g| sorted_from(g, self.order)).collect();
        into_poly(self.nvars, normal_form(sorted_from(f, self.order), &basis, self.order))
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }
}

// Engine representation: terms strictly descending under the active order.
// Keeps head access O(1) and addition a linear merge.
type Term = (Monomial, Rational);
type SortedPoly = Vec<Term>;

fn sorted_from(p: &Poly, order: MonomialOrder) -> SortedPoly {
    let mut v: SortedPoly = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    v.sort_by(|a, b| order.cmp(&b.0, &a.0));
    v
}

fn into_poly(nvars: usize, s: SortedPoly) -> Poly {
    Poly::from_terms(nvars, s)
}

// target + c * x^shift * g, both term lists descending.
fn add_scaled(
    target: &SortedPoly,
    c: &Rational,
    shift: &Monomial,
    g: &SortedPoly,
    order: MonomialOrder,
) -> SortedPoly {
    let shifted: Vec<Monomial> = g.iter().map(|(m, _)| m.mul(shift)).collect();
    let mut out = Vec::with_capacity(target.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < target.len() && j < g.len() {
        match order.cmp(&target[i].0, &shifted[j]) {
            Ordering::Greater => {
                out.push(target[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((shifted[j].clone(), c * &g[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let coeff = &target[i].1 + &(c * &g[j].1);
                if !coeff.is_zero() {
                    out.push((shifted[j].clone(), coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&target[i..]);
    while j < g.len() {
        out.push((shifted[j].clone(), c * &g[j].1));
        j += 1;
    }
    out
}

fn scale_shift(f: &SortedPoly, c: &Rational, shift: &Monomial) -> SortedPoly {
    f.iter().map(|(m, q)| (m.mul(shift), c * q)).collect()
}

fn spoly(f: &SortedPoly, g: &SortedPoly, order: MonomialOrder) -> SortedPoly {
    let (fm, fc) = &f[0];
    let (gm, gc) = &g[0];
    let l = fm.lcm(gm);
    let a = scale_shift(f, &(Rational::one() / fc), &l.div(fm).expect("lcm divisible"));
    add_scaled(
        &a,
        &(-(Rational::one() / gc)),
        &l.div(gm).expect("lcm divisible"),
        g,
        order,
    )
}

// Divisor search walks the basis from index 0, so reduction paths are
// reproducible.
fn normal_form(f: SortedPoly, basis: &[SortedPoly], order: MonomialOrder) -> SortedPoly {
    let mut rest = f;
    let mut out: SortedPoly = Vec::new();
    'outer: while !rest.is_empty() {
        for g in basis {
            let (glm, glc) = &g[0];
            if glm.divides(&rest[0].0) {
                let q = rest[0].0.div(glm).expect("divisor checked");
                let s = -(&rest[0].1 / glc);
                rest = add_scaled(&rest, &s, &q, g, order);
                continue 'outer;
            }
        }
        out.push(rest.remove(0));
    }
    out
}

// Critical pairs pop smallest first: minimal lcm total degree, ties broken
// by the lcm exponent vector and then the index pair, so runs are
// reproducible.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

fn pair_key(basis: &[SortedPoly], i: usize, j: usize) -> PairKey {
    let lcm = basis[i][0].0.lcm(&basis[j][0].0);
    PairKey { degree: lcm.degree(), lcm, i, j }
}

/// Buchberger's algorithm with the coprimality and chain criteria, followed
/// by inter-reduction. Output is the reduced basis, elements sorted with the
/// largest leading monomial first.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let nvars = ideal.nvars();
    let mut basis: Vec<SortedPoly> = ideal.gens().iter().map(|g| sorted_from(g, order)).collect();

    let mut pending: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending_idx: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert(pair_key(&basis, i, j));
            pending_idx.insert((i, j));
        }
    }

    while let Some(key) = pending.pop_first() {
        let (i, j) = (key.i, key.j);
        pending_idx.remove(&(i, j));

        // Coprime leading monomials: the S-polynomial reduces to zero on its own.
        if basis[i][0].0.coprime(&basis[j][0].0) {
            continue;
        }
        // Chain criterion: a third element dividing the lcm whose pairs with
        // both endpoints are already settled. Settled pairs left the pending
        // set strictly earlier, so the justifications cannot be circular.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&key.lcm)
                && !pending_idx.contains(&ordered(i, k))
                && !pending_idx.contains(&ordered(j, k))
        });
        if chained {
            continue;
        }

        let h = normal_form(spoly(&basis[i], &basis[j], order), &basis, order);
        if !h.is_empty() {
            let new = basis.len();
            basis.push(h);
            for l in 0..new {
                pending.insert(pair_key(&basis, l, new));
                pending_idx.insert((l, new));
            }
        }
    }

    // Minimalize: drop any element whose leading monomial another one
    // divides; among equal leading monomials the earliest survives.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[i] || !keep[j] {
                continue;
            }
            let (mi, mj) = (&basis[i][0].0, &basis[j][0].0);
            if mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
            }
        }
    }
    let mut minimal: Vec<SortedPoly> = basis
        .into_iter()
        .zip(&keep)
        .filter_map(|(g, &k)| if k { Some(g) } else { None })
        .collect();

    // Tail-reduce each survivor against the others. Leading monomials are
    // pairwise non-dividing, so heads are untouched and one pass suffices.
    for idx in 0..minimal.len() {
        let others: Vec<SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(l, g)| if l != idx { Some(g.clone()) } else { None })
            .collect();
        let reduced = normal_form(minimal[idx].clone(), &others, order);
        debug_assert!(!reduced.is_empty());
        minimal[idx] = reduced;
    }

    for g in &mut minimal {
        let lc = g[0].1.clone();
        for (_, c) in g.iter_mut() {
            *c /= &lc;
        }
    }

    minimal.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));

    debug_assert!(
        (0..minimal.len()).all(|i| (0..minimal.len())
            .all(|j| i == j || !minimal[j][0].0.divides(&minimal[i][0].0))),
        "reduced basis has a dividing leading monomial"
    );

    GroebnerBasis {
        order,
        nvars,
        basis: minimal.into_iter().map(|g| into_poly(nvars, g)).collect(),
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

use crate::groebner::buchberger;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;

/// Finitely generated ideal in a fixed polynomial ring. Zero generators are
/// dropped at construction, so the zero ideal has an empty generator list.
#[derive(Debug, Clone)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Poly>) -> Self {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator arity mismatch");
        }
        Ideal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens
            .iter()
            .filter_map(Poly::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Membership via a fresh grevlex Groebner basis. Convenient for tests
    /// and one-off queries; batch callers should compute the basis once.
    pub fn contains(&self, f: &Poly) -> bool {
        buchberger(self, MonomialOrder::Grevlex).contains(f)
    }
}

/// Intersection by the auxiliary-variable construction: the ideal
/// `t*I + (1-t)*J` in one more variable meets the original ring exactly in
/// `I` ∩ `J`, so a basis under an order eliminating `t` hands back
/// generators once the `t`-bearing elements are discarded.
///
/// The surviving elements form a grevlex Groebner basis of the
/// intersection, so chained intersections stay canonical.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Ideal {
    assert_eq!(a.nvars, b.nvars, "ambient ring mismatch");
    if a.gens.is_empty() {
        return a.clone();
    }
    if b.gens.is_empty() {
        return b.clone();
    }
    let n = a.nvars;
    let t = Poly::var(n + 1, 0);
    let one_minus_t = &Poly::one(n + 1) - &t;
    let mut gens = Vec::with_capacity(a.gens.len() + b.gens.len());
    for f in &a.gens {
        gens.push(&t * &insert_front_var(f));
    }
    for g in &b.gens {
        gens.push(&one_minus_t * &insert_front_var(g));
    }
    let gb = buchberger(&Ideal::new(n + 1, gens), MonomialOrder::Elimination(1));
    let kept: Vec<Poly> = gb
        .basis()
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exps()[0] == 0))
        .map(drop_front_var)
        .collect();
    Ideal::new(n, kept)
}

fn insert_front_var(p: &Poly) -> Poly {
    Poly::from_terms(
        p.nvars() + 1,
        p.terms().map(|(m, c)| {
            let mut exps = Vec::with_capacity(m.nvars() + 1);
            exps.push(0);
            exps.extend_from_slice(m.exps());
            (Monomial::new(exps), c.clone())
        }),
    )
}

fn drop_front_var(p: &Poly) -> Poly {
    Poly::from_terms(
        p.nvars() - 1,
        p.terms().map(|(m, c)| {
            assert_eq!(m.exps()[0], 0, "auxiliary variable not eliminated");
            (Monomial::new(m.exps()[1..].to_vec()), c.clone())
        }),
    )
}

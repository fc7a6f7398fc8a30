use std::collections::BTreeMap;

use exact::{BigInt, GaussianInt, Matrix};

use crate::forms::{preserves_form, HermitianForm};
use crate::LatticeError;

/// A Gaussian matrix certified at construction to preserve a Hermitian
/// form.
#[derive(Clone, Debug)]
pub struct UnitaryMatrix<'a> {
    matrix: Matrix<GaussianInt>,
    form: &'a HermitianForm<GaussianInt>,
}

impl<'a> UnitaryMatrix<'a> {
    /// Certifies conj(g)^t . H . g = H; fails with `NotUnitary` otherwise.
    pub fn new(
        matrix: Matrix<GaussianInt>,
        form: &'a HermitianForm<GaussianInt>,
    ) -> Result<Self, LatticeError> {
        if !preserves_form(&matrix, form)? {
            return Err(LatticeError::NotUnitary);
        }
        Ok(UnitaryMatrix { matrix, form })
    }

    pub fn matrix(&self) -> &Matrix<GaussianInt> {
        &self.matrix
    }

    pub fn form(&self) -> &HermitianForm<GaussianInt> {
        self.form
    }
}

/// Closure of a generating set under multiplication, with the multiset of
/// element orders.
#[derive(Clone, Debug)]
pub struct GroupReport {
    elements: Vec<Matrix<GaussianInt>>,
    order_census: BTreeMap<usize, usize>,
}

impl GroupReport {
    /// The group elements, in the deterministic order of their canonical
    /// byte encodings.
    pub fn elements(&self) -> &[Matrix<GaussianInt>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Multiplicative element orders, as order -> count.
    pub fn order_census(&self) -> &BTreeMap<usize, usize> {
        &self.order_census
    }

    pub fn contains(&self, m: &Matrix<GaussianInt>) -> bool {
        self.elements.iter().any(|e| e == m)
    }
}

fn push_int(out: &mut Vec<u8>, x: &BigInt) {
    let bytes = x.to_signed_bytes_le();
    out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(&bytes);
}

/// Canonical byte encoding of a Gaussian matrix; used for set membership
/// during closure and for the deterministic ordering of the element list.
fn encode(m: &Matrix<GaussianInt>) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&(m.rows() as u32).to_le_bytes());
    out.extend_from_slice(&(m.cols() as u32).to_le_bytes());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = m.at(i, j);
            push_int(&mut out, &e.re);
            push_int(&mut out, &e.im);
        }
    }
    out
}

/// Multiplicative order by repeated multiplication.  On elements of a
/// finite closure the order divides the group order, so the bound is never
/// hit; it guards against misuse on non-closure matrices.
fn element_order(
    m: &Matrix<GaussianInt>,
    identity: &Matrix<GaussianInt>,
    bound: usize,
) -> Result<usize, LatticeError> {
    let mut acc = m.clone();
    let mut ord = 1;
    while acc != *identity {
        acc = acc.mul(m)?;
        ord += 1;
        if ord > bound {
            return Err(LatticeError::ClosureCapExceeded { cap: bound });
        }
    }
    Ok(ord)
}

/// The multiplicative closure of `gens`, failing once it grows past `cap`.
///
/// Every generator is already certified unitary, and a closed set of
/// form-preserving matrices consists of finite-order elements, so closure
/// under products alone is the generated group (each inverse appears as a
/// power).  A closure that exceeds `cap` signals generators of infinite
/// order or a cap that is too small.
pub fn generate_group(
    gens: &[UnitaryMatrix],
    cap: usize,
) -> Result<GroupReport, LatticeError> {
    let dim = match gens.first() {
        None => return Err(LatticeError::Dimension("no generators".into())),
        Some(first) => first.matrix().rows(),
    };
    if gens.iter().any(|g| g.matrix().rows() != dim) {
        return Err(LatticeError::Dimension("generators of mixed dimension".into()));
    }
    if cap == 0 {
        return Err(LatticeError::ClosureCapExceeded { cap });
    }
    let identity: Matrix<GaussianInt> = Matrix::identity(dim);
    let mut seen: BTreeMap<Vec<u8>, Matrix<GaussianInt>> = BTreeMap::new();
    seen.insert(encode(&identity), identity.clone());
    let mut work = vec![identity.clone()];
    while let Some(x) = work.pop() {
        for gen in gens {
            let y = x.mul(gen.matrix())?;
            let key = encode(&y);
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() >= cap {
                return Err(LatticeError::ClosureCapExceeded { cap });
            }
            seen.insert(key, y.clone());
            work.push(y);
        }
    }
    let elements: Vec<_> = seen.into_values().collect();
    let mut order_census = BTreeMap::new();
    for e in &elements {
        let ord = element_order(e, &identity, elements.len())?;
        *order_census.entry(ord).or_insert(0) += 1;
    }
    Ok(GroupReport { elements, order_census })
}

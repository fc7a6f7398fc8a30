use exact::{EisensteinInt, Matrix};

use crate::forms::HermitianForm;
use crate::LatticeError;

/// The order-3 complex reflection attached to a root of self-pairing -3:
/// the matrix of x -> x - (1 - omega) (h(r, x) / r.r) r over the
/// Eisenstein integers.
///
/// The root must satisfy h(r, r) = -3.  The matrix must come out integral;
/// a non-integral entry means the root is not admissible for the lattice
/// (admissibility is usually stated through the dual lattice, which this
/// check covers a posteriori without constructing it).  The result T
/// satisfies T r = omega r, T^3 = I, and preserves the form.
pub fn triflection(
    r: &[EisensteinInt],
    form: &HermitianForm<EisensteinInt>,
) -> Result<Matrix<EisensteinInt>, LatticeError> {
    let n = form.dim();
    if r.len() != n {
        return Err(LatticeError::Dimension(format!(
            "root of length {} against a dimension {n} form",
            r.len()
        )));
    }
    let norm = form.pairing(r, r)?;
    if norm != EisensteinInt::new(-3, 0) {
        return Err(LatticeError::RootNorm { found: norm });
    }
    // h(r, e_k) = sum_l conj(r_l) Gram_{lk}; with r.r = -3 the map is
    // x -> x + ((1 - omega)/3) r h(r, x), so entry (j, k) of T - I is
    // (1 - omega) r_j h(r, e_k) / 3, which must divide exactly.
    let w: Vec<EisensteinInt> = (0..n)
        .map(|k| {
            r.iter().enumerate().fold(EisensteinInt::zero(), |acc, (l, rl)| {
                &acc + &(&rl.conj() * form.matrix().at(l, k))
            })
        })
        .collect();
    let one_minus_omega = EisensteinInt::one() - EisensteinInt::omega();
    let three = EisensteinInt::new(3, 0);
    let mut t: Matrix<EisensteinInt> = Matrix::identity(n);
    for (j, rj) in r.iter().enumerate() {
        for (k, wk) in w.iter().enumerate() {
            let num = &(&one_minus_omega * rj) * wk;
            let (q, rem) = num.div_rem(&three)?;
            if !rem.is_zero() {
                return Err(LatticeError::NonIntegralTriflection { row: j, col: k });
            }
            let cur = t.at(j, k).clone();
            t.set(j, k, &cur + &q);
        }
    }
    Ok(t)
}

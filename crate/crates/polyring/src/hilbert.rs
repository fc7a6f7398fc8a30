use std::fmt;

use exact::{BigInt, Rational};
use num_traits::{One, Signed, Zero};

use crate::groebner::buchberger;
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::PolyError;

/// Univariate polynomial in the degree variable `m`, coefficients stored by
/// ascending power with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<Rational>,
}

impl HilbertPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at(&self, m: u32) -> Rational {
        let x = Rational::from_integer(BigInt::from(m));
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pow, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match pow {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "m")?,
                1 => write!(f, "{mag}*m")?,
                _ if mag.is_one() => write!(f, "m^{pow}")?,
                _ => write!(f, "{mag}*m^{pow}")?,
            }
        }
        Ok(())
    }
}

fn require_homogeneous(ideal: &Ideal) -> Result<(), PolyError> {
    for (index, g) in ideal.gens().iter().enumerate() {
        if g.homogeneous_degree().is_none() {
            return Err(PolyError::NonHomogeneousGenerator { index });
        }
    }
    Ok(())
}

// Degree-m monomials not divisible by any of the leading monomials; these
// are a basis of the degree-m part of the quotient.
fn standard_monomial_count(lts: &[Monomial], nvars: usize, m: u32) -> u64 {
    let mut exps = vec![0u32; nvars];
    let mut count = 0u64;
    walk(lts, &mut exps, 0, m, &mut count);
    count
}

fn walk(lts: &[Monomial], exps: &mut Vec<u32>, slot: usize, remaining: u32, count: &mut u64) {
    if slot + 1 == exps.len() {
        exps[slot] = remaining;
        let candidate = Monomial::new(exps.clone());
        if !lts.iter().any(|lt| lt.divides(&candidate)) {
            *count += 1;
        }
        exps[slot] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[slot] = e;
        walk(lts, exps, slot + 1, remaining - e, count);
    }
    exps[slot] = 0;
}

/// Dimension of the degree-`m` part of the quotient ring, read off the
/// leading-term ideal of a grevlex basis. Recomputes that basis per call;
/// batch work goes through [`hilbert_polynomial`], which shares one.
pub fn hilbert_function(ideal: &Ideal, m: u32) -> Result<u64, PolyError> {
    require_homogeneous(ideal)?;
    if ideal.nvars() == 0 {
        return Ok(u64::from(m == 0));
    }
    let lts = buchberger(ideal, MonomialOrder::Grevlex).leading_monomials();
    Ok(standard_monomial_count(&lts, ideal.nvars(), m))
}

/// [`hilbert_polynomial_with_bound`] at the default bound, four plus twice
/// the maximum generator degree.
pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertPolynomial, PolyError> {
    hilbert_polynomial_with_bound(ideal, 4 + 2 * ideal.max_generator_degree())
}

/// The eventual polynomial of the Hilbert function.
///
/// Tabulates the function through degree `bound`, looks for the smallest
/// difference order whose last three values agree, interpolates the Newton
/// form at that tail, and confirms the result at the two degrees past the
/// interpolation window. No qualifying difference order means the bound was
/// too small; the error carries the tabulated values.
pub fn hilbert_polynomial_with_bound(
    ideal: &Ideal,
    bound: u32,
) -> Result<HilbertPolynomial, PolyError> {
    require_homogeneous(ideal)?;
    let nvars = ideal.nvars();
    let lts = buchberger(ideal, MonomialOrder::Grevlex).leading_monomials();
    let vals: Vec<i128> = (0..=bound)
        .map(|m| standard_monomial_count(&lts, nvars, m) as i128)
        .collect();

    let mut rows: Vec<Vec<i128>> = vec![vals.clone()];
    while rows.len() <= nvars && rows.last().map_or(0, Vec::len) >= 2 {
        let prev = rows.last().expect("nonempty");
        rows.push(prev.windows(2).map(|w| w[1] - w[0]).collect());
    }

    for (d, row) in rows.iter().enumerate() {
        let len = row.len();
        if len < 3 || row[len - 1] != row[len - 2] || row[len - 2] != row[len - 3] {
            continue;
        }
        let anchor = len - 3;
        let hp = newton_expand(&rows, d, anchor);
        let verified = (anchor + d + 1..=bound as usize)
            .all(|m| hp.eval_at(m as u32) == Rational::from_integer(BigInt::from(vals[m])));
        if verified {
            return Ok(hp);
        }
    }
    Err(PolyError::NoStabilization { bound, values: vals })
}

// HP(m) = sum over k of Delta^k[anchor] * C(m - anchor, k), expanded into
// powers of m.
fn newton_expand(rows: &[Vec<i128>], d: usize, anchor: usize) -> HilbertPolynomial {
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (k, row) in rows.iter().enumerate().take(d + 1) {
        let delta = Rational::from_integer(BigInt::from(row[anchor]));
        if delta.is_zero() {
            continue;
        }
        let mut base = vec![Rational::one()];
        let mut kfact = Rational::one();
        for t in 0..k {
            base = mul_by_linear(&base, (anchor + t) as i64);
            kfact *= Rational::from_integer(BigInt::from(t as i64 + 1));
        }
        let scale = delta / kfact;
        for (pow, c) in base.iter().enumerate() {
            coeffs[pow] += c * &scale;
        }
    }
    HilbertPolynomial::from_coeffs(coeffs)
}

// p(m) * (m - c)
fn mul_by_linear(p: &[Rational], c: i64) -> Vec<Rational> {
    let shift = Rational::from_integer(BigInt::from(c));
    let mut out = vec![Rational::zero(); p.len() + 1];
    for (i, co) in p.iter().enumerate() {
        out[i + 1] += co;
        out[i] -= co * &shift;
    }
    out
}

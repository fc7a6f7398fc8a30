use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::rational::Rational;

/// A rational number perturbed by an infinitesimal: `base + eps * e`, where
/// `e > 0` is smaller than any positive rational.
///
/// Comparison is lexicographic in `(base, eps)`, which is exactly the order
/// of evaluations at sufficiently small positive `e`. This is the arithmetic
/// behind "weight w + epsilon" perturbations: inequalities that are strict
/// for every small positive `e` are decided without picking a value for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpsRational {
    pub base: Rational,
    pub eps: Rational,
}

impl EpsRational {
    pub fn new(base: Rational, eps: Rational) -> Self {
        EpsRational { base, eps }
    }

    /// A plain rational, with no infinitesimal part.
    pub fn constant(base: Rational) -> Self {
        EpsRational { base, eps: Rational::zero() }
    }

    /// `k * e` for a bare infinitesimal multiple.
    pub fn epsilon(coeff: Rational) -> Self {
        EpsRational { base: Rational::zero(), eps: coeff }
    }

    pub fn zero() -> Self {
        EpsRational { base: Rational::zero(), eps: Rational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.eps.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        EpsRational { base: &self.base * k, eps: &self.eps * k }
    }

    /// Compares against a plain rational threshold.
    pub fn cmp_rational(&self, r: &Rational) -> std::cmp::Ordering {
        self.cmp(&EpsRational::constant(r.clone()))
    }

    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a EpsRational>) -> Self {
        let mut acc = EpsRational::zero();
        for t in terms {
            acc = &acc + t;
        }
        acc
    }
}

impl From<Rational> for EpsRational {
    fn from(r: Rational) -> Self {
        EpsRational::constant(r)
    }
}

impl PartialOrd for EpsRational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EpsRational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.base.cmp(&other.base).then_with(|| self.eps.cmp(&other.eps))
    }
}

impl Add<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: &EpsRational) -> EpsRational {
        EpsRational { base: &self.base + &rhs.base, eps: &self.eps + &rhs.eps }
    }
}

impl Sub<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: &EpsRational) -> EpsRational {
        EpsRational { base: &self.base - &rhs.base, eps: &self.eps - &rhs.eps }
    }
}

impl Neg for &EpsRational {
    type Output = EpsRational;
    fn neg(self) -> EpsRational {
        EpsRational { base: -&self.base, eps: -&self.eps }
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.eps.is_zero() {
            return write!(f, "{}", self.base);
        }
        let coeff = if self.eps.abs() == Rational::from_integer(1.into()) {
            String::new()
        } else {
            format!("{}", self.eps.abs())
        };
        if self.base.is_zero() {
            let sign = if self.eps.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{coeff}ε");
        }
        let sign = if self.eps.is_negative() { "-" } else { "+" };
        write!(f, "{} {sign} {coeff}ε", self.base)
    }
}

impl fmt::Debug for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

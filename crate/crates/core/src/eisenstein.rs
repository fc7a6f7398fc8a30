use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;

/// An Eisenstein integer `a + b*w` where `w` is a primitive cube root of
/// unity, `w^2 + w + 1 = 0`.
///
/// Conjugation sends `w` to `w_bar = -1 - w`, so `conj(a + b*w) = (a-b) - b*w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        EisensteinInt { a: BigInt::zero(), b: BigInt::zero() }
    }

    pub fn one() -> Self {
        EisensteinInt { a: BigInt::one(), b: BigInt::zero() }
    }

    /// The root of unity `w` itself.
    pub fn omega() -> Self {
        EisensteinInt { a: BigInt::zero(), b: BigInt::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        EisensteinInt { a: &self.a - &self.b, b: -&self.b }
    }

    /// `norm(z) = a^2 - ab + b^2 = z * conj(z)`, always nonnegative.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Exact divisibility test in `Z[w]`, via integrality of
    /// `self * conj(d) / norm(d)`.
    pub fn divisible_by(&self, d: &EisensteinInt) -> Result<bool, ExactError> {
        if d.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        let n = d.norm();
        let t = self * &d.conj();
        Ok(t.a.is_multiple_of(&n) && t.b.is_multiple_of(&n))
    }

    /// Euclidean division by the nearest lattice point, with the same
    /// deterministic tie-breaking as `GaussianInt::div_rem`: smallest
    /// remainder norm, then smallest quotient norm, then lexicographically
    /// smallest `(a, b)`.
    ///
    /// The nearest point to any position lies on a corner of the containing
    /// fundamental parallelogram because the triangular lattice's Delaunay
    /// cells have lattice vertices, so four candidates suffice.
    pub fn div_rem(&self, d: &EisensteinInt) -> Result<(EisensteinInt, EisensteinInt), ExactError> {
        if d.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        let n = d.norm();
        let t = self * &d.conj();
        let mut best: Option<(BigInt, BigInt, EisensteinInt, EisensteinInt)> = None;
        for a in corner_pair(&t.a, &n) {
            for b in corner_pair(&t.b, &n) {
                let q = EisensteinInt { a: a.clone(), b };
                let r = self - &(d * &q);
                let key = (r.norm(), q.norm(), q, r);
                if best.as_ref().map_or(true, |bst| key < *bst) {
                    best = Some(key);
                }
            }
        }
        let (rn, _, q, r) = best.expect("corner candidates are never empty");
        debug_assert!(rn < n, "remainder norm must drop below the divisor norm");
        Ok((q, r))
    }
}

fn corner_pair(num: &BigInt, den: &BigInt) -> Vec<BigInt> {
    debug_assert!(den.is_positive());
    let f = num.div_floor(den);
    if (num - &f * den).is_zero() {
        vec![f]
    } else {
        let c = &f + 1;
        vec![f, c]
    }
}

macro_rules! eisenstein_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&EisensteinInt> for &EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: &EisensteinInt) -> EisensteinInt {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

eisenstein_binop!(Add, add, |x, y| EisensteinInt { a: &x.a + &y.a, b: &x.b + &y.b });
eisenstein_binop!(Sub, sub, |x, y| EisensteinInt { a: &x.a - &y.a, b: &x.b - &y.b });
// (a + bw)(c + dw) = ac + (ad + bc)w + bd(-1 - w)
eisenstein_binop!(Mul, mul, |x, y| EisensteinInt {
    a: &x.a * &y.a - &x.b * &y.b,
    b: &x.a * &y.b + &x.b * &y.a - &x.b * &y.b,
});

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt { a: -&self.a, b: -&self.b }
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}w", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{}{}w", self.a, self.b)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;

/// A Gaussian integer `re + im*i` with `i^2 = -1`.
///
/// Components are arbitrary precision; all operations are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussianInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn one() -> Self {
        GaussianInt { re: BigInt::one(), im: BigInt::zero() }
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        GaussianInt { re: BigInt::zero(), im: BigInt::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate `re - im*i`.
    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    /// `norm(z) = re^2 + im^2 = z * conj(z)`, always nonnegative.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact divisibility test: is `self` a multiple of `d` in `Z[i]`?
    ///
    /// `self / d = self * conj(d) / norm(d)`, so the quotient is integral
    /// exactly when `norm(d)` divides both components of `self * conj(d)`.
    pub fn divisible_by(&self, d: &GaussianInt) -> Result<bool, ExactError> {
        if d.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        let n = d.norm();
        let t = self * &d.conj();
        Ok(t.re.is_multiple_of(&n) && t.im.is_multiple_of(&n))
    }

    /// Euclidean division by the nearest lattice point.
    ///
    /// Returns `(q, r)` with `self = d*q + r` and `norm(r) < norm(d)`.
    /// The candidate quotients are the floor/ceil corners around the exact
    /// rational quotient; ties go to the candidate whose remainder has
    /// smaller norm, then to the quotient of smaller norm, then to the
    /// lexicographically smaller `(re, im)`.
    pub fn div_rem(&self, d: &GaussianInt) -> Result<(GaussianInt, GaussianInt), ExactError> {
        if d.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        let n = d.norm();
        let t = self * &d.conj();
        let mut best: Option<(BigInt, BigInt, GaussianInt, GaussianInt)> = None;
        for re in corner_pair(&t.re, &n) {
            for im in corner_pair(&t.im, &n) {
                let q = GaussianInt { re: re.clone(), im };
                let r = self - &(d * &q);
                let key = (r.norm(), q.norm(), q, r);
                if best.as_ref().map_or(true, |b| key < *b) {
                    best = Some(key);
                }
            }
        }
        let (rn, _, q, r) = best.expect("corner candidates are never empty");
        debug_assert!(rn < n, "remainder norm must drop below the divisor norm");
        Ok((q, r))
    }
}

/// `true` iff `x = d*q` for some Gaussian integer `q`. Errors on `d = 0`.
pub fn gauss_divides(d: &GaussianInt, x: &GaussianInt) -> Result<bool, ExactError> {
    x.divisible_by(d)
}

/// Floor and ceiling of the exact fraction `num/den` (`den > 0`), deduplicated
/// into at most two candidates.
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

macro_rules! gaussian_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&GaussianInt> for &GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &GaussianInt) -> GaussianInt {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: GaussianInt) -> GaussianInt {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

gaussian_binop!(Add, add, |a, b| GaussianInt { re: &a.re + &b.re, im: &a.im + &b.im });
gaussian_binop!(Sub, sub, |a, b| GaussianInt { re: &a.re - &b.re, im: &a.im - &b.im });
gaussian_binop!(Mul, mul, |a, b| GaussianInt {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

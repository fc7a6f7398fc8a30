use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::ExactError;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. `num_rational` maintains both invariants on
/// every construction, so the alias is the whole type.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d`. Panics if `d == 0`; use [`parse_rational`] for
/// untrusted input.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rat() requires a nonzero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"` with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ExactError::Parse("empty rational literal".into()));
    }
    Rational::from_str(t).map_err(|e| ExactError::Parse(format!("bad rational {t:?}: {e}")))
}

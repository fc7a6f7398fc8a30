use exact::{EpsRational, Rational};
use num_integer::binomial;

use crate::HassettError;

/// The uniform perturbed weights 2/n + e, one per mark.
pub fn uniform_weights(n: usize) -> Vec<EpsRational> {
    let base = Rational::new(2.into(), (n as i64).into());
    vec![EpsRational::new(base, Rational::from_integer(1.into())); n]
}

/// Counts the codimension-one boundary strata of the moduli space at the
/// uniform perturbed weights: type (A) strata are unordered pair
/// collisions, type (B) strata are balanced two-component splittings up to
/// swapping the sides.
pub fn codim1_strata_census(n: usize) -> Result<(u64, u64), HassettError> {
    if n % 2 != 0 {
        return Err(HassettError::OddCensus(n));
    }
    if n < 6 {
        return Err(HassettError::CensusTooSmall(n));
    }
    let type_a = binomial(n as u128, 2);
    let type_b = binomial(n as u128, (n / 2) as u128) / 2;
    Ok((type_a as u64, type_b as u64))
}

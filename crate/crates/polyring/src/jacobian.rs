use crate::groebner::buchberger;
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Poly;
use crate::PolyError;

/// Smoothness of the projective hypersurface cut out by a homogeneous `f`.
///
/// The Jacobian scheme of `(f, all partials)` is empty away from the origin
/// of the affine cone exactly when the leading-term ideal of its Groebner
/// basis contains a power of every variable; over the rationals the
/// polynomial itself is redundant next to its partials but is kept in the
/// generator list.
pub fn is_smooth_jacobian(f: &Poly) -> Result<bool, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.homogeneous_degree().is_none() {
        return Err(PolyError::NonHomogeneous);
    }
    let n = f.nvars();
    let mut gens = Vec::with_capacity(n + 1);
    gens.push(f.clone());
    for i in 0..n {
        gens.push(f.derivative(i));
    }
    let gb = buchberger(&Ideal::new(n, gens), MonomialOrder::Grevlex);
    if gb.is_unit() {
        return Ok(true);
    }
    let lts = gb.leading_monomials();
    Ok((0..n).all(|v| lts.iter().any(|m| m.pure_power() == Some(v))))
}

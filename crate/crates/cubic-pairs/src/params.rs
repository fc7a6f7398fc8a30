//! The Naruki family of cubic surfaces and its tritangent limits.

use crate::CubicError;
use exact::{rat_int, Rational};
use polyring::Poly;

/// Parameter point (lambda, mu, nu, rho) of the Naruki cubic family.
///
/// No constraints are imposed: boundary members of the family use the
/// values 0 and 1 freely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NarukiParams {
    pub lambda: Rational,
    pub mu: Rational,
    pub nu: Rational,
    pub rho: Rational,
}

impl NarukiParams {
    pub fn new(lambda: Rational, mu: Rational, nu: Rational, rho: Rational) -> Self {
        NarukiParams {
            lambda,
            mu,
            nu,
            rho,
        }
    }

    /// Integer convenience constructor.
    pub fn from_ints(lambda: i64, mu: i64, nu: i64, rho: i64) -> Self {
        NarukiParams::new(rat_int(lambda), rat_int(mu), rat_int(nu), rat_int(rho))
    }
}

fn var(i: usize) -> Poly {
    Poly::var(4, i)
}

fn con(c: &Rational) -> Poly {
    Poly::constant(4, c.clone())
}

fn psum(terms: &[Poly]) -> Poly {
    terms.iter().fold(Poly::zero(4), |acc, t| &acc + t)
}

/// Cubic surface of the Naruki family at the given parameter point, in
/// coordinates x0..x3:
///
/// ```text
/// rho * x3 * ( lambda*x0^2 + mu*x1^2 + nu*x2^2
///            + (rho-1)^2*(lambda*mu*nu*rho-1)^2*x3^2
///            + (mu*nu+1)*x1*x2 + (lambda*nu+1)*x0*x2 + (lambda*mu+1)*x0*x1
///            - (rho-1)*(lambda*mu*nu*rho-1)*x3*( (lambda+1)*x0
///                                              + (mu+1)*x1
///                                              + (nu+1)*x2 ) )
/// + x0*x1*x2
/// ```
///
/// At rho = 0 the surface is the union of the three coordinate planes
/// x0*x1*x2 = 0.
pub fn naruki_cubic(params: &NarukiParams) -> Poly {
    let (l, m, n, r) = (
        &params.lambda,
        &params.mu,
        &params.nu,
        &params.rho,
    );
    let one = rat_int(1);
    let (x0, x1, x2, x3) = (var(0), var(1), var(2), var(3));

    // (rho - 1)*(lambda*mu*nu*rho - 1) appears squared and linearly.
    let lmnr = &(&(l * m) * n) * r;
    let rr = &(r - &one) * &(&lmnr - &one);

    let quadric_terms = psum(&[
        &con(l) * &(&x0 * &x0),
        &con(m) * &(&x1 * &x1),
        &con(n) * &(&x2 * &x2),
        &con(&(&rr * &rr)) * &(&x3 * &x3),
        &con(&(&(m * n) + &one)) * &(&x1 * &x2),
        &con(&(&(l * n) + &one)) * &(&x0 * &x2),
        &con(&(&(l * m) + &one)) * &(&x0 * &x1),
    ]);
    let linear = psum(&[
        &con(&(l + &one)) * &x0,
        &con(&(m + &one)) * &x1,
        &con(&(n + &one)) * &x2,
    ]);
    let quadric = &quadric_terms - &(&(&con(&rr) * &x3) * &linear);

    &(&(&con(r) * &x3) * &quadric) + &(&(&x0 * &x1) * &x2)
}

/// The four-nodal cubic surface x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3,
/// the unique member of the family with four nodes.
pub fn cayley_cubic() -> Poly {
    let (x0, x1, x2, x3) = (var(0), var(1), var(2), var(3));
    psum(&[
        &(&x0 * &x1) * &x2,
        &(&x0 * &x1) * &x3,
        &(&x0 * &x2) * &x3,
        &(&x1 * &x2) * &x3,
    ])
}

/// Defining equation of the named tritangent plane at the given parameter
/// point, with rho left explicit.  Only the two planes whose equations are
/// carried symbolically are supported.
fn tritangent_plane(name: &str, params: &NarukiParams, rho: &Rational) -> Option<Poly> {
    let (l, m, n) = (&params.lambda, &params.mu, &params.nu);
    let one = rat_int(1);
    let (x0, x1, x2, x3) = (var(0), var(1), var(2), var(3));
    let lmnr = &(&(&(l * m) * n) * rho);
    match name {
        "(p,)" | "p," => {
            // x0 + mu*rho*x1 + nu*rho*x2
            //    - rho*(rho-1)*(lambda*mu*nu*rho + mu*nu - mu - mu)*x3
            let bracket = &(&(lmnr + &(m * n)) - m) - m;
            let c3 = &(rho * &(rho - &one)) * &bracket;
            Some(
                &psum(&[
                    x0,
                    &con(&(m * rho)) * &x1,
                    &con(&(n * rho)) * &x2,
                ]) - &(&con(&c3) * &x3),
            )
        }
        "(theta)" | "theta" => {
            // lambda*x0 + mu*x1 + nu*x2
            //    - ((rho-1)*(lambda*mu*nu*rho-1)
            //       - rho*(lambda-1)*(mu-1)*(nu-1))*x3
            let c3 = &(&(rho - &one) * &(lmnr - &one))
                - &(&(rho * &(l - &one)) * &(&(m - &one) * &(n - &one)));
            Some(
                &psum(&[
                    &con(l) * &x0,
                    &con(m) * &x1,
                    &con(n) * &x2,
                ]) - &(&con(&c3) * &x3),
            )
        }
        _ => None,
    }
}

/// Limit of the named tritangent plane as rho goes to 0, at the given
/// (lambda, mu, nu).
///
/// The limits are linear forms: `(p,)` degenerates to x0 and `(theta)` to
/// lambda*x0 + mu*x1 + nu*x2 - x3.  Both limit planes contain the points
/// [0:1:0:mu] and [0:0:1:nu].
pub fn tritangent_limit(name: &str, params: &NarukiParams) -> Result<Poly, CubicError> {
    tritangent_plane(name, params, &rat_int(0))
        .ok_or_else(|| CubicError::UnknownTritangent(name.to_string()))
}

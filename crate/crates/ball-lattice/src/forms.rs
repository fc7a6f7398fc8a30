use exact::{gauss_divides, rat, BigInt, EisensteinInt, GaussianInt, Matrix, Rational, Ring};
use num_traits::{Signed, Zero};

use crate::LatticeError;

/// Entry rings that realify to rank-two lattices over the rationals.
///
/// `real_block` is the 2x2 Gram block of the symmetric pairing Re h on the
/// scalar pair {1, theta}, where theta is the imaginary generator (i or
/// omega) and h is multiplication by the entry.  Stacking these blocks
/// turns an n-dimensional Hermitian form into a 2n-dimensional rational
/// symmetric form with exactly doubled inertia.
pub trait RealBlock: Ring {
    /// Rows [Re(z), Re(z theta)] and [Re(conj(theta) z), Re(conj(theta) z theta)].
    fn real_block(&self) -> [[Rational; 2]; 2];
}

impl RealBlock for GaussianInt {
    fn real_block(&self) -> [[Rational; 2]; 2] {
        let a = Rational::from_integer(self.re.clone());
        let b = Rational::from_integer(self.im.clone());
        [[a.clone(), -b.clone()], [b, a]]
    }
}

impl RealBlock for EisensteinInt {
    // With omega = (-1 + sqrt(-3))/2: Re(a + b omega) = a - b/2,
    // Re((a + b omega) omega) = -(a + b)/2, Re(conj(omega)(a + b omega)) = b - a/2.
    fn real_block(&self) -> [[Rational; 2]; 2] {
        let a = Rational::from_integer(self.a.clone());
        let b = Rational::from_integer(self.b.clone());
        let half = rat(1, 2);
        [
            [&a - &(&b * &half), -(&(&a + &b) * &half)],
            [&b - &(&a * &half), &a - &(&b * &half)],
        ]
    }
}

/// A Hermitian form, stored as its Gram matrix.  Construction verifies
/// that the matrix equals its own conjugate transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianForm<R: Ring> {
    matrix: Matrix<R>,
}

impl<R: Ring> HermitianForm<R> {
    pub fn new(matrix: Matrix<R>) -> Result<Self, LatticeError> {
        if !matrix.is_square() {
            return Err(LatticeError::Dimension(format!(
                "Hermitian form needs a square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.conj_transpose() != matrix {
            return Err(LatticeError::NotHermitian);
        }
        Ok(HermitianForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The pairing h(v, w) = conj(v)^t . Gram . w, conjugate-linear in the
    /// first argument.
    pub fn pairing(&self, v: &[R], w: &[R]) -> Result<R, LatticeError> {
        if v.len() != self.dim() || w.len() != self.dim() {
            return Err(LatticeError::Dimension(format!(
                "pairing of vectors of lengths {} and {} against a dimension {} form",
                v.len(),
                w.len(),
                self.dim()
            )));
        }
        let mut acc = R::ring_zero();
        for (j, vj) in v.iter().enumerate() {
            for (k, wk) in w.iter().enumerate() {
                acc = acc.ring_add(&vj.ring_conj().ring_mul(self.matrix.at(j, k)).ring_mul(wk));
            }
        }
        Ok(acc)
    }

    pub fn det(&self) -> R {
        self.matrix.det().expect("form matrix is square by construction")
    }
}

/// A skew-symmetric integer pairing; construction verifies transpose = -matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    matrix: Matrix<BigInt>,
}

impl SkewForm {
    pub fn new(matrix: Matrix<BigInt>) -> Result<Self, LatticeError> {
        if !matrix.is_square() {
            return Err(LatticeError::Dimension(format!(
                "skew form needs a square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.transpose() != matrix.neg() {
            return Err(LatticeError::NotSkew);
        }
        Ok(SkewForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix<BigInt> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The pairing Q(v, w) = v^t . matrix . w, bilinear over the integers.
    pub fn pairing(&self, v: &[BigInt], w: &[BigInt]) -> Result<BigInt, LatticeError> {
        if v.len() != self.dim() || w.len() != self.dim() {
            return Err(LatticeError::Dimension(format!(
                "pairing of vectors of lengths {} and {} against a dimension {} form",
                v.len(),
                w.len(),
                self.dim()
            )));
        }
        let mut acc = BigInt::ring_zero();
        for (j, vj) in v.iter().enumerate() {
            for (k, wk) in w.iter().enumerate() {
                acc = acc.ring_add(&vj.ring_mul(self.matrix.at(j, k)).ring_mul(wk));
            }
        }
        Ok(acc)
    }
}

fn g(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(re, im)
}

/// The rank-6 Gaussian Hermitian form with -2 on the diagonal, 1-i on the
/// superdiagonal, and 1+i on the subdiagonal.
///
/// Its inertia is of hyperbolic type: five eigenvalues of one sign and one
/// of the other (see [`signature`]).  The leading 2x2 principal block is
/// [`prym_form`].
pub fn dm_form_h() -> HermitianForm<GaussianInt> {
    let mut m = Matrix::zero(6, 6);
    for j in 0..6 {
        m.set(j, j, g(-2, 0));
    }
    for j in 0..5 {
        m.set(j, j + 1, g(1, -1));
        m.set(j + 1, j, g(1, 1));
    }
    HermitianForm::new(m).expect("tridiagonal -2 / 1-i / 1+i is Hermitian")
}

/// The rank-2 Gaussian Hermitian form [[-2, 1-i], [1+i, -2]].
///
/// Negative definite with determinant 2; it is the form the reflections of
/// [`prym_reflections`] preserve, and it is reconstructed from the integer
/// intersection data by h(v, w) = Q(v, rho w) - i Q(v, w) with Q =
/// [`intersection_skew`] and rho = [`prym_rho`] (see the tests).
pub fn prym_form() -> HermitianForm<GaussianInt> {
    let m = Matrix::from_rows(vec![vec![g(-2, 0), g(1, -1)], vec![g(1, 1), g(-2, 0)]])
        .expect("rows are rectangular");
    HermitianForm::new(m).expect("[[-2, 1-i], [1+i, -2]] is Hermitian")
}

fn int_matrix(rows: &[[i64; 4]]) -> Matrix<BigInt> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
        .expect("rows are rectangular")
}

/// The skew intersection pairing on the rank-4 integer basis (a1, a2, b1, b2)
/// underlying [`prym_form`].
///
/// Together with the complex structure [`prym_rho`] it reconstructs the
/// Hermitian pairing: h(v, w) = Q(v, rho w) - i Q(v, w) on the complex
/// basis (a1, a2).
pub fn intersection_skew() -> SkewForm {
    let q = int_matrix(&[[0, 1, 2, -1], [-1, 0, -1, 2], [-2, 1, 0, 1], [1, -2, -1, 0]]);
    SkewForm::new(q).expect("the intersection pairing is skew")
}

/// The complex structure on the rank-4 integer basis (a1, a2, b1, b2):
/// rho(a_j) = -b_j and rho(b_j) = a_j, so rho^2 = -1.  It preserves
/// [`intersection_skew`] and realizes multiplication by i under the
/// identification of the lattice with Z[i]^2 on the basis (a1, a2).
pub fn prym_rho() -> Matrix<BigInt> {
    int_matrix(&[[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

/// The three unitary reflections generating the order-16 stabilizer of
/// [`prym_form`]: the root reflections x -> x + h(e_j, x) e_j in the two
/// basis vectors (each of self-pairing -2), and i times their product.
///
/// Each squares to the identity, preserves the form, and is congruent to
/// the identity mod 1-i.
pub fn prym_reflections() -> [Matrix<GaussianInt>; 3] {
    let alpha = Matrix::from_rows(vec![vec![g(-1, 0), g(1, -1)], vec![g(0, 0), g(1, 0)]])
        .expect("rows are rectangular");
    let beta = Matrix::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(1, 1), g(-1, 0)]])
        .expect("rows are rectangular");
    let gamma = Matrix::from_rows(vec![vec![g(0, 1), g(-1, -1)], vec![g(-1, 1), g(0, -1)]])
        .expect("rows are rectangular");
    [alpha, beta, gamma]
}

/// Doubles a Hermitian form into the rational symmetric Gram matrix of
/// Re h on the realified module, on the basis (e_1, theta e_1, ...,
/// e_n, theta e_n).  The inertia of the result is exactly twice the
/// inertia of the input.
pub fn doubled_real_form<R: RealBlock>(h: &HermitianForm<R>) -> Matrix<Rational> {
    let n = h.dim();
    let mut out = Matrix::zero(2 * n, 2 * n);
    for j in 0..n {
        for k in 0..n {
            let block = h.matrix().at(j, k).real_block();
            for (s, row) in block.iter().enumerate() {
                for (t, v) in row.iter().enumerate() {
                    out.set(2 * j + s, 2 * k + t, v.clone());
                }
            }
        }
    }
    out
}

/// Inertia (positive, negative, zero counts) of a rational symmetric
/// matrix by congruence diagonalization: symmetric Gaussian elimination
/// with diagonal pivoting, falling back to a row-and-column addition when
/// the remaining diagonal vanishes.  Exact; no eigenvalues are computed.
pub fn rational_inertia(sym: &Matrix<Rational>) -> Result<(usize, usize, usize), LatticeError> {
    if !sym.is_square() {
        return Err(LatticeError::Dimension(format!(
            "inertia needs a square matrix, got {}x{}",
            sym.rows(),
            sym.cols()
        )));
    }
    if sym.transpose() != *sym {
        return Err(LatticeError::Dimension("inertia needs a symmetric matrix".into()));
    }
    let n = sym.rows();
    let mut a: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| sym.at(i, j).clone()).collect()).collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(l) = (k + 1..n).find(|&l| !a[l][l].is_zero()) {
                a.swap(k, l);
                for row in &mut a {
                    row.swap(k, l);
                }
            } else {
                // Remaining diagonal is zero; a nonzero off-diagonal entry
                // a[l][m] yields a pivot via row l += row m, col l += col m
                // (the new diagonal entry is 2 a[l][m]).
                let mut found = None;
                'search: for l in k..n {
                    for m in (l + 1)..n {
                        if !a[l][m].is_zero() {
                            found = Some((l, m));
                            break 'search;
                        }
                    }
                }
                let Some((l, m)) = found else {
                    zero += n - k;
                    break;
                };
                let row_m = a[m].clone();
                for j in 0..n {
                    a[l][j] = &a[l][j] + &row_m[j];
                }
                for row in &mut a {
                    let v = row[m].clone();
                    row[l] = &row[l] + &v;
                }
                if l != k {
                    a.swap(k, l);
                    for row in &mut a {
                        row.swap(k, l);
                    }
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let row_k = a[k].clone();
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in (k + 1)..n {
                a[i][j] = &a[i][j] - &(&f * &row_k[j]);
            }
        }
    }
    Ok((pos, neg, zero))
}

/// Signature of a Hermitian form: counts of positive, negative, and zero
/// eigenvalues, computed exactly as half the inertia of
/// [`doubled_real_form`].  The three counts sum to the dimension.
pub fn signature<R: RealBlock>(h: &HermitianForm<R>) -> (usize, usize, usize) {
    let (p, n, z) =
        rational_inertia(&doubled_real_form(h)).expect("doubled form is square and symmetric");
    assert!(p % 2 == 0 && n % 2 == 0 && z % 2 == 0, "doubled inertia must be even");
    (p / 2, n / 2, z / 2)
}

/// Whether conj(g)^t . H . g equals H exactly.
pub fn preserves_form<R: Ring>(g: &Matrix<R>, h: &HermitianForm<R>) -> Result<bool, LatticeError> {
    if !g.is_square() || g.rows() != h.dim() {
        return Err(LatticeError::Dimension(format!(
            "{}x{} matrix against a dimension {} form",
            g.rows(),
            g.cols(),
            h.dim()
        )));
    }
    let transported = g.conj_transpose().mul(h.matrix())?.mul(g)?;
    Ok(transported == *h.matrix())
}

/// Whether g is congruent to the identity mod delta: every entry of g - I
/// must be divisible by delta.
pub fn congruence_level(
    g: &Matrix<GaussianInt>,
    delta: &GaussianInt,
) -> Result<bool, LatticeError> {
    if !g.is_square() {
        return Err(LatticeError::Dimension(format!(
            "congruence level needs a square matrix, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    let diff = g.sub(&Matrix::identity(g.rows()))?;
    for i in 0..diff.rows() {
        for j in 0..diff.cols() {
            if !gauss_divides(delta, diff.at(i, j))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

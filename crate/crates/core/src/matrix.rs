use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::eisenstein::EisensteinInt;
use crate::error::ExactError;
use crate::gaussian::GaussianInt;
use crate::rational::Rational;

/// The minimal ring interface the matrix code needs. Implemented for the
/// four entry types that actually occur; general ring polymorphism is out
/// of scope.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Conjugation; the identity on rings without an involution.
    fn ring_conj(&self) -> Self;

    fn ring_is_zero(&self) -> bool {
        *self == Self::ring_zero()
    }
}

impl Ring for BigInt {
    fn ring_zero() -> Self {
        BigInt::zero()
    }
    fn ring_one() -> Self {
        BigInt::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_conj(&self) -> Self {
        self.clone()
    }
}

impl Ring for Rational {
    fn ring_zero() -> Self {
        Rational::zero()
    }
    fn ring_one() -> Self {
        Rational::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_conj(&self) -> Self {
        self.clone()
    }
}

impl Ring for GaussianInt {
    fn ring_zero() -> Self {
        GaussianInt::zero()
    }
    fn ring_one() -> Self {
        GaussianInt::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_conj(&self) -> Self {
        self.conj()
    }
}

impl Ring for EisensteinInt {
    fn ring_zero() -> Self {
        EisensteinInt::zero()
    }
    fn ring_one() -> Self {
        EisensteinInt::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_conj(&self) -> Self {
        self.conj()
    }
}

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![R::ring_zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = R::ring_one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ExactError::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries =
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.ring_add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Ring::ring_neg).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| s.ring_mul(a)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.ring_is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.at(i, j).ring_add(&a.ring_mul(rhs.at(k, j)));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Entry-wise conjugate followed by transpose.
    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).ring_conj());
            }
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Determinant by Laplace expansion along the first column. Division
    /// free, so it works over any of the entry rings; fine for the small
    /// fixed sizes that occur here.
    pub fn det(&self) -> Result<R, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(det_rec(self))
    }
}

fn det_rec<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.rows();
    match n {
        0 => R::ring_one(),
        1 => m.at(0, 0).clone(),
        2 => m
            .at(0, 0)
            .ring_mul(m.at(1, 1))
            .ring_sub(&m.at(0, 1).ring_mul(m.at(1, 0))),
        _ => {
            let mut acc = R::ring_zero();
            for i in 0..n {
                if m.at(i, 0).ring_is_zero() {
                    continue;
                }
                let mut rows = Vec::with_capacity(n - 1);
                for r in 0..n {
                    if r == i {
                        continue;
                    }
                    rows.push((1..n).map(|c| m.at(r, c).clone()).collect::<Vec<_>>());
                }
                let minor = Matrix::from_rows(rows).expect("minor rows are rectangular");
                let term = m.at(i, 0).ring_mul(&det_rec(&minor));
                acc = if i % 2 == 0 { acc.ring_add(&term) } else { acc.ring_sub(&term) };
            }
            acc
        }
    }
}

/// Free-function form of [`Matrix::conj_transpose`].
pub fn conj_transpose<R: Ring>(m: &Matrix<R>) -> Matrix<R> {
    m.conj_transpose()
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{}, {:?})", self.rows, self.cols, self.entries)
    }
}

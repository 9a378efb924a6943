//! Dense polynomials in the formal variable `q`.
//!
//! `q` never takes a numeric value in the main pipeline; a polynomial's
//! coefficient at `q^t` carries the combinatorial data for inversion count
//! `t`. Evaluation is offered for the two places a number is genuinely
//! wanted: the classical collapse at `q = 1` and the explicitly numeric
//! referee-normalized pmf.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

/// A dense polynomial in `q` with coefficients of type `C`.
///
/// The coefficient vector carries no trailing zeros, so `coefficients()`
/// of a nonzero polynomial ends with its leading coefficient. The zero
/// polynomial has an empty coefficient vector and no degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Zero> QPolynomial<C> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self
    where
        C: One,
    {
        QPolynomial::constant(C::one())
    }

    /// A constant polynomial.
    pub fn constant(c: C) -> Self {
        QPolynomial::from_coefficients(vec![c])
    }

    /// The monomial `c * q^degree`.
    pub fn monomial(c: C, degree: usize) -> Self {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(C::zero());
        }
        coeffs.push(c);
        QPolynomial { coeffs }
    }

    /// Builds a polynomial from coefficients indexed by exponent,
    /// trimming trailing zeros.
    pub fn from_coefficients(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Coefficients indexed by exponent; empty for the zero polynomial.
    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    /// The coefficient of `q^j`, cloned; zero outside the stored range
    /// (including negative `j`).
    pub fn coefficient(&self, j: i64) -> C
    where
        C: Clone,
    {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.coeffs.get(j))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `q^by`.
    pub fn shifted(&self, by: usize) -> Self
    where
        C: Clone,
    {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + by);
        for _ in 0..by {
            coeffs.push(C::zero());
        }
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &C) -> Self
    where
        C: Clone + Mul<Output = C>,
    {
        QPolynomial::from_coefficients(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        )
    }

    /// Applies `f` to each coefficient, e.g. to widen integers to rationals.
    pub fn map<D: Zero>(&self, f: impl FnMut(&C) -> D) -> QPolynomial<D> {
        QPolynomial::from_coefficients(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &C) -> C
    where
        C: Clone + Mul<Output = C>,
    {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluation at `q = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> C
    where
        C: Clone,
    {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc = acc + c.clone();
        }
        acc
    }
}

impl<C: Zero + Clone> Add for &QPolynomial<C> {
    type Output = QPolynomial<C>;

    fn add(self, rhs: &QPolynomial<C>) -> QPolynomial<C> {
        let (longer, shorter) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = longer.coeffs.clone();
        for (i, c) in shorter.coeffs.iter().enumerate() {
            let sum = coeffs[i].clone() + c.clone();
            coeffs[i] = sum;
        }
        QPolynomial::from_coefficients(coeffs)
    }
}

impl<C: Zero + Clone + Mul<Output = C>> Mul for &QPolynomial<C> {
    type Output = QPolynomial<C>;

    fn mul(self, rhs: &QPolynomial<C>) -> QPolynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let term = a.clone() * b.clone();
                let sum = coeffs[i + j].clone() + term;
                coeffs[i + j] = sum;
            }
        }
        QPolynomial::from_coefficients(coeffs)
    }
}

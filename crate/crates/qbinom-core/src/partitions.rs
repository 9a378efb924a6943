//! Bounded integer partitions and Gaussian polynomials.
//!
//! `P(k, m)` is the set of weakly decreasing tuples of exactly `k`
//! nonnegative integer parts, each at most `m` (short partitions are padded
//! with zeros, and the padded tuple is the canonical element). Its size
//! generating function is the Gaussian polynomial: the coefficient of `q^t`
//! in `gauss(k + m, k)` counts the elements of `P(k, m)` of size `t`.
//!
//! Gaussian polynomials are computed by the q-Pascal recurrence
//!
//! ```text
//! gauss(n, k) = gauss(n-1, k-1) + q^k * gauss(n-1, k)
//! ```
//!
//! with integer coefficients throughout; the rational product form is never
//! evaluated. [`GaussianCache`] memoizes the triangle per instance, so
//! callers that need many entries share the work and concurrent use needs no
//! locking.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::QPolynomial;

/// Default cap on the number of partitions a single enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A weakly decreasing tuple of nonnegative parts, each at most `bound`.
///
/// The tuple length is fixed: an element of `P(k, m)` always carries exactly
/// `k` parts, zeros included, so each partition appears in one canonical
/// padding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundedPartition {
    parts: Vec<u32>,
    bound: u32,
}

impl BoundedPartition {
    /// Validates that `parts` is weakly decreasing with every part `<= bound`.
    pub fn new(parts: Vec<u32>, bound: u32) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartsNotDecreasing);
        }
        if let Some(&part) = parts.iter().find(|&&p| p > bound) {
            return Err(Error::PartExceedsBound { part, bound });
        }
        Ok(BoundedPartition { parts, bound })
    }

    /// The all-zeros element of `P(k, m)`.
    pub fn zeros(k: usize, bound: u32) -> Self {
        BoundedPartition {
            parts: vec![0; k],
            bound,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `k`, zeros included.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The bound `m` on each part.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// The size `|lambda|`, the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Binomial coefficient as a big integer, zero when `k > n`.
pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Enumerates `P(k, m)` with the default resource cap.
///
/// See [`enumerate_partitions_with_cap`].
pub fn enumerate_partitions(k: usize, m: u32) -> Result<Vec<BoundedPartition>, Error> {
    enumerate_partitions_with_cap(k, m, DEFAULT_ENUMERATION_CAP)
}

/// Enumerates every element of `P(k, m)` exactly once, in lexicographically
/// descending order: `(m, m, ..., m)` first, `(0, 0, ..., 0)` last.
///
/// The list has `binomial(k + m, k)` elements; if that count exceeds `cap`
/// the enumeration is refused with [`Error::EnumerationCapExceeded`].
pub fn enumerate_partitions_with_cap(
    k: usize,
    m: u32,
    cap: u64,
) -> Result<Vec<BoundedPartition>, Error> {
    let total = num_integer::binomial(
        BigUint::from(k as u64 + u64::from(m)),
        BigUint::from(k as u64),
    );
    if total > BigUint::from(cap) {
        return Err(Error::EnumerationCapExceeded {
            required: total,
            cap,
        });
    }

    let mut out = Vec::new();
    let mut parts = vec![m; k];
    loop {
        out.push(BoundedPartition {
            parts: parts.clone(),
            bound: m,
        });
        // Successor in descending lex order: decrement the rightmost
        // positive part and raise everything to its right to the new value.
        match parts.iter().rposition(|&p| p > 0) {
            Some(i) => {
                parts[i] -= 1;
                let v = parts[i];
                for p in parts.iter_mut().skip(i + 1) {
                    *p = v;
                }
            }
            None => break,
        }
    }
    Ok(out)
}

/// Per-instance memo of the Gaussian polynomial triangle.
///
/// Rows are filled bottom-up by the q-Pascal recurrence, so asking for
/// `gauss(n, k)` materializes every entry with first index `<= n` once.
/// Instances are independent; share one across a bulk computation, or let
/// the free functions build a throwaway.
pub struct GaussianCache {
    rows: Vec<Vec<QPolynomial<BigInt>>>,
    zero: QPolynomial<BigInt>,
}

impl GaussianCache {
    pub fn new() -> Self {
        GaussianCache {
            rows: vec![vec![QPolynomial::one()]],
            zero: QPolynomial::zero(),
        }
    }

    fn ensure_rows(&mut self, n: u32) {
        let n = n as usize;
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 present");
            let r = self.rows.len();
            let mut row = Vec::with_capacity(r + 1);
            row.push(QPolynomial::one());
            for k in 1..r {
                row.push(&prev[k - 1] + &prev[k].shifted(k));
            }
            row.push(QPolynomial::one());
            self.rows.push(row);
        }
    }

    /// The Gaussian polynomial `gauss(n, k)`, of degree `k(n-k)`; the zero
    /// polynomial for `k < 0` or `k > n`.
    pub fn gaussian(&mut self, n: u32, k: i64) -> &QPolynomial<BigInt> {
        if k < 0 || k > i64::from(n) {
            return &self.zero;
        }
        self.ensure_rows(n);
        &self.rows[n as usize][k as usize]
    }

    /// The number of elements of `P(k, m)` of size `t`: the coefficient of
    /// `q^t` in `gauss(k + m, k)`. Zero for `t < 0` or `t > k * m`.
    pub fn partition_count(&mut self, k: usize, m: u32, t: i64) -> BigInt {
        let n = u32::try_from(k)
            .ok()
            .and_then(|k| k.checked_add(m))
            .expect("box dimensions fit u32");
        self.gaussian(n, k as i64).coefficient(t)
    }
}

impl Default for GaussianCache {
    fn default() -> Self {
        GaussianCache::new()
    }
}

/// The Gaussian polynomial `gauss(n, k)` via a throwaway [`GaussianCache`].
pub fn gaussian_polynomial(n: u32, k: i64) -> QPolynomial<BigInt> {
    GaussianCache::new().gaussian(n, k).clone()
}

/// Counts elements of `P(k, m)` of size `t`. Zero outside `0..=k*m`.
pub fn partition_count(k: usize, m: u32, t: i64) -> BigInt {
    GaussianCache::new().partition_count(k, m, t)
}

/// The Rogers-Szego polynomial `H_n(q; z) = sum_k gauss(n, k) z^k` as a
/// polynomial in `q` with exact rational coefficients.
pub fn rogers_szego_eval(n: u32, z: &BigRational) -> QPolynomial<BigRational> {
    let mut cache = GaussianCache::new();
    let mut sum: QPolynomial<BigRational> = QPolynomial::zero();
    let mut z_power = BigRational::one();
    for k in 0..=n {
        let term = cache
            .gaussian(n, i64::from(k))
            .map(|c| BigRational::from_integer(c.clone()))
            .scaled(&z_power);
        sum = &sum + &term;
        z_power *= z;
    }
    sum
}

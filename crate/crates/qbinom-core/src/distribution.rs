//! The exact joint law of `(Y, T)` for `n` Bernoulli trials with success
//! probability `pi`: `Y` counts successes, `T` counts inversions (failures
//! occurring after successes).
//!
//! Everything here is exact rational arithmetic; no floating point enters
//! any pmf or moment. The joint pmf is
//!
//! ```text
//! P(Y = k, T = t) = #P(k, n-k; t) * (1-pi)^(n-k) * pi^k
//! ```
//!
//! where `#P(k, m; t)` counts bounded partitions, i.e. the coefficient of
//! `q^t` in the Gaussian polynomial `gauss(n, k)`. The q-generalized pmf
//! keeps `q` formal and is returned as a polynomial object; its evaluation
//! at `q = 1` is the classical binomial pmf. The referee-normalized pmf is
//! the one place a numeric `q` is accepted, and it deliberately describes a
//! different random variable (see [`referee_normalized_pmf`]).

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::partitions::{binomial, GaussianCache};
use crate::poly::QPolynomial;

/// Default cap on `n` for full pmf table construction.
pub const DEFAULT_TABLE_CAP: usize = 200;

/// An exact probability: a rational number in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Prob(BigRational);

impl Prob {
    /// Wraps a rational, checking `0 <= value <= 1`.
    pub fn new(value: BigRational) -> Result<Self, Error> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::ProbabilityOutOfRange);
        }
        Ok(Prob(value))
    }

    pub fn zero() -> Self {
        Prob(BigRational::zero())
    }

    pub fn one() -> Self {
        Prob(BigRational::one())
    }

    /// Internal constructor for values that are probabilities by
    /// construction.
    pub(crate) fn from_unit_interval(value: BigRational) -> Self {
        debug_assert!(!value.is_negative() && value <= BigRational::one());
        Prob(value)
    }

    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Nearest double, for display and statistical tolerances only.
    pub fn approx(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Trial count `n` and success probability `pi`, with `0 < pi < 1` strictly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentParams {
    n: usize,
    pi: BigRational,
}

impl ExperimentParams {
    pub fn new(n: usize, pi: BigRational) -> Result<Self, Error> {
        if !pi.is_positive() || pi >= BigRational::one() {
            return Err(Error::SuccessProbabilityOutOfRange);
        }
        Ok(ExperimentParams { n, pi })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pi(&self) -> &BigRational {
        &self.pi
    }

    /// `1 - pi`.
    pub fn failure_prob(&self) -> BigRational {
        BigRational::one() - &self.pi
    }

    /// The odds of success `theta = pi / (1 - pi)`.
    pub fn theta(&self) -> BigRational {
        &self.pi / self.failure_prob()
    }

    /// `(1 - pi)^(n - k) * pi^k`, the probability of any single outcome
    /// with `k` successes.
    pub(crate) fn outcome_weight(&self, k: usize) -> BigRational {
        debug_assert!(k <= self.n);
        num_traits::pow(self.failure_prob(), self.n - k) * num_traits::pow(self.pi.clone(), k)
    }
}

/// The complete table of `P(Y = k, T = t)`.
///
/// Row `k` stores the probabilities for `t = 0..=k(n-k)`; every cell in
/// that range is strictly positive since the Gaussian coefficients are and
/// `0 < pi < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointPmfTable {
    params: ExperimentParams,
    rows: Vec<Vec<Prob>>,
}

impl JointPmfTable {
    pub fn params(&self) -> &ExperimentParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    /// Largest inversion count with nonzero probability: `floor(n^2 / 4)`.
    pub fn max_t(&self) -> u64 {
        let n = self.params.n as u64;
        n * n / 4
    }

    /// `P(Y = k, T = t)`; zero outside the support.
    pub fn get(&self, k: i64, t: i64) -> Prob {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.rows.get(k))
            .and_then(|row| usize::try_from(t).ok().and_then(|t| row.get(t)))
            .cloned()
            .unwrap_or_else(Prob::zero)
    }

    /// Iterates the support cells as `(k, t, prob)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64, &Prob)> {
        self.rows.iter().enumerate().flat_map(|(k, row)| {
            row.iter().enumerate().map(move |(t, p)| (k, t as u64, p))
        })
    }

    /// Sum of every cell; exactly one for a well-formed table.
    pub fn total(&self) -> BigRational {
        self.iter().map(|(_, _, p)| p.ratio()).sum()
    }

    /// Row sum `P(Y = k)`.
    pub fn row_sum(&self, k: i64) -> Prob {
        let sum = usize::try_from(k)
            .ok()
            .and_then(|k| self.rows.get(k))
            .map(|row| row.iter().map(Prob::ratio).sum())
            .unwrap_or_else(BigRational::zero);
        Prob::from_unit_interval(sum)
    }

    /// Column sum `P(T = t)`.
    pub fn column_sum(&self, t: i64) -> Prob {
        let sum = match usize::try_from(t) {
            Ok(t) => self
                .rows
                .iter()
                .filter_map(|row| row.get(t))
                .map(Prob::ratio)
                .sum(),
            Err(_) => BigRational::zero(),
        };
        Prob::from_unit_interval(sum)
    }

    /// `E[f(Y, T)]` by direct summation over the support.
    pub fn expectation(&self, f: impl Fn(usize, u64) -> BigRational) -> BigRational {
        self.iter().map(|(k, t, p)| f(k, t) * p.ratio()).sum()
    }

    pub(crate) fn from_rows(params: ExperimentParams, rows: Vec<Vec<Prob>>) -> Self {
        JointPmfTable { params, rows }
    }

    pub(crate) fn zeroed(params: ExperimentParams) -> Self {
        let n = params.n;
        let rows = (0..=n)
            .map(|k| {
                let width = k * (n - k) + 1;
                alloc::vec![Prob::zero(); width]
            })
            .collect();
        JointPmfTable { params, rows }
    }

    pub(crate) fn add_to_cell(&mut self, k: usize, t: u64, p: &BigRational) {
        let cell = &mut self.rows[k][t as usize];
        *cell = Prob::from_unit_interval(cell.ratio() + p);
    }
}

fn n_as_u32(n: usize) -> u32 {
    u32::try_from(n).expect("trial count fits u32")
}

/// The q-generalized pmf `P_q(Y = k) = gauss(n, k) (1-pi)^(n-k) pi^k` as a
/// polynomial in the formal variable `q`. Out-of-range `k` gives the zero
/// polynomial. Evaluating at `q = 1` recovers the classical binomial pmf.
pub fn q_generalized_pmf(params: &ExperimentParams, k: i64) -> QPolynomial<BigRational> {
    let n = params.n;
    if k < 0 || k > n as i64 {
        return QPolynomial::zero();
    }
    let weight = params.outcome_weight(k as usize);
    GaussianCache::new()
        .gaussian(n_as_u32(n), k)
        .map(|c| BigRational::from_integer(c.clone()))
        .scaled(&weight)
}

/// `P(Y = k, T = t)`; zero outside the support.
pub fn joint_pmf(params: &ExperimentParams, k: i64, t: i64) -> Prob {
    let n = params.n;
    if k < 0 || k > n as i64 {
        return Prob::zero();
    }
    let count = GaussianCache::new().partition_count(k as usize, (n - k as usize) as u32, t);
    if count.is_zero() {
        return Prob::zero();
    }
    Prob::from_unit_interval(BigRational::from_integer(count) * params.outcome_weight(k as usize))
}

/// Builds the complete joint table with the default cap.
pub fn joint_pmf_table(params: &ExperimentParams) -> Result<JointPmfTable, Error> {
    joint_pmf_table_with_cap(params, DEFAULT_TABLE_CAP)
}

/// Builds the complete joint table; entries sum to exactly one.
pub fn joint_pmf_table_with_cap(
    params: &ExperimentParams,
    cap: usize,
) -> Result<JointPmfTable, Error> {
    let n = params.n;
    if n > cap {
        return Err(Error::TableCapExceeded { n, cap });
    }
    let mut cache = GaussianCache::new();
    let theta = params.theta();
    let mut weight = params.outcome_weight(0);
    let mut rows = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let row = cache
            .gaussian(n_as_u32(n), k as i64)
            .coefficients()
            .iter()
            .map(|c| {
                Prob::from_unit_interval(BigRational::from_integer(c.clone()) * &weight)
            })
            .collect();
        rows.push(row);
        weight *= &theta;
    }
    Ok(JointPmfTable::from_rows(params.clone(), rows))
}

/// Marginal pmf of the inversion count: `P(T = t)`, zero outside
/// `0..=floor(n^2/4)`.
pub fn marginal_t(params: &ExperimentParams, t: i64) -> Prob {
    let n = params.n;
    let mut cache = GaussianCache::new();
    let theta = params.theta();
    let mut weight = params.outcome_weight(0);
    let mut sum = BigRational::zero();
    for k in 0..=n {
        let count = cache.partition_count(k, (n - k) as u32, t);
        if !count.is_zero() {
            sum += BigRational::from_integer(count) * &weight;
        }
        weight *= &theta;
    }
    Prob::from_unit_interval(sum)
}

/// Marginal pmf of the success count: the classical `Bin(n, pi)` pmf.
pub fn marginal_y(params: &ExperimentParams, k: i64) -> Prob {
    let n = params.n;
    if k < 0 || k > n as i64 {
        return Prob::zero();
    }
    let count = binomial(n as u64, k as u64);
    Prob::from_unit_interval(
        BigRational::from_integer(count) * params.outcome_weight(k as usize),
    )
}

/// Conditional pmf `P(T = t | Y = k) = #P(k, n-k; t) / binomial(n, k)`;
/// independent of `pi`.
///
/// Requires `k <= n`.
pub fn conditional_t_given_y(n: u32, k: u32, t: i64) -> Prob {
    assert!(k <= n, "conditioning on Y = {k} needs k <= n = {n}");
    let count = GaussianCache::new().partition_count(k as usize, n - k, t);
    if count.is_zero() {
        return Prob::zero();
    }
    Prob::from_unit_interval(BigRational::new(count, binomial(u64::from(n), u64::from(k))))
}

/// The whole conditional distribution of `T` given `Y = k`, indexed by `t`.
///
/// Requires `k <= n`.
pub fn conditional_t_pmf(n: u32, k: u32) -> Vec<Prob> {
    assert!(k <= n, "conditioning on Y = {k} needs k <= n = {n}");
    let denom = binomial(u64::from(n), u64::from(k));
    GaussianCache::new()
        .gaussian(n, i64::from(k))
        .coefficients()
        .iter()
        .map(|c| Prob::from_unit_interval(BigRational::new(c.clone(), denom.clone())))
        .collect()
}

fn conditional_y_weights(
    params: &ExperimentParams,
    t: i64,
) -> Result<(Vec<BigRational>, BigRational), Error> {
    let n = params.n;
    let mut cache = GaussianCache::new();
    let theta = params.theta();
    let mut theta_power = BigRational::one();
    let mut weights = Vec::with_capacity(n + 1);
    let mut total = BigRational::zero();
    for k in 0..=n {
        let count = cache.partition_count(k, (n - k) as u32, t);
        let w = BigRational::from_integer(count) * &theta_power;
        total += &w;
        weights.push(w);
        theta_power *= &theta;
    }
    if total.is_zero() {
        return Err(Error::ZeroProbabilityCondition);
    }
    Ok((weights, total))
}

/// Conditional pmf `P(Y = k | T = t)`, proportional to
/// `#P(k, n-k; t) * theta^k` with `theta = pi / (1-pi)`.
///
/// Errors when `P(T = t) = 0`.
pub fn conditional_y_given_t(params: &ExperimentParams, t: i64, k: i64) -> Result<Prob, Error> {
    let (weights, total) = conditional_y_weights(params, t)?;
    let numerator = usize::try_from(k)
        .ok()
        .and_then(|k| weights.get(k))
        .cloned()
        .unwrap_or_else(BigRational::zero);
    Ok(Prob::from_unit_interval(numerator / total))
}

/// The `r`-th raw conditional moment `E(Y^r | T = t)`, computed directly
/// from the conditional pmf; `r` must be at least one.
pub fn conditional_y_moment(
    params: &ExperimentParams,
    t: i64,
    r: u32,
) -> Result<BigRational, Error> {
    if r == 0 {
        return Err(Error::InvalidArgument("moment order r must be positive"));
    }
    let (weights, total) = conditional_y_weights(params, t)?;
    let mut sum = BigRational::zero();
    for (k, w) in weights.iter().enumerate() {
        if !w.is_zero() {
            let k_pow = num_traits::pow(BigInt::from(k), r as usize);
            sum += BigRational::from_integer(k_pow) * w;
        }
    }
    Ok(sum / total)
}

/// The first two weighted coefficient sums of `gauss(n, k)`:
/// `sum_j j * #P(k, n-k; j)` and `sum_j j^2 * #P(k, n-k; j)`.
///
/// Each sum is computed both by direct coefficient summation and by its
/// closed form — `binomial(n, 2) * binomial(n-2, k-1)` for the first,
/// `binomial(n, k) * k(n-k)/12 * (n + 1 + 3k(n-k))` for the second — and
/// the two routes are asserted equal; a mismatch is a fatal defect.
///
/// Requires `k <= n`.
pub fn lemma_sums(n: u32, k: u32) -> (BigInt, BigRational) {
    lemma_sums_with(&mut GaussianCache::new(), n, k)
}

/// [`lemma_sums`] against a shared cache.
pub fn lemma_sums_with(cache: &mut GaussianCache, n: u32, k: u32) -> (BigInt, BigRational) {
    assert!(k <= n, "lemma sums need k <= n");
    let mut sum_j = BigInt::zero();
    let mut sum_j2 = BigInt::zero();
    for (j, c) in cache
        .gaussian(n, i64::from(k))
        .coefficients()
        .iter()
        .enumerate()
    {
        let j = BigInt::from(j);
        sum_j += c * &j;
        sum_j2 += c * &j * &j;
    }

    let closed_j = if n >= 2 && k >= 1 {
        binomial(u64::from(n), 2) * binomial(u64::from(n) - 2, u64::from(k) - 1)
    } else {
        BigInt::zero()
    };
    let km = BigInt::from(k) * BigInt::from(n - k);
    let closed_j2 = BigRational::from_integer(binomial(u64::from(n), u64::from(k)))
        * BigRational::new(km.clone(), BigInt::from(12))
        * BigRational::from_integer(BigInt::from(n) + 1 + 3 * km);

    assert_eq!(sum_j, closed_j, "first weighted sum mismatch at n={n} k={k}");
    assert_eq!(
        BigRational::from_integer(sum_j2.clone()),
        closed_j2,
        "second weighted sum mismatch at n={n} k={k}"
    );
    (sum_j, closed_j2)
}

/// Conditional mean and variance of `T` given `Y = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionalTMoments {
    pub mean: BigRational,
    pub variance: BigRational,
}

/// `E(T | Y=k) = k(n-k)/2` and `V(T | Y=k) = k(n-k)(n+1)/12`.
///
/// Requires `k <= n`.
pub fn conditional_t_moments(n: u32, k: u32) -> ConditionalTMoments {
    assert!(k <= n, "conditional moments need k <= n");
    let km = BigInt::from(k) * BigInt::from(n - k);
    ConditionalTMoments {
        mean: BigRational::new(km.clone(), BigInt::from(2)),
        variance: BigRational::new(km * (BigInt::from(n) + 1), BigInt::from(12)),
    }
}

/// Exact moments of the joint law, from the closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSummary {
    pub e_y: BigRational,
    pub e_t: BigRational,
    pub e_t2: BigRational,
    pub v_t: BigRational,
    pub e_yt: BigRational,
    pub cov_yt: BigRational,
    /// Conditional mean and variance of `T` given `Y = k`, indexed by `k`.
    pub conditional_t: Vec<ConditionalTMoments>,
}

/// Closed-form moments:
///
/// ```text
/// E(T)   = C(n,2) pi (1-pi)
/// E(T^2) = C(n,2) pi (1-pi) [ (2n-1)/3 + C(n-2,2) pi (1-pi) ]
/// V(T)   = C(n,2) pi (1-pi) [ (2n-1)/3 - pi (1-pi) (2n-3) ]
/// E(YT)  = C(n,2) pi (1-pi) [ pi (n-2) + 1 ]
/// Cov    = C(n,2) pi (1-pi) (1 - 2 pi)
/// ```
///
/// The enumeration oracle recomputes the same quantities by direct summation
/// so disagreement between the routes is detectable.
pub fn moments(params: &ExperimentParams) -> MomentSummary {
    let n = params.n;
    let n_int = n as i64;
    let pi = params.pi().clone();
    let pq = &pi * params.failure_prob();
    let e_t = BigRational::from_integer(binomial(n as u64, 2)) * &pq;

    let third = BigRational::new(BigInt::from(2 * n_int - 1), BigInt::from(3));
    let c_n2_2 = match n.checked_sub(2) {
        Some(m) => binomial(m as u64, 2),
        None => BigInt::zero(),
    };
    let e_t2 = &e_t * (&third + BigRational::from_integer(c_n2_2) * &pq);
    let v_t = &e_t * (&third - &pq * BigRational::from_integer(BigInt::from(2 * n_int - 3)));
    let e_yt = &e_t * (&pi * BigRational::from_integer(BigInt::from(n_int - 2)) + BigRational::one());
    let cov_yt = &e_t * (BigRational::one() - BigRational::from_integer(BigInt::from(2)) * &pi);
    let e_y = BigRational::from_integer(BigInt::from(n_int)) * &pi;

    let conditional_t = (0..=n)
        .map(|k| conditional_t_moments(n_as_u32(n), k as u32))
        .collect();

    MomentSummary {
        e_y,
        e_t,
        e_t2,
        v_t,
        e_yt,
        cov_yt,
        conditional_t,
    }
}

/// The referee-normalized pmf at a numeric `q > 0`:
///
/// ```text
/// P(Y = k) = gauss(n, k)(q) * pi^k / [ (1-pi)^k * H_n(q; pi/(1-pi)) ]
/// ```
///
/// The values over `k = 0..=n` sum to exactly one, and `q = 1` collapses to
/// the classical `Bin(n, pi)` pmf. For `q != 1` this is a legitimate pmf
/// but `Y` under it no longer counts successes of independent Bernoulli
/// trials with constant success probability; it is provided for comparison,
/// not as a refinement of the binomial model.
pub fn referee_normalized_pmf(
    params: &ExperimentParams,
    q_value: &BigRational,
    k: i64,
) -> Result<Prob, Error> {
    if !q_value.is_positive() {
        return Err(Error::InvalidArgument("q must be positive"));
    }
    let n = params.n;
    if k < 0 || k > n as i64 {
        return Ok(Prob::zero());
    }
    let theta = params.theta();
    let h = crate::partitions::rogers_szego_eval(n_as_u32(n), &theta).eval(q_value);
    let g = GaussianCache::new()
        .gaussian(n_as_u32(n), k)
        .map(|c| BigRational::from_integer(c.clone()))
        .eval(q_value);
    let theta_k = num_traits::pow(theta, k as usize);
    Ok(Prob::from_unit_interval(g * theta_k / h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::rogers_szego_eval;

    fn ratio(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn params(n: usize, num: i64, den: i64) -> ExperimentParams {
        ExperimentParams::new(n, ratio(num, den)).unwrap()
    }

    #[test]
    fn params_require_strictly_interior_pi() {
        assert!(ExperimentParams::new(4, ratio(0, 1)).is_err());
        assert!(ExperimentParams::new(4, ratio(1, 1)).is_err());
        assert!(ExperimentParams::new(4, ratio(3, 2)).is_err());
        assert!(ExperimentParams::new(4, ratio(-1, 2)).is_err());
        assert!(ExperimentParams::new(0, ratio(1, 2)).is_ok());
    }

    #[test]
    fn prob_range_check() {
        assert!(Prob::new(ratio(1, 2)).is_ok());
        assert!(Prob::new(ratio(3, 2)).is_err());
        assert!(Prob::new(ratio(-1, 2)).is_err());
    }

    #[test]
    fn q_pmf_collapses_to_binomial_at_one() {
        let p = params(4, 1, 2);
        let poly = q_generalized_pmf(&p, 2);
        assert_eq!(poly.eval_at_one(), ratio(3, 8));
        // Coefficients are (1-pi)^2 pi^2 * [1, 1, 2, 1, 1].
        let w = ratio(1, 16);
        let want: Vec<BigRational> = [1, 1, 2, 1, 1]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)) * &w)
            .collect();
        assert_eq!(poly.coefficients(), &want[..]);
    }

    #[test]
    fn q_pmf_edges() {
        let p = params(5, 1, 3);
        assert_eq!(
            q_generalized_pmf(&p, 0),
            QPolynomial::constant(num_traits::pow(ratio(2, 3), 5))
        );
        assert!(q_generalized_pmf(&p, -1).is_zero());
        assert!(q_generalized_pmf(&p, 6).is_zero());
    }

    #[test]
    fn joint_pmf_n4_cells() {
        for pi in [ratio(1, 2), ratio(3, 10)] {
            let p = ExperimentParams::new(4, pi.clone()).unwrap();
            let w = num_traits::pow(BigRational::one() - &pi, 2) * num_traits::pow(pi, 2);
            assert_eq!(
                joint_pmf(&p, 2, 2).into_ratio(),
                BigRational::from_integer(BigInt::from(2)) * w
            );
        }
        let p = params(4, 1, 2);
        assert_eq!(joint_pmf(&p, 2, 2).into_ratio(), ratio(1, 8));
        assert!(joint_pmf(&p, 0, 1).is_zero());
        assert!(joint_pmf(&p, -1, 0).is_zero());
        assert!(joint_pmf(&p, 5, 0).is_zero());
    }

    #[test]
    fn table_matches_pointwise_and_sums_to_one() {
        for (num, den) in [(1, 10), (1, 3), (1, 2), (9, 10)] {
            let p = params(6, num, den);
            let table = joint_pmf_table(&p).unwrap();
            assert_eq!(table.total(), BigRational::one());
            for (k, t, prob) in table.iter() {
                assert_eq!(joint_pmf(&p, k as i64, t as i64), *prob);
            }
        }
    }

    #[test]
    fn table_n4_shape() {
        let p = params(4, 1, 2);
        let table = joint_pmf_table(&p).unwrap();
        // 16 outcomes collapse to 15 support cells; only SFFS and FSSF
        // share a cell, at (2, 2).
        assert_eq!(table.iter().count(), 15);
        assert_eq!(table.get(2, 2).into_ratio(), ratio(1, 8));
        assert_eq!(table.max_t(), 4);
    }

    #[test]
    fn table_n1_and_caps() {
        let p = params(1, 2, 7);
        let table = joint_pmf_table(&p).unwrap();
        assert_eq!(table.get(0, 0).into_ratio(), ratio(5, 7));
        assert_eq!(table.get(1, 0).into_ratio(), ratio(2, 7));
        assert_eq!(table.iter().count(), 2);

        assert_eq!(
            joint_pmf_table_with_cap(&params(9, 1, 2), 8).unwrap_err(),
            Error::TableCapExceeded { n: 9, cap: 8 }
        );
    }

    #[test]
    fn marginal_t_examples() {
        let pi = ratio(2, 5);
        let p = ExperimentParams::new(4, pi.clone()).unwrap();
        let fp = BigRational::one() - &pi;
        let want = num_traits::pow(fp.clone(), 3) * &pi
            + num_traits::pow(fp.clone(), 2) * num_traits::pow(pi.clone(), 2)
            + fp * num_traits::pow(pi, 3);
        assert_eq!(marginal_t(&p, 3).into_ratio(), want);

        let half = params(4, 1, 2);
        assert!(marginal_t(&half, 5).is_zero());
        assert!(marginal_t(&half, -1).is_zero());
        assert_eq!(marginal_t(&half, 0).into_ratio(), ratio(5, 16));
    }

    #[test]
    fn marginal_y_examples() {
        let p = params(4, 1, 2);
        assert_eq!(marginal_y(&p, 2).into_ratio(), ratio(3, 8));
        let p3 = params(3, 2, 5);
        assert_eq!(
            marginal_y(&p3, 3).into_ratio(),
            num_traits::pow(ratio(2, 5), 3)
        );
        assert!(marginal_y(&p3, 4).is_zero());
        assert_eq!(binomial(15, 6), BigInt::from(5005));
        let p15 = params(15, 1, 2);
        assert_eq!(
            marginal_y(&p15, 6).into_ratio(),
            ratio(5005, 32768)
        );
    }

    #[test]
    fn conditional_t_given_y_examples() {
        assert_eq!(conditional_t_given_y(4, 2, 2).into_ratio(), ratio(1, 3));
        assert!(conditional_t_given_y(4, 2, 5).is_zero());
        assert!(conditional_t_given_y(4, 2, -1).is_zero());
        // Support of T given Y = 6 in 15 trials is 0..=54.
        let row = conditional_t_pmf(15, 6);
        assert_eq!(row.len(), 55);
        assert!(row.iter().all(|p| !p.is_zero()));
        let total: BigRational = row.iter().map(Prob::ratio).sum();
        assert_eq!(total, BigRational::one());
    }

    #[test]
    fn conditional_y_given_t_matches_the_simplified_form() {
        for (num, den) in [(1, 10), (1, 3), (1, 2), (9, 10)] {
            let pi = ratio(num, den);
            let p = ExperimentParams::new(4, pi.clone()).unwrap();
            let got = conditional_y_given_t(&p, 3, 2).unwrap();
            let fp = BigRational::one() - &pi;
            let want = (&fp * &pi) / (BigRational::one() - &pi + &pi * &pi);
            assert_eq!(got.into_ratio(), want, "pi = {num}/{den}");
        }
        let half = params(4, 1, 2);
        assert_eq!(
            conditional_y_given_t(&half, 3, 2).unwrap().into_ratio(),
            ratio(1, 3)
        );
        // SSFF is the only outcome with t = 4.
        assert_eq!(conditional_y_given_t(&half, 4, 2).unwrap(), Prob::one());
        assert_eq!(
            conditional_y_given_t(&half, 5, 2).unwrap_err(),
            Error::ZeroProbabilityCondition
        );
    }

    #[test]
    fn conditional_y_moments_n4() {
        let p = params(4, 1, 2);
        assert_eq!(
            conditional_y_moment(&p, 4, 1).unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );
        assert_eq!(
            conditional_y_moment(&p, 3, 1).unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );
        assert_eq!(
            conditional_y_moment(&p, 0, 1).unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );
        assert!(conditional_y_moment(&p, 0, 0).is_err());
    }

    #[test]
    fn lemma_sums_examples() {
        let (s1, s2) = lemma_sums(4, 2);
        assert_eq!(s1, BigInt::from(12));
        assert_eq!(s2, BigRational::from_integer(BigInt::from(34)));
        for n in [0u32, 3, 7] {
            let (s1, s2) = lemma_sums(n, 0);
            assert!(s1.is_zero());
            assert!(s2.is_zero());
        }
    }

    #[test]
    fn moments_n4_half() {
        let m = moments(&params(4, 1, 2));
        assert_eq!(m.e_t, ratio(3, 2));
        assert_eq!(m.e_t2, ratio(31, 8));
        assert_eq!(m.v_t, ratio(13, 8));
        assert_eq!(m.e_yt, BigRational::from_integer(BigInt::from(3)));
        assert!(m.cov_yt.is_zero());
        assert_eq!(m.e_y, BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn moments_small_n() {
        let pi = ratio(2, 7);
        let p = ExperimentParams::new(2, pi.clone()).unwrap();
        let m = moments(&p);
        assert_eq!(m.e_t, &pi * (BigRational::one() - &pi));
        for n in [0usize, 1] {
            let m = moments(&params(n, 1, 3));
            assert!(m.e_t.is_zero());
            assert!(m.e_t2.is_zero());
            assert!(m.v_t.is_zero());
            assert!(m.e_yt.is_zero());
            assert!(m.cov_yt.is_zero());
        }
    }

    #[test]
    fn variance_identity_holds() {
        for n in 0..=10usize {
            for (num, den) in [(1, 10), (1, 2), (9, 10)] {
                let m = moments(&params(n, num, den));
                assert_eq!(m.v_t, &m.e_t2 - &m.e_t * &m.e_t);
                let e_y = &m.e_y;
                assert_eq!(m.cov_yt, &m.e_yt - e_y * &m.e_t);
            }
        }
    }

    #[test]
    fn conditional_t_moments_examples() {
        let m = conditional_t_moments(15, 6);
        assert_eq!(m.mean, BigRational::from_integer(BigInt::from(27)));
        let m0 = conditional_t_moments(9, 0);
        assert!(m0.mean.is_zero());
        assert!(m0.variance.is_zero());
        let m42 = conditional_t_moments(4, 2);
        assert_eq!(m42.mean, BigRational::from_integer(BigInt::from(2)));
        assert_eq!(m42.variance, ratio(5, 3));
        // Symmetry in k and n - k.
        assert_eq!(conditional_t_moments(11, 3), conditional_t_moments(11, 8));
    }

    #[test]
    fn rogers_szego_sum_identity() {
        for n in [0usize, 1, 5, 8] {
            for (num, den) in [(1, 3), (1, 2), (9, 10)] {
                let p = params(n, num, den);
                let mut sum: QPolynomial<BigRational> = QPolynomial::zero();
                for k in 0..=n as i64 {
                    sum = &sum + &q_generalized_pmf(&p, k);
                }
                let rhs = rogers_szego_eval(n as u32, &p.theta())
                    .scaled(&num_traits::pow(p.failure_prob(), n));
                assert_eq!(sum, rhs, "n={n} pi={num}/{den}");
                assert_eq!(sum.eval_at_one(), BigRational::one());
            }
        }
    }

    #[test]
    fn referee_pmf_collapses_at_q_one() {
        let p = params(5, 3, 10);
        for k in 0..=5i64 {
            assert_eq!(
                referee_normalized_pmf(&p, &BigRational::one(), k).unwrap(),
                marginal_y(&p, k)
            );
        }
    }

    #[test]
    fn referee_pmf_worked_value_and_normalization() {
        let p2 = params(2, 1, 2);
        assert_eq!(
            referee_normalized_pmf(&p2, &ratio(1, 2), 1)
                .unwrap()
                .into_ratio(),
            ratio(3, 7)
        );

        let p4 = params(4, 1, 4);
        let q = ratio(1, 3);
        let mut total = BigRational::zero();
        for k in 0..=4i64 {
            total += referee_normalized_pmf(&p4, &q, k).unwrap().into_ratio();
        }
        assert_eq!(total, BigRational::one());
        assert!(referee_normalized_pmf(&p4, &q, 9).unwrap().is_zero());
        assert!(referee_normalized_pmf(&p4, &ratio(0, 1), 2).is_err());
        assert!(referee_normalized_pmf(&p4, &ratio(-1, 2), 2).is_err());
    }
}

//! Seeded Monte-Carlo simulation of the binomial experiment, and the
//! homogeneity report for an observed trial sequence.
//!
//! # Reproducibility contract
//!
//! The generator is SplitMix64 (Steele, Lea, Vigna), chosen for its tiny
//! state and platform-independent arithmetic. A batch is a pure function of
//! `(params, seed, count)`: sequences are drawn from a single stream, one
//! `u64` per trial, in trial order within each sequence and sequence order
//! within the batch. There is no hidden parallelism; callers that shard
//! work across lanes must use distinct seeds, and the set of `(seed,
//! count)` pairs then becomes the reproducibility key.
//!
//! # Bernoulli draws
//!
//! A trial succeeds when the next `u64` is below `floor(pi * 2^64)`, so the
//! effective success probability differs from the exact rational `pi` by
//! less than `2^-64`. Everything downstream of sampling is empirical
//! anyway; the exact-arithmetic pipeline never touches the sampler.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::distribution::{conditional_t_moments, ExperimentParams, Prob};
use crate::error::Error;
use crate::partitions::{binomial, GaussianCache};
use crate::words::{Symbol, Word};

/// SplitMix64: `z = (state += 0x9E3779B97F4A7C15)` followed by two
/// xor-multiply mixing rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// `floor(pi * 2^64)`: a trial succeeds when a uniform `u64` is below this.
fn bernoulli_threshold(params: &ExperimentParams) -> u64 {
    let scaled: BigInt = (params.pi().numer() << 64u32) / params.pi().denom();
    scaled.to_u64().expect("0 < pi < 1 keeps the threshold in range")
}

/// Draws one length-`n` trial sequence, consuming one `u64` per trial.
pub fn sample_sequence(params: &ExperimentParams, rng: &mut SplitMix64) -> Word {
    let threshold = bernoulli_threshold(params);
    let symbols = (0..params.n())
        .map(|_| {
            if rng.next_u64() < threshold {
                Symbol::S
            } else {
                Symbol::F
            }
        })
        .collect();
    Word::new(symbols)
}

/// Empirical joint distribution of `(Y, T)` over `count` simulated
/// sequences, with raw moment accumulators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleBatch {
    params: ExperimentParams,
    seed: u64,
    count: u64,
    counts: BTreeMap<(usize, u64), u64>,
    sum_y: u128,
    sum_t: u128,
    sum_t2: u128,
    sum_yt: u128,
}

impl SampleBatch {
    pub fn params(&self) -> &ExperimentParams {
        &self.params
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Occurrence counts keyed by `(k, t)`.
    pub fn counts(&self) -> &BTreeMap<(usize, u64), u64> {
        &self.counts
    }

    /// Exact empirical relative frequency of the cell `(k, t)`.
    pub fn frequency(&self, k: usize, t: u64) -> BigRational {
        let hits = self.counts.get(&(k, t)).copied().unwrap_or(0);
        BigRational::new(BigInt::from(hits), BigInt::from(self.count))
    }

    pub fn empirical_e_y(&self) -> BigRational {
        self.mean(self.sum_y)
    }

    pub fn empirical_e_t(&self) -> BigRational {
        self.mean(self.sum_t)
    }

    pub fn empirical_e_t2(&self) -> BigRational {
        self.mean(self.sum_t2)
    }

    pub fn empirical_e_yt(&self) -> BigRational {
        self.mean(self.sum_yt)
    }

    fn mean(&self, sum: u128) -> BigRational {
        BigRational::new(BigInt::from(sum), BigInt::from(self.count))
    }
}

/// Runs `count` simulated sequences. Deterministic: the same
/// `(params, seed, count)` always yields the identical batch.
///
/// `count` must be at least one.
pub fn run_batch(params: &ExperimentParams, seed: u64, count: u64) -> SampleBatch {
    assert!(count >= 1, "a batch draws at least one sequence");
    let n = params.n();
    let threshold = bernoulli_threshold(params);
    let mut rng = SplitMix64::new(seed);
    let mut batch = SampleBatch {
        params: params.clone(),
        seed,
        count,
        counts: BTreeMap::new(),
        sum_y: 0,
        sum_t: 0,
        sum_t2: 0,
        sum_yt: 0,
    };
    for _ in 0..count {
        let mut k = 0u64;
        let mut t = 0u64;
        for _ in 0..n {
            if rng.next_u64() < threshold {
                k += 1;
            } else {
                t += k;
            }
        }
        *batch.counts.entry((k as usize, t)).or_insert(0) += 1;
        batch.sum_y += u128::from(k);
        batch.sum_t += u128::from(t);
        batch.sum_t2 += u128::from(t) * u128::from(t);
        batch.sum_yt += u128::from(k) * u128::from(t);
    }
    batch
}

/// Where an observed inversion count sits relative to its conditional law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// `t` in the central band: successes and failures well mixed.
    WellMixed,
    /// `t` low: the failures are concentrated at the front.
    FailuresFrontLoaded,
    /// `t` high: the successes are concentrated at the front.
    SuccessesFrontLoaded,
    /// `k = 0` or `k = n`: `T` is identically zero, no signal.
    Degenerate,
}

impl Homogeneity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Homogeneity::WellMixed => "well mixed",
            Homogeneity::FailuresFrontLoaded => "failures front-loaded",
            Homogeneity::SuccessesFrontLoaded => "successes front-loaded",
            Homogeneity::Degenerate => "degenerate",
        }
    }
}

/// Homogeneity summary of one observed sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub n: usize,
    pub k: usize,
    pub t: u64,
    /// Largest possible inversion count for this `(n, k)`: `k(n-k)`.
    pub max_t: u64,
    /// `E(T | Y = k) = k(n-k)/2`.
    pub conditional_mean: BigRational,
    /// `V(T | Y = k) = k(n-k)(n+1)/12`.
    pub conditional_variance: BigRational,
    /// Exact percentile `P(T <= t | Y = k)`.
    pub percentile: Prob,
    pub classification: Homogeneity,
}

/// Classifies how well mixed an observed sequence is, via the exact
/// conditional law of `T` given its success count.
///
/// Classification rule: the extremes `t = 0` and `t = k(n-k)` are always
/// "failures front-loaded" and "successes front-loaded" respectively;
/// otherwise the exact percentile `p = P(T <= t | Y = k)` decides, with
/// `p <= 1/4` front-loaded failures, `p >= 3/4` front-loaded successes, and
/// the middle band well mixed. Words with `k = 0` or `k = n` carry no
/// signal and classify as degenerate.
pub fn homogeneity_report(word: &Word) -> Result<HomogeneityReport, Error> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = word.len();
    let k = word.successes();
    let t = crate::words::inversions(word);
    let n_u32 = u32::try_from(n).expect("word length fits u32");
    let m = conditional_t_moments(n_u32, k as u32);
    let max_t = k as u64 * (n - k) as u64;

    if k == 0 || k == n {
        return Ok(HomogeneityReport {
            n,
            k,
            t,
            max_t,
            conditional_mean: m.mean,
            conditional_variance: m.variance,
            percentile: Prob::one(),
            classification: Homogeneity::Degenerate,
        });
    }

    let mut below = BigInt::zero();
    let mut cache = GaussianCache::new();
    for (j, c) in cache
        .gaussian(n_u32, k as i64)
        .coefficients()
        .iter()
        .enumerate()
    {
        if j as u64 <= t {
            below += c;
        }
    }
    let percentile = Prob::from_unit_interval(BigRational::new(
        below,
        binomial(n as u64, k as u64),
    ));

    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let three_quarters = BigRational::new(BigInt::from(3), BigInt::from(4));
    let classification = if t == 0 {
        Homogeneity::FailuresFrontLoaded
    } else if t == max_t {
        Homogeneity::SuccessesFrontLoaded
    } else if *percentile.ratio() <= quarter {
        Homogeneity::FailuresFrontLoaded
    } else if *percentile.ratio() >= three_quarters {
        Homogeneity::SuccessesFrontLoaded
    } else {
        Homogeneity::WellMixed
    };

    Ok(HomogeneityReport {
        n,
        k,
        t,
        max_t,
        conditional_mean: m.mean,
        conditional_variance: m.variance,
        percentile,
        classification,
    })
}

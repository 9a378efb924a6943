//! Brute-force enumeration of all `2^n` outcomes.
//!
//! Ground truth for the closed forms in [`crate::distribution`]: every
//! quantity there can be recomputed here by direct weighted summation over
//! the full outcome list, in exact rational arithmetic.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::distribution::{ExperimentParams, JointPmfTable, Prob};
use crate::error::Error;
use crate::words::{inversions, Symbol, Word};

/// Default cap on `n` for exhaustive enumeration (about a million outcomes).
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// One enumerated outcome with its statistics and exact probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeRecord {
    pub word: Word,
    /// Success count `k`.
    pub successes: usize,
    /// Inversion count `t`.
    pub inversions: u64,
    /// `pi^k (1-pi)^(n-k)`.
    pub prob: Prob,
}

/// Enumerates all `2^n` outcomes with the default cap.
pub fn enumerate_outcomes(params: &ExperimentParams) -> Result<Vec<OutcomeRecord>, Error> {
    enumerate_outcomes_with_cap(params, DEFAULT_ORACLE_CAP)
}

/// Enumerates all `2^n` outcomes in natural binary order: the word read as
/// an `n`-bit number with `F = 0`, `S = 1` and the first trial as the most
/// significant bit, counting up from `F…F` to `S…S`.
pub fn enumerate_outcomes_with_cap(
    params: &ExperimentParams,
    cap: usize,
) -> Result<Vec<OutcomeRecord>, Error> {
    let n = params.n();
    if n > cap {
        return Err(Error::ExpansionCapExceeded { n, cap });
    }
    let weights: Vec<BigRational> = (0..=n).map(|k| params.outcome_weight(k)).collect();
    let mut out = Vec::with_capacity(1usize << n);
    for index in 0..(1u64 << n) {
        let symbols: Vec<Symbol> = (0..n)
            .map(|pos| {
                if index >> (n - 1 - pos) & 1 == 1 {
                    Symbol::S
                } else {
                    Symbol::F
                }
            })
            .collect();
        let word = Word::new(symbols);
        let successes = word.successes();
        out.push(OutcomeRecord {
            inversions: inversions(&word),
            successes,
            prob: Prob::from_unit_interval(weights[successes].clone()),
            word,
        });
    }
    Ok(out)
}

/// The joint pmf table rebuilt by grouping enumerated outcomes by `(k, t)`.
pub fn oracle_joint_pmf(params: &ExperimentParams) -> Result<JointPmfTable, Error> {
    oracle_joint_pmf_with_cap(params, DEFAULT_ORACLE_CAP)
}

pub fn oracle_joint_pmf_with_cap(
    params: &ExperimentParams,
    cap: usize,
) -> Result<JointPmfTable, Error> {
    let records = enumerate_outcomes_with_cap(params, cap)?;
    let mut table = JointPmfTable::zeroed(params.clone());
    for r in &records {
        table.add_to_cell(r.successes, r.inversions, r.prob.ratio());
    }
    Ok(table)
}

/// Which expectation to compute over the enumerated outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentSelector {
    EY,
    ET,
    ET2,
    VarT,
    EYT,
    CovYT,
    /// `E(T | Y = k)`.
    ETGivenY(usize),
    /// `V(T | Y = k)`.
    VarTGivenY(usize),
}

/// An expectation computed by direct weighted summation over all `2^n`
/// outcomes. Conditional selectors error when the conditioning event has
/// probability zero (`k > n`).
pub fn oracle_moment(
    params: &ExperimentParams,
    selector: MomentSelector,
) -> Result<BigRational, Error> {
    oracle_moment_with_cap(params, selector, DEFAULT_ORACLE_CAP)
}

pub fn oracle_moment_with_cap(
    params: &ExperimentParams,
    selector: MomentSelector,
    cap: usize,
) -> Result<BigRational, Error> {
    let records = enumerate_outcomes_with_cap(params, cap)?;

    let raw = |f: &dyn Fn(&OutcomeRecord) -> u128| -> BigRational {
        records
            .iter()
            .map(|r| BigRational::from_integer(f(r).into()) * r.prob.ratio())
            .sum()
    };
    let conditional = |k: usize, f: &dyn Fn(&OutcomeRecord) -> u128| -> Result<BigRational, Error> {
        let mass: BigRational = records
            .iter()
            .filter(|r| r.successes == k)
            .map(|r| r.prob.ratio())
            .sum();
        if mass.is_zero() {
            return Err(Error::ZeroProbabilityCondition);
        }
        let weighted: BigRational = records
            .iter()
            .filter(|r| r.successes == k)
            .map(|r| BigRational::from_integer(f(r).into()) * r.prob.ratio())
            .sum();
        Ok(weighted / mass)
    };

    Ok(match selector {
        MomentSelector::EY => raw(&|r| r.successes as u128),
        MomentSelector::ET => raw(&|r| u128::from(r.inversions)),
        MomentSelector::ET2 => raw(&|r| u128::from(r.inversions) * u128::from(r.inversions)),
        MomentSelector::VarT => {
            let e_t = raw(&|r| u128::from(r.inversions));
            raw(&|r| u128::from(r.inversions) * u128::from(r.inversions)) - &e_t * &e_t
        }
        MomentSelector::EYT => raw(&|r| r.successes as u128 * u128::from(r.inversions)),
        MomentSelector::CovYT => {
            let e_y = raw(&|r| r.successes as u128);
            let e_t = raw(&|r| u128::from(r.inversions));
            raw(&|r| r.successes as u128 * u128::from(r.inversions)) - e_y * e_t
        }
        MomentSelector::ETGivenY(k) => conditional(k, &|r| u128::from(r.inversions))?,
        MomentSelector::VarTGivenY(k) => {
            let e = conditional(k, &|r| u128::from(r.inversions))?;
            let e2 = conditional(k, &|r| {
                u128::from(r.inversions) * u128::from(r.inversions)
            })?;
            e2 - &e * &e
        }
    })
}

/// Empirical-scale helper: the float value of an exact rational.
pub fn to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use num_bigint::BigInt;
    use num_traits::One;

    fn ratio(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn params(n: usize, num: i64, den: i64) -> ExperimentParams {
        ExperimentParams::new(n, ratio(num, den)).unwrap()
    }

    #[test]
    fn outcome_count_and_total_probability() {
        for (n, num, den) in [(0usize, 1, 2), (4, 1, 2), (10, 3, 10)] {
            let p = params(n, num, den);
            let records = enumerate_outcomes(&p).unwrap();
            assert_eq!(records.len(), 1 << n);
            let distinct: BTreeSet<_> = records.iter().map(|r| r.word.clone()).collect();
            assert_eq!(distinct.len(), records.len());
            let total: BigRational = records.iter().map(|r| r.prob.ratio()).sum();
            assert_eq!(total, BigRational::one());
        }
    }

    #[test]
    fn enumeration_is_binary_order() {
        let records = enumerate_outcomes(&params(2, 1, 2)).unwrap();
        let words: Vec<String> = records.iter().map(|r| r.word.to_string()).collect();
        assert_eq!(words, ["FF", "FS", "SF", "SS"]);
    }

    #[test]
    fn cap_guard() {
        assert_eq!(
            enumerate_outcomes_with_cap(&params(8, 1, 2), 7).unwrap_err(),
            Error::ExpansionCapExceeded { n: 8, cap: 7 }
        );
    }

    #[test]
    fn oracle_table_n4() {
        let p = params(4, 1, 2);
        let table = oracle_joint_pmf(&p).unwrap();
        assert_eq!(table.get(2, 2).into_ratio(), ratio(1, 8));
        assert_eq!(table.total(), BigRational::one());
    }

    #[test]
    fn oracle_table_n1() {
        let p = params(1, 2, 7);
        let table = oracle_joint_pmf(&p).unwrap();
        assert_eq!(table.get(0, 0).into_ratio(), ratio(5, 7));
        assert_eq!(table.get(1, 0).into_ratio(), ratio(2, 7));
    }

    #[test]
    fn oracle_agrees_with_closed_table() {
        let p = params(6, 1, 3);
        assert_eq!(
            oracle_joint_pmf(&p).unwrap(),
            crate::distribution::joint_pmf_table(&p).unwrap()
        );
    }

    #[test]
    fn oracle_moments_n4_half() {
        let p = params(4, 1, 2);
        assert_eq!(
            oracle_moment(&p, MomentSelector::ET).unwrap(),
            ratio(3, 2)
        );
        assert_eq!(
            oracle_moment(&p, MomentSelector::EYT).unwrap(),
            BigRational::from_integer(BigInt::from(3))
        );
        assert_eq!(
            oracle_moment(&p, MomentSelector::VarT).unwrap(),
            ratio(13, 8)
        );
    }

    #[test]
    fn oracle_e_t_matches_closed_form_across_pi() {
        for (num, den) in [(1, 10), (1, 3), (1, 2), (9, 10), (7, 11)] {
            let p = params(7, num, den);
            let closed = crate::distribution::moments(&p).e_t;
            assert_eq!(oracle_moment(&p, MomentSelector::ET).unwrap(), closed);
        }
    }

    #[test]
    fn conditional_moment_errors_outside_support() {
        let p = params(3, 1, 2);
        assert_eq!(
            oracle_moment(&p, MomentSelector::ETGivenY(4)).unwrap_err(),
            Error::ZeroProbabilityCondition
        );
        assert_eq!(
            oracle_moment(&p, MomentSelector::ETGivenY(1)).unwrap(),
            BigRational::one()
        );
    }
}

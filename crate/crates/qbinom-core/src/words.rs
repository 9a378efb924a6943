//! Success/failure words, the transposition operator indexed by a bounded
//! partition, and the inversion statistic.
//!
//! A word records one outcome of a sequence of Bernoulli trials, `F` for
//! failure and `S` for success (the noncommutative monomial letters `x` and
//! `y`). An inversion is a pair of positions with an `S` strictly before an
//! `F`; the inversion count of a word equals the size of the partition the
//! word corresponds to under [`word_to_partition`].
//!
//! Transposition positions are 1-based throughout the public contract.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::partitions::BoundedPartition;

/// Default cap on `n` for the `2^n` word expansion.
pub const DEFAULT_EXPANSION_CAP: usize = 20;

/// One trial outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// Failure, the letter `x`.
    F,
    /// Success, the letter `y`.
    S,
}

/// A finite sequence of trial outcomes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word { symbols }
    }

    /// The base word `F^failures S^successes` that the partition operator
    /// permutes.
    pub fn sorted(failures: usize, successes: usize) -> Self {
        let mut symbols = Vec::with_capacity(failures + successes);
        symbols.resize(failures, Symbol::F);
        symbols.resize(failures + successes, Symbol::S);
        Word { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Number of `S` symbols.
    pub fn successes(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == Symbol::S).count()
    }

    /// Number of `F` symbols.
    pub fn failures(&self) -> usize {
        self.len() - self.successes()
    }

    /// The word as letters `x` (failure) and `y` (success); display alias
    /// for the monomial notation.
    pub fn xy_string(&self) -> String {
        self.symbols
            .iter()
            .map(|s| match s {
                Symbol::F => 'x',
                Symbol::S => 'y',
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            f.write_str(match s {
                Symbol::F => "F",
                Symbol::S => "S",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                'F' | 'f' => Ok(Symbol::F),
                'S' | 's' => Ok(Symbol::S),
                other => Err(Error::InvalidSymbol { found: other }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }
}

/// A swap of the letters at 1-based positions `i` and `j`; `i == j` is the
/// identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

impl Transposition {
    pub fn apply(&self, word: &mut Word) -> Result<(), Error> {
        let len = word.len();
        for position in [self.i, self.j] {
            if position == 0 || position > len {
                return Err(Error::PositionOutOfRange { position, len });
            }
        }
        word.symbols.swap(self.i - 1, self.j - 1);
        Ok(())
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

fn check_in_box(lambda: &BoundedPartition, n: usize, k: usize) -> Result<u32, Error> {
    let m = u32::try_from(n - k).expect("word length fits u32");
    let outside = lambda.num_parts() > k || lambda.parts().first().is_some_and(|&p| p > m);
    if outside {
        return Err(Error::PartitionOutsideBox {
            max_parts: k,
            bound: m,
        });
    }
    Ok(m)
}

/// The transpositions `(n-k+j, n-k+j-lambda_j)` for `j = 1..=k`, in
/// application order (the `j = 1` factor first). Parts beyond the stored
/// tuple count as zero, giving identity transpositions.
pub fn qlambda_transpositions(
    lambda: &BoundedPartition,
    n: usize,
    k: usize,
) -> Result<Vec<Transposition>, Error> {
    if k > n {
        return Err(Error::InvalidArgument("successes k cannot exceed length n"));
    }
    check_in_box(lambda, n, k)?;
    let parts = lambda.parts();
    Ok((1..=k)
        .map(|j| {
            let part = parts.get(j - 1).copied().unwrap_or(0) as usize;
            Transposition {
                i: n - k + j,
                j: n - k + j - part,
            }
        })
        .collect())
}

/// Applies the partition-indexed transposition product to the base word
/// `F^(n-k) S^k` and returns the permuted word.
///
/// `lambda` must fit in the box: at most `k` parts, each at most `n - k`.
/// The result always has `k` successes.
pub fn apply_qlambda(lambda: &BoundedPartition, n: usize, k: usize) -> Result<Word, Error> {
    let transpositions = qlambda_transpositions(lambda, n, k)?;
    let mut word = Word::sorted(n - k, k);
    for t in transpositions {
        t.apply(&mut word).expect("positions are in range");
    }
    Ok(word)
}

/// Counts inversions: pairs of positions `(i, j)`, `i < j`, with an `S` at
/// `i` and an `F` at `j`. Equivalently the total number of failures
/// occurring after each success.
pub fn inversions(word: &Word) -> u64 {
    let mut successes_seen = 0u64;
    let mut count = 0u64;
    for s in word.symbols() {
        match s {
            Symbol::S => successes_seen += 1,
            Symbol::F => count += successes_seen,
        }
    }
    count
}

/// Recovers the partition whose `j`-th part counts the failures after the
/// `j`-th success. The result lies in the box of `k` parts bounded by
/// `n - k` and its size equals [`inversions`] of the word.
pub fn word_to_partition(word: &Word) -> BoundedPartition {
    let mut parts = Vec::with_capacity(word.successes());
    let mut failures_after = 0u32;
    for s in word.symbols().iter().rev() {
        match s {
            Symbol::F => failures_after += 1,
            Symbol::S => parts.push(failures_after),
        }
    }
    parts.reverse();
    let bound = u32::try_from(word.failures()).expect("word length fits u32");
    BoundedPartition::new(parts, bound).expect("failure counts are weakly decreasing by construction")
}

/// Expands all `2^n` outcomes with the default cap on `n`.
pub fn expand_noncommutative(n: usize) -> Result<Vec<(BoundedPartition, Word)>, Error> {
    expand_noncommutative_with_cap(n, DEFAULT_EXPANSION_CAP)
}

/// For each `k = 0..=n` and each partition in `P(k, n-k)`, emits the
/// partition together with the word it produces. The emitted words cover
/// all `2^n` words of length `n`, each exactly once.
///
/// Order: `k` ascending, partitions in descending lex order within each `k`.
pub fn expand_noncommutative_with_cap(
    n: usize,
    cap: usize,
) -> Result<Vec<(BoundedPartition, Word)>, Error> {
    if n > cap {
        return Err(Error::ExpansionCapExceeded { n, cap });
    }
    let mut out = Vec::with_capacity(1usize << n);
    for k in 0..=n {
        let m = u32::try_from(n - k).expect("word length fits u32");
        // Cap already bounds the total at 2^n.
        for lambda in crate::partitions::enumerate_partitions_with_cap(k, m, u64::MAX)? {
            let word = apply_qlambda(&lambda, n, k)?;
            out.push((lambda, word));
        }
    }
    Ok(out)
}

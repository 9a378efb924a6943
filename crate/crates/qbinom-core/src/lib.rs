//! Exact combinatorics and probability for the inversion-refined binomial
//! experiment.
//!
//! For `n` independent Bernoulli trials with success probability `pi`, the
//! success count `Y` is classical `Bin(n, pi)`; the inversion count `T`
//! (success-before-failure pairs in the outcome sequence) refines it. This
//! crate computes the joint, marginal, and conditional laws of `(Y, T)` and
//! their moments in exact rational arithmetic, with the combinatorial layer
//! (bounded partitions, Gaussian polynomials, success/failure words)
//! exposed directly, plus two independent checking routes: an exhaustive
//! enumeration oracle and a seeded Monte-Carlo sampler.
//!
//! The crate is `no_std` (with `alloc`); IO, parsing, and output formats
//! live in the companion `qbinom` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod distribution;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod sampler;
pub mod words;

pub use error::Error;
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

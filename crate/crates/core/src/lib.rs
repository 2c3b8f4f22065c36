//! Exact rational engines for divisor-window densities.
//!
//! Given a window (n, m), the density of integers with exactly r divisors in
//! {n+1, ..., m-1} is an exact rational, computable from one period of the
//! window's lcm. This crate computes those densities by several independent
//! routes (capped-valuation profile enumeration, subset inclusion-exclusion,
//! a brute-force period oracle, and a dedicated n = 1 integer recursion),
//! analyzes the resulting sequences for local extrema and unimodality, and
//! does the same for the densities of integers whose k-th smallest prime
//! factor is a given prime. All engines agree exactly or a test fails; no
//! floating point ever enters a density.

pub mod analytic_bounds;
pub mod error;
pub mod exact_math;
pub mod kth_prime_density;
pub mod period_oracle;
pub mod sequence_analysis;
pub mod window_density;

pub use error::{Error, Result};

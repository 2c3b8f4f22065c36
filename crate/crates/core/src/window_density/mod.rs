//! Exact densities of divisor counts over a window (n, m).
//!
//! The general engine enumerates capped valuation profiles: the divisor count
//! of x depends only on min(v_q(x), cap_q) per relevant prime q, so summing
//! exact residue-class densities over that finite profile space gives every
//! delta_r(n, m) at once. A subset-based inclusion-exclusion engine is kept
//! as an independent oracle for narrow windows, and the n = 1 case has a
//! dedicated integer recursion that runs linearly in m.

mod engine;
mod inclusion_exclusion;
mod n_one;
mod sequence;
mod two_p;
mod types;

pub use engine::{delta, density_distribution, density_distribution_unmarginalized, DEFAULT_GUARD};
pub use inclusion_exclusion::{inclusion_exclusion_delta, IE_MAX_WIDTH};
pub use n_one::{n_one_sequence, n_one_sweep, NOneState, NOneSweep, StepKind};
pub use sequence::{delta_sequence, extend_with_prime, non_unimodality_scan, ScanOutcome};
pub use two_p::{two_p_check, TwoPCheck};
pub use types::{
    divisor_count, profile_weight, relevant_primes, singleton_primes, DensityDistribution,
    PrimeCap, ValuationProfile, Window,
};

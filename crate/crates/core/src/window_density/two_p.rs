//! The 2p drop check.
//!
//! For a prime p > n, every multiple of 2p is a multiple of p, and p already
//! sits inside (n, 2p+1). So no integer has 2p as its only divisor in the
//! window, while some integers with exactly one divisor in (n, 2p) pick up a
//! second one at 2p. Hence delta_1(n, 2p+1) < delta_1(n, 2p), strictly. This
//! verifies both halves by exact computation.

use crate::error::{Error, Result};
use crate::exact_math::{is_prime, Ratio};

use super::engine::{density_distribution, distribution_with_sole_marker};
use super::types::Window;

#[derive(Clone, Debug, PartialEq)]
pub struct TwoPCheck {
    /// delta_1(n, 2p+1) < delta_1(n, 2p).
    pub strict_drop: bool,
    /// Density of integers whose only divisor in (n, 2p+1) is 2p. Always 0.
    pub sole_2p_density: Ratio,
}

/// Evaluate the drop at the 2p extension for a prime p > n.
pub fn two_p_check(n: u64, p: u64, guard: u64) -> Result<TwoPCheck> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= n {
        return Err(Error::InvalidArgument("two_p_check needs p > n"));
    }
    let before = density_distribution(&Window::new(n, 2 * p)?, guard)?;
    let (after, sole) = distribution_with_sole_marker(&Window::new(n, 2 * p + 1)?, guard, 2 * p)?;
    Ok(TwoPCheck {
        strict_drop: after.delta(1) < before.delta(1),
        sole_2p_density: sole,
    })
}

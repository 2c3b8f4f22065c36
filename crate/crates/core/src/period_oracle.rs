//! Brute-force ground truth.
//!
//! Densities of divisibility-defined sets are exact: the divisor count of x
//! depends only on x mod L where L is the lcm of the window, so counting one
//! full period [1, L] gives the density with no approximation. Every analytic
//! engine in this crate is validated against these counters.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact_math::{first_primes, lcm_range, nat, ratio_from_naturals, Ratio};
use crate::window_density::Window;

/// Default ceiling on the period length L.
pub const DEFAULT_PERIOD_LIMIT: u64 = 100_000_000;

const BLOCK: u64 = 1 << 22;

/// Exact divisor-count tallies over one full period [1, L].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodCounts {
    pub window: Window,
    /// L = lcm(n+1, ..., m-1).
    pub period: u64,
    /// r -> number of x in [1, L] with exactly r divisors in the window.
    /// Zero-count entries are omitted.
    pub counts: BTreeMap<u64, u64>,
}

impl PeriodCounts {
    /// `counts[r] / L` as an exact rational; 0 for absent r.
    pub fn density(&self, r: u64) -> Ratio {
        match self.counts.get(&r) {
            Some(&c) => ratio_from_naturals(nat(c), nat(self.period)),
            None => Ratio::from_integer(0.into()),
        }
    }
}

/// Count divisors-in-window for every residue over one period, in fixed-size
/// blocks so memory stays bounded regardless of L.
fn count_blocks(divisors: &[u64], upper: u64) -> BTreeMap<u64, u64> {
    assert!(divisors.len() < 256, "8-bit counters require width < 256");
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut block = vec![0u8; BLOCK.min(upper) as usize];
    let mut start = 1u64;
    while start <= upper {
        let end = (start + BLOCK - 1).min(upper);
        let len = (end - start + 1) as usize;
        block[..len].fill(0);
        for &d in divisors {
            let mut multiple = start.div_ceil(d) * d;
            while multiple <= end {
                block[(multiple - start) as usize] += 1;
                multiple += d;
            }
        }
        for &c in &block[..len] {
            *counts.entry(c as u64).or_insert(0) += 1;
        }
        start = end + 1;
    }
    counts
}

/// Tally r(x) = #{d in (n,m) : d | x} for x in [1, L], L = lcm of the window.
///
/// Rejects windows whose period exceeds `limit`. Window widths stay below 256
/// at desk scale, so 8-bit per-residue counters suffice.
pub fn period_counts(window: &Window, limit: u64) -> Result<PeriodCounts> {
    let l = lcm_range(window.n() + 1, window.m() - 1)?;
    let value = l.value();
    if value > nat(limit) {
        return Err(Error::PeriodTooLarge {
            period: value,
            limit,
        });
    }
    let period = value
        .to_u64()
        .expect("period fits u64 once under the limit");
    let divisors: Vec<u64> = window.divisors().collect();
    let counts = count_blocks(&divisors, period);
    Ok(PeriodCounts {
        window: *window,
        period,
        counts,
    })
}

/// Empirical tallies over [1, N]. When the period divides N this equals
/// (N / L) times the period counts.
pub fn empirical_counts(window: &Window, n_upper: u64) -> Result<BTreeMap<u64, u64>> {
    if n_upper == 0 {
        return Err(Error::InvalidArgument("empirical_counts needs N >= 1"));
    }
    let divisors: Vec<u64> = window.divisors().collect();
    Ok(count_blocks(&divisors, n_upper))
}

/// One-period count for the k-th-prime event: x such that p_i | x and exactly
/// k-1 of p_0..p_{i-1} divide x. The period is the primorial p_0 * ... * p_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KthPeriodCount {
    pub period: u64,
    pub count: u64,
}

impl KthPeriodCount {
    pub fn density(&self) -> Ratio {
        ratio_from_naturals(nat(self.count), nat(self.period))
    }
}

/// Brute-force count over one primorial period of the integers whose k-th
/// smallest prime factor among {p_0, ..., p_i} is p_i.
pub fn kth_prime_period_counts(k: u64, i: usize, limit: u64) -> Result<KthPeriodCount> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "kth_prime_period_counts needs k >= 1",
        ));
    }
    let primes = first_primes(i + 1);
    let mut period: u64 = 1;
    for &p in &primes {
        period = period
            .checked_mul(p)
            .filter(|&v| v <= limit)
            .ok_or_else(|| Error::PeriodTooLarge {
                period: primes.iter().map(|&p| nat(p)).product(),
                limit,
            })?;
    }
    // x = p_i * y; p_j | x iff p_j | y for j < i.
    let p_i = primes[i];
    let small = &primes[..i];
    let want = k - 1;
    let mut count = 0u64;
    for y in 1..=period / p_i {
        let dividing = small.iter().filter(|&&p| y % p == 0).count() as u64;
        if dividing == want {
            count += 1;
        }
    }
    Ok(KthPeriodCount { period, count })
}

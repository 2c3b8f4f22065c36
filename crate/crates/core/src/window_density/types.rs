//! Window-level domain types and the profile primitives.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{is_prime, primes_up_to, ratio, Ratio};

/// The open divisor interval (n, m) = {n+1, ..., m-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Window {
    n: u64,
    m: u64,
}

impl Window {
    /// Requires n >= 1 and m >= n+2 so the interval is non-empty.
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n == 0 || m < n + 2 {
            return Err(Error::InvalidWindow { n, m });
        }
        Ok(Window { n, m })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of candidate divisors, m - n - 1.
    pub fn width(&self) -> u64 {
        self.m - self.n - 1
    }

    /// The candidate divisors n+1, ..., m-1 in order.
    pub fn divisors(&self) -> impl Iterator<Item = u64> {
        self.n + 1..self.m
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.n, self.m)
    }
}

/// A prime relevant to a window together with its valuation cap: the largest
/// e such that q^e divides some window element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeCap {
    pub prime: u64,
    pub cap: u32,
}

/// Exponent vector aligned with a `PrimeCap` list. Entry e < cap means
/// v_q(x) = e exactly; entry e = cap means v_q(x) >= cap.
pub type ValuationProfile = Vec<u32>;

/// Does [lo, hi] contain a multiple of d?
fn range_has_multiple(d: u64, lo: u64, hi: u64) -> bool {
    hi / d > (lo - 1) / d
}

/// Exactly the primes dividing some window element, ascending, each with its
/// max-valuation cap.
pub fn relevant_primes(w: &Window) -> Vec<PrimeCap> {
    let (lo, hi) = (w.n + 1, w.m - 1);
    let mut out = Vec::new();
    for q in primes_up_to(hi) {
        if !range_has_multiple(q, lo, hi) {
            continue;
        }
        let mut cap = 1u32;
        let mut power = q;
        while let Some(next) = power.checked_mul(q) {
            if next <= hi && range_has_multiple(next, lo, hi) {
                cap += 1;
                power = next;
            } else {
                break;
            }
        }
        out.push(PrimeCap { prime: q, cap });
    }
    out
}

/// The window's singleton primes: primes q in (n, m) with 2q >= m, so q
/// divides no other window element. Their divisibility events are independent
/// Bernoulli(1/q) contributions to the divisor count.
pub fn singleton_primes(w: &Window) -> Vec<u64> {
    w.divisors()
        .filter(|&q| 2 * q >= w.m && is_prime(q))
        .collect()
}

/// Density of the residue class with the prescribed capped valuations:
/// product over primes of (1/q^e)(1 - 1/q) for e < cap and 1/q^cap at the cap.
/// Weights over all profiles sum to 1.
pub fn profile_weight(profile: &[u32], caps: &[PrimeCap]) -> Result<Ratio> {
    if profile.len() != caps.len() {
        return Err(Error::InvalidArgument(
            "profile length must match the cap list",
        ));
    }
    let mut weight = Ratio::one();
    for (&e, pc) in profile.iter().zip(caps) {
        if e > pc.cap {
            return Err(Error::InvalidArgument("profile exponent above its cap"));
        }
        let q = pc.prime as i64;
        if e < pc.cap {
            weight *= ratio(q - 1, q.pow(e + 1));
        } else {
            weight *= ratio(1, q.pow(pc.cap));
        }
    }
    Ok(weight)
}

/// Number of window divisors dividing every integer in the residue class
/// encoded by `profile` (aligned with `relevant_primes(w)`).
pub fn divisor_count(profile: &[u32], w: &Window) -> Result<u64> {
    let caps = relevant_primes(w);
    if profile.len() != caps.len() {
        return Err(Error::InvalidArgument(
            "profile length must match relevant_primes",
        ));
    }
    let mut count = 0;
    for d in w.divisors() {
        let admitted = caps.iter().zip(profile).all(|(pc, &e)| {
            let mut v = 0u32;
            let mut d = d;
            while d % pc.prime == 0 {
                d /= pc.prime;
                v += 1;
            }
            v <= e
        });
        if admitted {
            count += 1;
        }
    }
    Ok(count)
}

/// The joint distribution r -> delta_r(n, m). Values are exact, non-negative,
/// sum to 1, and zero entries are omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityDistribution {
    window: Window,
    probs: BTreeMap<u64, Ratio>,
}

impl DensityDistribution {
    pub(crate) fn from_parts(window: Window, mut probs: BTreeMap<u64, Ratio>) -> Self {
        probs.retain(|_, v| !v.is_zero());
        debug_assert!(probs.values().all(|v| *v > Ratio::zero()));
        debug_assert_eq!(probs.values().sum::<Ratio>(), Ratio::one());
        DensityDistribution { window, probs }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Support map r -> delta_r, zero entries omitted.
    pub fn probs(&self) -> &BTreeMap<u64, Ratio> {
        &self.probs
    }

    /// delta_r, with absent keys reading as 0.
    pub fn delta(&self, r: u64) -> Ratio {
        self.probs.get(&r).cloned().unwrap_or_else(Ratio::zero)
    }

    /// Largest r with positive density.
    pub fn max_count(&self) -> u64 {
        self.probs.keys().next_back().copied().unwrap_or(0)
    }
}

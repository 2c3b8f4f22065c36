//! Incremental computation of (delta_r(n, m))_m.
//!
//! Extending a window past a prime p only asks whether p divides x, an event
//! independent of everything already in the window, so the whole distribution
//! updates in one convolution step. Composite extensions change caps and
//! singleton status, so those recompute from scratch; primes advance in
//! constant work per step.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_math::{is_prime, ratio, Ratio};
use crate::sequence_analysis::{local_extrema, ExtremaReport};

use super::engine::density_distribution;
use super::types::{DensityDistribution, Window};

/// A scanned (m, delta_r) prefix together with its extrema report.
pub type ScanOutcome = (Vec<(u64, Ratio)>, ExtremaReport);

/// Push the window of `dist` from (n, p) to (n, p+1) for prime p = m: the new
/// divisor is p itself, so delta'_r = ((p-1)/p) delta_r + (1/p) delta_{r-1}.
pub fn extend_with_prime(dist: &DensityDistribution, p: u64) -> Result<DensityDistribution> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p != dist.window().m() {
        return Err(Error::ExtensionMismatch {
            p,
            m: dist.window().m(),
        });
    }
    let stay = ratio(p as i64 - 1, p as i64);
    let hit = ratio(1, p as i64);
    let mut probs: BTreeMap<u64, Ratio> = BTreeMap::new();
    for (&r, v) in dist.probs() {
        *probs.entry(r).or_insert_with(|| ratio(0, 1)) += v * &stay;
        *probs.entry(r + 1).or_insert_with(|| ratio(0, 1)) += v * &hit;
    }
    let window = Window::new(dist.window().n(), p + 1)?;
    Ok(DensityDistribution::from_parts(window, probs))
}

/// (m, delta_r(n, m)) for m = n+2 ..= m_max, stepping with `extend_with_prime`
/// at primes and recomputing otherwise. Guard failures name the offending m.
pub fn delta_sequence(n: u64, r: u64, m_max: u64, guard: u64) -> Result<Vec<(u64, Ratio)>> {
    let at = |err, m| match err {
        Error::GuardExceeded { states, guard, .. } => Error::GuardExceeded {
            states,
            guard,
            at_m: Some(m),
        },
        other => other,
    };
    let first = Window::new(n, n + 2)?;
    if m_max < n + 2 {
        return Err(Error::InvalidArgument("delta_sequence needs m_max >= n+2"));
    }
    let mut dist = density_distribution(&first, guard).map_err(|e| at(e, n + 2))?;
    let mut out = vec![(n + 2, dist.delta(r))];
    for m in n + 2..m_max {
        dist = if is_prime(m) {
            extend_with_prime(&dist, m)?
        } else {
            let next = Window::new(n, m + 1)?;
            density_distribution(&next, guard).map_err(|e| at(e, m + 1))?
        };
        out.push((m + 1, dist.delta(r)));
    }
    Ok(out)
}

/// Scan (delta_1(n, m))_m outward until the prefix shows at least two
/// local-maximum runs, growing m geometrically up to `m_cap`.
///
/// Returns the scanned sequence and its extrema report on success, None when
/// the cap is reached first. Guard overflow before finding a second maximum
/// also ends the scan with None rather than an error, since the question is
/// simply not decidable within the configured resources.
pub fn non_unimodality_scan(n: u64, m_cap: u64, guard: u64) -> Result<Option<ScanOutcome>> {
    let mut m_max = (n + 16).min(m_cap);
    loop {
        let seq = match delta_sequence(n, 1, m_max, guard) {
            Ok(seq) => seq,
            Err(Error::GuardExceeded { .. }) => return Ok(None),
            Err(other) => return Err(other),
        };
        let values: Vec<Ratio> = seq.iter().map(|(_, v)| v.clone()).collect();
        let report = local_extrema(&values)?;
        if report.maxima.len() >= 2 {
            return Ok(Some((seq, report)));
        }
        if m_max == m_cap {
            return Ok(None);
        }
        m_max = (m_max * 2).min(m_cap);
    }
}

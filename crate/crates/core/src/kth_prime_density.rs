//! Densities around the k-th smallest prime factor.
//!
//! delta_r(i) is the density of integers with exactly r prime divisors among
//! the first i+1 primes p_0 = 2, p_1 = 3, ... It obeys
//!
//!   delta_0(i) = ((p_i - 1) / p_i) delta_0(i-1)
//!   delta_r(i) = ((p_i - 1) / p_i) delta_r(i-1) + (1 / p_i) delta_{r-1}(i-1)
//!
//! and the density of integers whose k-th prime is p_i is
//! d_k(p_i) = delta_{k-1}(i-1) / p_i.
//!
//! The table is stored as integer counts A_r(i) over the primorial
//! L_i = p_0 * ... * p_i (A_r(i) = (p_i - 1) A_r(i-1) + A_{r-1}(i-1)), so
//! building it and comparing entries never reduces a fraction; ratios are
//! materialized only for reported values. Column i = -1 encodes the empty
//! prime set, which makes d_1(2) = delta_0(-1)/2 = 1/2 come out of the same
//! formula as every other entry.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{first_primes, nat, ratio_from_naturals, Natural, Ratio};
use crate::sequence_analysis::{local_extrema, ExtremaReport};

/// Exact table of delta_r(i) for 0 <= r <= r_max, -1 <= i <= i_max.
#[derive(Clone, Debug)]
pub struct DeltaTable {
    i_max: usize,
    r_max: u64,
    primes: Vec<u64>,
    /// counts[r][i + 1] = A_r(i); delta_r(i) = A_r(i) / primorial(i).
    counts: Vec<Vec<Natural>>,
}

/// Fill the table from the base column by the integer recursion.
pub fn delta_table(i_max: usize, r_max: u64) -> DeltaTable {
    let primes = first_primes(i_max + 1);
    let rows = r_max as usize + 1;
    let mut counts = vec![vec![Natural::zero(); i_max + 2]; rows];
    counts[0][0] = Natural::one();
    for (idx, &p) in primes.iter().enumerate() {
        let col = idx + 1;
        for r in 0..rows {
            let carried = &counts[r][col - 1] * nat(p - 1);
            let lifted = if r > 0 {
                counts[r - 1][col - 1].clone()
            } else {
                Natural::zero()
            };
            counts[r][col] = carried + lifted;
        }
    }
    DeltaTable {
        i_max,
        r_max,
        primes,
        counts,
    }
}

impl DeltaTable {
    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn r_max(&self) -> u64 {
        self.r_max
    }

    /// p_i.
    pub fn prime(&self, i: usize) -> u64 {
        self.primes[i]
    }

    /// Integer count A_r(i) for i from -1.
    pub fn count(&self, r: u64, i: isize) -> &Natural {
        assert!(r <= self.r_max && i >= -1 && i <= self.i_max as isize);
        &self.counts[r as usize][(i + 1) as usize]
    }

    /// L_i = p_0 * ... * p_i (1 for i = -1).
    pub fn primorial(&self, i: isize) -> Natural {
        self.primes[..(i + 1) as usize]
            .iter()
            .map(|&p| nat(p))
            .product()
    }

    /// delta_r(i) in lowest terms.
    pub fn value(&self, r: u64, i: isize) -> Ratio {
        let count = self.count(r, i);
        if count.is_zero() {
            return Ratio::zero();
        }
        ratio_from_naturals(count.clone(), self.primorial(i))
    }

    /// Exact integer check that column i is a probability distribution.
    pub fn column_sums_to_one(&self, i: isize) -> bool {
        let total: Natural = (0..=self.r_max).map(|r| self.count(r, i)).sum();
        total == self.primorial(i)
    }

    /// delta_r(i) vs delta_r(j) without reduction: for i < j this is
    /// A_r(i) * (p_{i+1} ... p_j) vs A_r(j).
    pub fn cmp_delta(&self, r: u64, i: isize, j: isize) -> Ordering {
        match i.cmp(&j) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Greater => self.cmp_delta(r, j, i).reverse(),
            Ordering::Less => {
                let mut lhs = self.count(r, i).clone();
                for t in (i + 1)..=j {
                    lhs *= nat(self.primes[t as usize]);
                }
                lhs.cmp(self.count(r, j))
            }
        }
    }

    /// d_k(p_i) vs d_k(p_j) without reduction: for i < j,
    /// A_{k-1}(i-1) * p_j * (p_i ... p_{j-1}) vs A_{k-1}(j-1) * p_i.
    pub fn cmp_dk(&self, k: u64, i: usize, j: usize) -> Ordering {
        match i.cmp(&j) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Greater => self.cmp_dk(k, j, i).reverse(),
            Ordering::Less => {
                let r = k - 1;
                let mut lhs = self.count(r, i as isize - 1) * nat(self.primes[j]);
                for t in i..j {
                    lhs *= nat(self.primes[t]);
                }
                let rhs = self.count(r, j as isize - 1) * nat(self.primes[i]);
                lhs.cmp(&rhs)
            }
        }
    }

    /// d_k(p_i) = delta_{k-1}(i-1) / p_i in lowest terms.
    pub fn dk_value(&self, k: u64, i: usize) -> Ratio {
        let count = self.count(k - 1, i as isize - 1);
        if count.is_zero() {
            return Ratio::zero();
        }
        ratio_from_naturals(
            count.clone(),
            self.primorial(i as isize - 1) * nat(self.primes[i]),
        )
    }
}

/// One entry of a d_k sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct DkEntry {
    /// Prime index i (p_0 = 2).
    pub index: usize,
    pub prime: u64,
    pub value: Ratio,
}

/// d_k over the primes p_{k-1} ..= p_{i_max}; entries before p_{k-1} are zero
/// and omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct KthPrimeSequence {
    pub k: u64,
    pub entries: Vec<DkEntry>,
}

/// Exact d_k values with reduced ratios. Cost grows with i_max through the
/// per-entry reductions; the unimodality machinery below avoids that.
pub fn d_k_sequence(k: u64, i_max: usize) -> Result<KthPrimeSequence> {
    if k == 0 {
        return Err(Error::InvalidArgument("d_k needs k >= 1"));
    }
    let table = delta_table(i_max, k - 1);
    let mut entries = Vec::new();
    for i in (k as usize - 1)..=i_max {
        entries.push(DkEntry {
            index: i,
            prime: table.prime(i),
            value: table.dk_value(k, i),
        });
    }
    Ok(KthPrimeSequence { k, entries })
}

/// Comparison proxy for one d_k entry; `Ord` cross-multiplies table counts so
/// extrema analysis over thousands of entries never reduces a fraction.
#[derive(Clone)]
struct DkKey {
    table: Arc<DeltaTable>,
    k: u64,
    i: usize,
}

impl PartialEq for DkKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for DkKey {}

impl PartialOrd for DkKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DkKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.table.cmp_dk(self.k, self.i, other.i)
    }
}

/// Extrema report for (d_k(p_i))_{k-1 <= i <= i_max}, indices relative to the
/// stripped sequence (position 0 is i = k-1).
pub fn unimodality_verdict(k: u64, i_max: usize) -> Result<ExtremaReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("d_k needs k >= 1"));
    }
    if i_max < k as usize - 1 {
        return Err(Error::InvalidArgument(
            "unimodality_verdict needs i_max >= k-1",
        ));
    }
    let table = Arc::new(delta_table(i_max, k - 1));
    let keys: Vec<DkKey> = (k as usize - 1..=i_max)
        .map(|i| DkKey {
            table: Arc::clone(&table),
            k,
            i,
        })
        .collect();
    local_extrema(&keys)
}

/// Smallest index at which the descent of delta_r provably begins: the
/// landing index of the first non-increasing step, kept only when the
/// sequence then reaches a strict drop without rising again. None when no
/// strict drop occurs by i_max.
///
/// delta_0 is unconditionally decreasing (index 0). For r >= 1 the
/// certificate chains: with delta_{r-1} non-increasing from i_0 and the
/// strict drop delta_r(j) < delta_r(j-1) at some j >= i_0, the recursion
/// keeps delta_r non-increasing for all i >= j; the weak steps between the
/// reported index and the drop are verified by exact comparison, so the tail
/// from the reported index is covered for every i, not just up to i_max.
pub fn monotone_tail_certificate(r: u64, i_max: usize) -> Result<Option<usize>> {
    let table = delta_table(i_max, r);
    certificate_in(&table, r, i_max)
}

fn certificate_in(table: &DeltaTable, r: u64, i_max: usize) -> Result<Option<usize>> {
    if r == 0 {
        return Ok(Some(0));
    }
    let i0 = certificate_in(table, r - 1, i_max)?.ok_or(Error::CertificateMissing { r: r - 1 })?;
    let mut candidate = None;
    for j in i0.max(1)..=i_max {
        match table.cmp_delta(r, j as isize, j as isize - 1) {
            Ordering::Less => return Ok(Some(candidate.unwrap_or(j))),
            Ordering::Equal => {
                candidate.get_or_insert(j);
            }
            Ordering::Greater => candidate = None,
        }
    }
    Ok(None)
}

/// Indices i where delta_{k-1}(i-1) < delta_{k-1}(i) holds but the claimed
/// consequence d_k(p_i) < d_k(p_{i+1}) fails. The implication is not valid
/// in general (dividing by a larger prime can reverse it), so every instance
/// in the computed range is audited and reported.
pub fn implication_audit(k: u64, i_max: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::InvalidArgument("d_k needs k >= 1"));
    }
    let table = delta_table(i_max + 1, k - 1);
    let mut failures = Vec::new();
    for i in k as usize - 1..=i_max {
        let premise = table.cmp_delta(k - 1, i as isize - 1, i as isize) == Ordering::Less;
        if premise && table.cmp_dk(k, i, i + 1) != Ordering::Less {
            failures.push(i);
        }
    }
    Ok(failures)
}

//! Plateau-aware local-extrema detection over exactly ordered sequences.
//!
//! All comparisons go through `Ord`, so callers can analyze exact rationals
//! directly or supply lighter comparison wrappers (the k-th-prime module
//! compares huge table entries by cross-multiplication without materializing
//! reduced fractions).
//!
//! Semantics, fixed here because ties make "local maximum" ambiguous:
//! extrema are maximal constant runs; a run is a local-maximum run iff every
//! existing neighbor value is strictly smaller (boundary runs qualify with one
//! neighbor), dually for minima; a sequence is unimodal iff it is
//! non-decreasing then non-increasing. A fully constant sequence is one
//! maximum run (and one minimum run) and counts as unimodal.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Inclusive index run [start, end] of equal values.
pub type Run = (usize, usize);

/// Local-extrema structure of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremaReport {
    /// Local-maximum runs, disjoint and sorted.
    pub maxima: Vec<Run>,
    /// Local-minimum runs, disjoint and sorted.
    pub minima: Vec<Run>,
    /// Non-decreasing then non-increasing.
    pub unimodal: bool,
    /// Lexicographically smallest (i, j, k) with i < j < k and
    /// `seq[j] < min(seq[i], seq[k])`; present iff `unimodal` is false.
    pub witness: Option<(usize, usize, usize)>,
}

/// Decompose into maximal constant runs annotated with a representative index.
fn runs<T: Ord>(seq: &[T]) -> Vec<Run> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..seq.len() {
        if seq[i] != seq[start] {
            out.push((start, i - 1));
            start = i;
        }
    }
    out.push((start, seq.len() - 1));
    out
}

fn find_witness<T: Ord>(seq: &[T]) -> Option<(usize, usize, usize)> {
    let n = seq.len();
    // has_larger_after[j]: some k > j has seq[k] > seq[j].
    let mut has_larger_after = vec![false; n];
    let mut max_after: Option<usize> = None;
    for j in (0..n).rev() {
        if let Some(mi) = max_after {
            has_larger_after[j] = seq[mi] > seq[j];
        }
        if max_after.is_none_or(|mi| seq[j] > seq[mi]) {
            max_after = Some(j);
        }
    }
    // dip_min[i]: index of the smallest dip value at or after i, where a dip
    // is a j with a strictly larger value later.
    let mut dip_min: Vec<Option<usize>> = vec![None; n + 1];
    for j in (0..n).rev() {
        dip_min[j] = dip_min[j + 1];
        if has_larger_after[j] && dip_min[j].is_none_or(|d| seq[j] < seq[d]) {
            dip_min[j] = Some(j);
        }
    }
    // Smallest i that sees a strictly smaller dip after it, then the smallest
    // such j, then the smallest rebound k.
    let i = (0..n).find(|&i| dip_min[i + 1].is_some_and(|d| seq[d] < seq[i]))?;
    let j = (i + 1..n).find(|&j| has_larger_after[j] && seq[j] < seq[i])?;
    let k = (j + 1..n).find(|&k| seq[k] > seq[j])?;
    Some((i, j, k))
}

/// Classify the local-extrema runs of `seq` and decide unimodality.
pub fn local_extrema<T: Ord>(seq: &[T]) -> Result<ExtremaReport> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let runs = runs(seq);
    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    for (idx, &(start, end)) in runs.iter().enumerate() {
        let left = idx.checked_sub(1).map(|l| seq[runs[l].0].cmp(&seq[start]));
        let right = runs.get(idx + 1).map(|r| seq[r.0].cmp(&seq[start]));
        let is_max = left.unwrap_or(Ordering::Less) == Ordering::Less
            && right.unwrap_or(Ordering::Less) == Ordering::Less;
        let is_min = left.unwrap_or(Ordering::Greater) == Ordering::Greater
            && right.unwrap_or(Ordering::Greater) == Ordering::Greater;
        if is_max {
            maxima.push((start, end));
        }
        if is_min {
            minima.push((start, end));
        }
    }
    // Non-decreasing then non-increasing: no ascent after a descent.
    let mut descended = false;
    let mut unimodal = true;
    for pair in runs.windows(2) {
        match seq[pair[1].0].cmp(&seq[pair[0].0]) {
            Ordering::Less => descended = true,
            Ordering::Greater if descended => {
                unimodal = false;
                break;
            }
            _ => {}
        }
    }
    let witness = if unimodal {
        None
    } else {
        let w = find_witness(seq);
        debug_assert!(w.is_some(), "non-unimodal sequences must yield a witness");
        w
    };
    Ok(ExtremaReport {
        maxima,
        minima,
        unimodal,
        witness,
    })
}

/// Number of local-maximum runs.
pub fn count_local_maxima<T: Ord>(seq: &[T]) -> Result<u64> {
    Ok(local_extrema(seq)?.maxima.len() as u64)
}

/// Smallest index t such that the sequence is non-increasing on [t, end].
/// Returns 0 for empty and singleton sequences.
pub fn monotone_from<T: Ord>(seq: &[T]) -> usize {
    (1..seq.len())
        .rev()
        .find(|&i| seq[i - 1] < seq[i])
        .map_or(0, |i| i)
}

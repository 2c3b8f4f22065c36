//! Subset inclusion-exclusion: the narrow-window oracle.
//!
//! delta_r(n, m) = sum_{j >= r} (-1)^{j-r} C(j, r) S_j with
//! S_j = sum over j-element divisor subsets T of 1/lcm(T). Exponential in the
//! window width, so it is capped and used only to cross-check the profile
//! engine.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{binomial, nat, ratio_from_naturals, Ratio};

use super::types::Window;

/// Widest window the subset oracle accepts.
pub const IE_MAX_WIDTH: u64 = 20;

fn subset_sums(divisors: &[u64], idx: usize, lcm: &BigUint, size: usize, sums: &mut [Ratio]) {
    if idx == divisors.len() {
        return;
    }
    subset_sums(divisors, idx + 1, lcm, size, sums);
    let d = nat(divisors[idx]);
    let extended = lcm / lcm.gcd(&d) * &d;
    sums[size + 1] += ratio_from_naturals(BigUint::one(), extended.clone());
    subset_sums(divisors, idx + 1, &extended, size + 1, sums);
}

/// Exact delta_r(n, m) by inclusion-exclusion over divisor subsets.
pub fn inclusion_exclusion_delta(w: &Window, r: u64) -> Result<Ratio> {
    let width = w.width();
    if width > IE_MAX_WIDTH {
        return Err(Error::WindowTooWide {
            width,
            max: IE_MAX_WIDTH,
        });
    }
    let divisors: Vec<u64> = w.divisors().collect();
    let mut sums = vec![Ratio::zero(); width as usize + 1];
    sums[0] = Ratio::one();
    subset_sums(&divisors, 0, &BigUint::one(), 0, &mut sums);

    let mut delta = Ratio::zero();
    for j in r..=width {
        let coeff = BigInt::from(binomial(j, r).expect("r <= j"));
        let term = Ratio::from_integer(coeff) * &sums[j as usize];
        if (j - r).is_multiple_of(2) {
            delta += term;
        } else {
            delta -= term;
        }
    }
    Ok(delta)
}

//! Desk-scale verification of the analytic inequality chain.
//!
//! The exact side of every comparison is a rational; the bound side is a
//! double computed from ln and the Euler-Mascheroni constant. Comparisons
//! convert the float bound to its exact dyadic rational and pad it outward by
//! a few ulps, so rounding in the bound computation can never flip a verdict.

use num_bigint::{BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{
    harmonic, is_prime, lcm_range, nat, primes_up_to, ratio_from_naturals, ratio_to_f64, totient,
    Ratio,
};
use crate::window_density::{density_distribution, extend_with_prime, Window};

/// Euler-Mascheroni constant, fixed to double precision.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860;

/// Relative pad applied to float bounds before an exact comparison; a few
/// hundred ulps, vastly below every margin this module certifies.
const BOUND_SLOP: f64 = 1e-12;

/// Which side the exact value is asserted to be on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundDirection {
    /// satisfied means exact > bound, certified against rounding.
    ExactAbove,
    /// satisfied means exact < bound, certified against rounding.
    ExactBelow,
}

/// One exact-vs-float comparison with its direction recorded.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub m: u64,
    pub exact_value: Ratio,
    pub bound_value: f64,
    pub direction: BoundDirection,
    pub satisfied: bool,
}

/// Exact rational equal to the float `x` (every finite double is dyadic).
fn dyadic(x: f64) -> Ratio {
    Ratio::from_float(x).expect("finite bound")
}

/// exact > bound, robust to rounding in `bound`: compares against the bound
/// padded up by `BOUND_SLOP` relatively.
pub fn exact_exceeds(exact: &Ratio, bound: f64) -> bool {
    *exact > dyadic(bound * (1.0 + BOUND_SLOP) + f64::MIN_POSITIVE)
}

/// exact < bound with the same outward padding.
pub fn exact_below(exact: &Ratio, bound: f64) -> bool {
    *exact < dyadic(bound * (1.0 - BOUND_SLOP) - f64::MIN_POSITIVE)
}

/// num/den > bound without reducing the fraction: cross-multiplies against
/// the padded dyadic bound. One small multiplication per call regardless of
/// how large the unreduced parts have grown.
fn unreduced_exceeds(num: &BigUint, den: &BigUint, bound: f64) -> bool {
    let padded = dyadic(bound * (1.0 + BOUND_SLOP) + f64::MIN_POSITIVE);
    if padded.numer().sign() == Sign::Minus {
        return true;
    }
    num * padded.denom().magnitude() > den * padded.numer().magnitude()
}

/// The Mertens product at m with its asymptote comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct MertensReport {
    pub m: u64,
    /// Exact product over primes q <= m of (q-1)/q, i.e. phi(lcm(1..m))/lcm(1..m).
    pub product: Ratio,
    /// product divided by e^{-gamma}/ln m.
    pub asymptote_ratio: f64,
    /// product > 1/(2 ln m), directed.
    pub lower_bound: BoundReport,
}

/// Exact prod_{q <= m} (q-1)/q compared against e^{-gamma}/ln m and the
/// corollary bound 1/(2 ln m).
pub fn mertens_check(m: u64) -> Result<MertensReport> {
    if m < 3 {
        return Err(Error::InvalidArgument("mertens_check needs m >= 3"));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for q in primes_up_to(m) {
        num *= nat(q - 1);
        den *= nat(q);
    }
    let product = ratio_from_naturals(num, den);
    let ln_m = (m as f64).ln();
    let asymptote_ratio = ratio_to_f64(&product) * ln_m * EULER_GAMMA.exp();
    let bound = 1.0 / (2.0 * ln_m);
    let lower_bound = BoundReport {
        m,
        exact_value: product.clone(),
        bound_value: bound,
        direction: BoundDirection::ExactAbove,
        satisfied: exact_exceeds(&product, bound),
    };
    Ok(MertensReport {
        m,
        product,
        asymptote_ratio,
        lower_bound,
    })
}

/// All m in [lo, hi] where the corollary bound prod_{q <= m} (q-1)/q >
/// 1/(2 ln m) FAILS. Maintains the unreduced product incrementally, so the
/// sweep costs one cross-multiplied comparison per m rather than one gcd per m.
pub fn mertens_bound_violations(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo < 3 || lo > hi {
        return Err(Error::InvalidArgument("mertens sweep needs 3 <= lo <= hi"));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for q in primes_up_to(lo) {
        num *= nat(q - 1);
        den *= nat(q);
    }
    let mut violations = Vec::new();
    for m in lo..=hi {
        if m > lo && is_prime(m) {
            num *= nat(m - 1);
            den *= nat(m);
        }
        let bound = 1.0 / (2.0 * (m as f64).ln());
        if !unreduced_exceeds(&num, &den, bound) {
            violations.push(m);
        }
    }
    Ok(violations)
}

/// The proof-chain evaluation at one point (n, m):
/// delta_0 >= sum phi(L/i)/L >= H_n phi(L)/L > ln n / (2 ln m),
/// with the first step an identity in the m > n^2 regime.
#[derive(Clone, Debug, PartialEq)]
pub struct Delta0ChainReport {
    pub n: u64,
    pub m: u64,
    /// Exact delta_0(n, m) from the window engine.
    pub delta0: Ratio,
    /// (sum_{i=1}^n phi(L/i)) / L for L the window lcm.
    pub phi_sum_over_l: Ratio,
    /// H_n phi(L)/L.
    pub harmonic_phi_over_l: Ratio,
    /// ln n / (2 ln m).
    pub float_bound: f64,
    /// delta_0 == phi_sum_over_l (the gcd-class identity).
    pub identity_holds: bool,
    /// The full chain of inequalities, float end padded outward.
    pub chain_holds: bool,
}

/// Evaluate the chain at (n, m). Requires n >= 2 and m > n^2, the regime in
/// which every i <= n divides the window lcm and the first link is an
/// identity.
pub fn delta0_lower_bound_check(n: u64, m: u64, guard: u64) -> Result<Delta0ChainReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "delta0_lower_bound_check needs n >= 2",
        ));
    }
    if m <= n * n {
        return Err(Error::InvalidArgument(
            "delta0_lower_bound_check needs m > n^2",
        ));
    }
    let window = Window::new(n, m)?;
    let delta0 = density_distribution(&window, guard)?.delta(0);

    let l = lcm_range(n + 1, m - 1)?;
    let l_value = l.value();
    let mut phi_sum = BigUint::zero();
    for i in 1..=n {
        let quotient = l.divide_exact(i)?.ok_or(Error::InvalidArgument(
            "window lcm must be divisible by every i <= n",
        ))?;
        phi_sum += totient(&quotient);
    }
    let phi_sum_over_l = ratio_from_naturals(phi_sum, l_value.clone());
    let harmonic_phi_over_l = harmonic(n)? * ratio_from_naturals(totient(&l), l_value);

    let float_bound = (n as f64).ln() / (2.0 * (m as f64).ln());
    let identity_holds = delta0 == phi_sum_over_l;
    let chain_holds = delta0 >= phi_sum_over_l
        && phi_sum_over_l >= harmonic_phi_over_l
        && exact_exceeds(&harmonic_phi_over_l, float_bound);
    Ok(Delta0ChainReport {
        n,
        m,
        delta0,
        phi_sum_over_l,
        harmonic_phi_over_l,
        float_bound,
        identity_holds,
        chain_holds,
    })
}

/// Smallest m <= m_max with delta_0(n, m) > delta_1(n, m), scanning
/// incrementally like `delta_sequence`. None when no such m exists in range.
pub fn crossover_search(n: u64, m_max: u64, guard: u64) -> Result<Option<u64>> {
    if m_max < n + 2 {
        return Err(Error::InvalidArgument(
            "crossover_search needs m_max >= n+2",
        ));
    }
    let mut dist = density_distribution(&Window::new(n, n + 2)?, guard)?;
    loop {
        let m = dist.window().m();
        if dist.delta(0) > dist.delta(1) {
            return Ok(Some(m));
        }
        if m >= m_max {
            return Ok(None);
        }
        dist = if is_prime(m) {
            extend_with_prime(&dist, m)?
        } else {
            density_distribution(&Window::new(n, m + 1)?, guard)?
        };
    }
}

//! Arbitrary-precision arithmetic and small number-theoretic utilities.
//!
//! Everything downstream computes with exact values: [`Natural`] for counts
//! and moduli that grow to thousands of digits (lcm(1..m) for m up to 1e5),
//! [`Ratio`] for densities. No floating point enters any density computation;
//! floats appear only in `analytic_bounds` comparisons, always on the bound
//! side of a directed exact-vs-float comparison.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Exact rational, kept in lowest terms with a positive denominator by
/// construction. Structural equality coincides with numeric equality.
pub type Ratio = num_rational::BigRational;

/// Shorthand for a small natural.
pub fn nat(x: u64) -> Natural {
    BigUint::from(x)
}

/// Shorthand for a small exact rational.
pub fn ratio(num: i64, den: i64) -> Ratio {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational from two naturals. Panics if `den` is zero.
pub fn ratio_from_naturals(num: Natural, den: Natural) -> Ratio {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// Format as `numerator/denominator`, even when the denominator is 1.
pub fn format_ratio(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// f64 approximation of an exact rational whose parts may far exceed f64
/// range. Uses the top 64 bits of numerator and denominator plus the bit-length
/// difference, so it stays finite and accurate to ~1e-15 relative.
pub fn ratio_to_f64(r: &Ratio) -> f64 {
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    if num.is_zero() {
        return 0.0;
    }
    let nb = num.bits();
    let db = den.bits();
    let shift_n = nb.saturating_sub(64);
    let shift_d = db.saturating_sub(64);
    let top_n = (num >> shift_n).to_f64().unwrap_or(f64::MAX);
    let top_d = (den >> shift_d).to_f64().unwrap_or(f64::MAX);
    let mut v = top_n / top_d * 2f64.powi(shift_n as i32 - shift_d as i32);
    if r.numer().sign() == num_bigint::Sign::Minus {
        v = -v;
    }
    v
}

// ---------------------------------------------------------------------------
// Prime table
// ---------------------------------------------------------------------------

struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    fn sieved(limit: u64) -> Self {
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for p in 2..=n {
            if !composite[p] {
                primes.push(p as u64);
                let mut multiple = p * p;
                while multiple <= n {
                    composite[multiple] = true;
                    multiple += p;
                }
            }
        }
        PrimeTable { limit, primes }
    }
}

static PRIMES: OnceLock<RwLock<PrimeTable>> = OnceLock::new();

fn table() -> &'static RwLock<PrimeTable> {
    PRIMES.get_or_init(|| RwLock::new(PrimeTable::sieved(1 << 16)))
}

/// Grow the shared table so it covers `limit`. Reads are concurrent; growth
/// takes the write lock and re-sieves (desk scale keeps this cheap).
fn ensure_limit(limit: u64) {
    if table().read().unwrap().limit >= limit {
        return;
    }
    let mut guard = table().write().unwrap();
    if guard.limit < limit {
        let mut new_limit = guard.limit;
        while new_limit < limit {
            new_limit *= 2;
        }
        *guard = PrimeTable::sieved(new_limit);
    }
}

/// All primes `<= x`, ascending.
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    ensure_limit(x);
    let guard = table().read().unwrap();
    let end = guard.primes.partition_point(|&p| p <= x);
    guard.primes[..end].to_vec()
}

/// The i-th prime with p_0 = 2.
pub fn nth_prime(i: usize) -> u64 {
    loop {
        {
            let guard = table().read().unwrap();
            if let Some(&p) = guard.primes.get(i) {
                return p;
            }
        }
        let current = table().read().unwrap().limit;
        ensure_limit(current * 2);
    }
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    if count == 0 {
        return Vec::new();
    }
    nth_prime(count - 1);
    let guard = table().read().unwrap();
    guard.primes[..count].to_vec()
}

/// Primality by table lookup (desk-scale inputs).
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    ensure_limit(x);
    table().read().unwrap().primes.binary_search(&x).is_ok()
}

// ---------------------------------------------------------------------------
// Factored naturals
// ---------------------------------------------------------------------------

/// A natural number held as its prime factorization. The empty map is 1.
///
/// This is the working representation for lcm's of ranges, whose plain value
/// runs to thousands of digits while the factorization stays tiny.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredNatural {
    factors: BTreeMap<u64, u32>,
}

impl FactoredNatural {
    pub fn one() -> Self {
        FactoredNatural {
            factors: BTreeMap::new(),
        }
    }

    /// Build from (prime, exponent) pairs. Rejects non-primes and zero
    /// exponents.
    pub fn from_factors<I: IntoIterator<Item = (u64, u32)>>(iter: I) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for (q, e) in iter {
            if !is_prime(q) {
                return Err(Error::NotPrime(q));
            }
            if e == 0 {
                return Err(Error::InvalidArgument("exponent must be >= 1"));
            }
            if factors.insert(q, e).is_some() {
                return Err(Error::InvalidArgument("duplicate prime in factorization"));
            }
        }
        Ok(FactoredNatural { factors })
    }

    /// Factor a positive integer by trial division over the prime table.
    pub fn factor(mut x: u64) -> Result<Self> {
        if x == 0 {
            return Err(Error::InvalidArgument("cannot factor 0"));
        }
        let mut factors = BTreeMap::new();
        for p in primes_up_to((x as f64).sqrt() as u64 + 1) {
            if p * p > x {
                break;
            }
            let mut e = 0u32;
            while x.is_multiple_of(p) {
                x /= p;
                e += 1;
            }
            if e > 0 {
                factors.insert(p, e);
            }
        }
        if x > 1 {
            factors.insert(x, 1);
        }
        Ok(FactoredNatural { factors })
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn exponent(&self, q: u64) -> u32 {
        self.factors.get(&q).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Reconstruct the represented natural number.
    pub fn value(&self) -> Natural {
        let mut v = Natural::one();
        for (&q, &e) in &self.factors {
            v *= nat(q).pow(e);
        }
        v
    }

    /// Product of two factored naturals.
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&q, &e) in &other.factors {
            *factors.entry(q).or_insert(0) += e;
        }
        FactoredNatural { factors }
    }

    pub fn is_coprime_to(&self, other: &Self) -> bool {
        self.factors.keys().all(|q| !other.factors.contains_key(q))
    }

    /// Exact quotient by a small divisor, or None when d does not divide.
    pub fn divide_exact(&self, d: u64) -> Result<Option<Self>> {
        let df = FactoredNatural::factor(d)?;
        let mut factors = self.factors.clone();
        for (&q, &e) in &df.factors {
            match factors.get_mut(&q) {
                Some(have) if *have >= e => {
                    *have -= e;
                    if *have == 0 {
                        factors.remove(&q);
                    }
                }
                _ => return Ok(None),
            }
        }
        Ok(Some(FactoredNatural { factors }))
    }
}

/// Prime-exponent map of lcm(a, a+1, ..., b).
///
/// The exponent of q is the largest e such that some multiple of q^e lies in
/// [a, b]; for a <= q <= b that is floor(log_q b).
pub fn lcm_range(a: u64, b: u64) -> Result<FactoredNatural> {
    if a == 0 {
        return Err(Error::InvalidArgument("lcm_range needs a >= 1"));
    }
    if a > b {
        return Err(Error::InvalidArgument("lcm_range needs a <= b"));
    }
    let mut factors = BTreeMap::new();
    for q in primes_up_to(b) {
        let mut e = 0u32;
        let mut power = q;
        // A multiple of q^e exists in [a, b] iff floor(b/q^e) > floor((a-1)/q^e).
        while power <= b && b / power > (a - 1) / power {
            e += 1;
            match power.checked_mul(q) {
                Some(next) => power = next,
                None => break,
            }
        }
        if e > 0 {
            factors.insert(q, e);
        }
    }
    Ok(FactoredNatural { factors })
}

/// Euler's totient via the multiplicative formula over the factorization.
pub fn totient(x: &FactoredNatural) -> Natural {
    let mut t = Natural::one();
    for (&q, &e) in x.factors() {
        t *= nat(q).pow(e - 1) * nat(q - 1);
    }
    t
}

/// Exact harmonic number H_n.
pub fn harmonic(n: u64) -> Result<Ratio> {
    if n == 0 {
        return Err(Error::InvalidArgument("harmonic needs n >= 1"));
    }
    let mut h = Ratio::zero();
    for i in 1..=n {
        h += ratio(1, i as i64);
    }
    Ok(h)
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> Result<Natural> {
    if k > n {
        return Err(Error::InvalidArgument("binomial needs k <= n"));
    }
    let k = k.min(n - k);
    let mut c = Natural::one();
    for i in 0..k {
        c = c * nat(n - i) / nat(i + 1);
    }
    Ok(c)
}

/// Largest e with q^e dividing d. Requires d >= 1 and q prime.
pub fn valuation(d: u64, q: u64) -> Result<u32> {
    if d == 0 {
        return Err(Error::InvalidArgument("valuation needs d >= 1"));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut e = 0u32;
    let mut d = d;
    while d.is_multiple_of(q) {
        d /= q;
        e += 1;
    }
    Ok(e)
}

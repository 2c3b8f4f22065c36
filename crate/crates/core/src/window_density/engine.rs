//! The capped-valuation profile engine.
//!
//! For a window (n, m) let q_1 < ... < q_t be the relevant primes after
//! marginalizing singletons, with caps a_i. Each profile e in prod [0, a_i]
//! is a residue class whose density is prod_i w_i(e_i) with
//! w_i(e) = (q-1)/q^{e+1} below the cap and 1/q^cap at it, and the class
//! determines exactly which non-singleton divisors divide x. Summing class
//! densities per divisor count and folding each singleton prime in as an
//! independent Bernoulli(1/q) shift reproduces the full distribution exactly.
//!
//! All weights are integer numerators over the fixed denominator
//! D = prod q_i^{a_i}; the enumeration runs in u128 when D fits and falls
//! back to big integers otherwise. Rationals are materialized once at the end.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{nat, ratio_from_naturals, Natural, Ratio};

use super::types::{relevant_primes, DensityDistribution, PrimeCap, Window};

/// Default cap on the number of enumerated profile states.
pub const DEFAULT_GUARD: u64 = 10_000_000;

/// Integer weight accumulator. Both implementations carry exact numerators
/// over the engine's common denominator.
trait Accum: Clone {
    fn zero_weight() -> Self;
    fn unit_weight() -> Self;
    fn mul_small(&self, f: u64) -> Self;
    fn add_in(&mut self, other: &Self);
    fn into_natural(self) -> Natural;
}

impl Accum for u128 {
    fn zero_weight() -> Self {
        0
    }
    fn unit_weight() -> Self {
        1
    }
    fn mul_small(&self, f: u64) -> Self {
        self * f as u128
    }
    fn add_in(&mut self, other: &Self) {
        *self += other;
    }
    fn into_natural(self) -> Natural {
        Natural::from(self)
    }
}

impl Accum for Natural {
    fn zero_weight() -> Self {
        Natural::zero()
    }
    fn unit_weight() -> Self {
        Natural::one()
    }
    fn mul_small(&self, f: u64) -> Self {
        self * nat(f)
    }
    fn add_in(&mut self, other: &Self) {
        *self += other;
    }
    fn into_natural(self) -> Natural {
        self
    }
}

/// Pre-analyzed window: profile primes, their caps, singleton primes, and the
/// divisor constraints per profile prime.
struct Structure {
    profile: Vec<PrimeCap>,
    singletons: Vec<u64>,
    /// by_prime[i] = (divisor id, minimum exponent of q_i that d requires).
    by_prime: Vec<Vec<(usize, u32)>>,
    n_divisors: usize,
    /// Index into the divisor list of a marked divisor, when tracking one.
    marker: Option<usize>,
}

fn analyze(w: &Window, marginalize: bool, marked: Option<u64>) -> Result<Structure> {
    let caps = relevant_primes(w);
    let singleton_set: Vec<u64> = if marginalize {
        super::types::singleton_primes(w)
    } else {
        Vec::new()
    };
    let profile: Vec<PrimeCap> = caps
        .into_iter()
        .filter(|pc| !singleton_set.contains(&pc.prime))
        .collect();

    // Non-singleton divisors, with their valuation constraints per profile prime.
    let mut by_prime = vec![Vec::new(); profile.len()];
    let mut n_divisors = 0usize;
    let mut marker = None;
    for d in w.divisors() {
        if singleton_set.contains(&d) {
            continue;
        }
        let id = n_divisors;
        n_divisors += 1;
        if Some(d) == marked {
            marker = Some(id);
        }
        for (i, pc) in profile.iter().enumerate() {
            let mut v = 0u32;
            let mut rest = d;
            while rest % pc.prime == 0 {
                rest /= pc.prime;
                v += 1;
            }
            if v > 0 {
                by_prime[i].push((id, v));
            }
        }
    }
    if marked.is_some() && marker.is_none() {
        return Err(Error::InvalidArgument(
            "marked divisor must be a non-singleton window element",
        ));
    }
    // Descending by required exponent so the DFS can stop scanning early.
    for list in &mut by_prime {
        list.sort_by_key(|&(_, need)| std::cmp::Reverse(need));
    }
    Ok(Structure {
        profile,
        singletons: singleton_set,
        by_prime,
        n_divisors,
        marker,
    })
}

fn state_space(profile: &[PrimeCap]) -> u128 {
    profile
        .iter()
        .fold(1u128, |acc, pc| acc.saturating_mul(pc.cap as u128 + 1))
}

/// Per-level weight numerators: w_i(e) * q_i^{a_i} as a plain integer.
fn weight_numerators(profile: &[PrimeCap]) -> Vec<Vec<u64>> {
    profile
        .iter()
        .map(|pc| {
            let q = pc.prime;
            (0..=pc.cap)
                .map(|e| {
                    if e < pc.cap {
                        q.pow(pc.cap - e - 1) * (q - 1)
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect()
}

struct Dfs<'a, A: Accum> {
    st: &'a Structure,
    nums: &'a [Vec<u64>],
    violations: Vec<u32>,
    satisfied: u64,
    /// acc[marked as usize][count] = summed numerators.
    acc: [Vec<A>; 2],
}

impl<A: Accum> Dfs<'_, A> {
    fn run(&mut self, level: usize, weight: A) {
        if level == self.st.profile.len() {
            let marked_ok = self.st.marker.is_some_and(|id| self.violations[id] == 0);
            self.acc[marked_ok as usize][self.satisfied as usize].add_in(&weight);
            return;
        }
        for e in 0..=self.st.profile[level].cap {
            // Divisors needing more of this prime than e are violated here.
            let mut touched = 0usize;
            for &(id, need) in &self.st.by_prime[level] {
                if need > e {
                    if self.violations[id] == 0 {
                        self.satisfied -= 1;
                    }
                    self.violations[id] += 1;
                    touched += 1;
                } else {
                    // Constraint lists are sorted by need.
                    break;
                }
            }
            self.run(level + 1, weight.mul_small(self.nums[level][e as usize]));
            for &(id, _) in self.st.by_prime[level].iter().take(touched) {
                self.violations[id] -= 1;
                if self.violations[id] == 0 {
                    self.satisfied += 1;
                }
            }
        }
    }
}

struct RawDistribution {
    /// counts[marked][r] as integer numerators over `denom`.
    counts: [Vec<Natural>; 2],
    denom: Natural,
}

fn enumerate(st: &Structure, guard: u64) -> Result<RawDistribution> {
    let states = state_space(&st.profile);
    if states > guard as u128 {
        return Err(Error::GuardExceeded {
            states,
            guard,
            at_m: None,
        });
    }
    let nums = weight_numerators(&st.profile);
    let denom: Natural = st
        .profile
        .iter()
        .map(|pc| nat(pc.prime).pow(pc.cap))
        .product();
    let slots = st.n_divisors + 1;
    fn run_dfs<A: Accum>(st: &Structure, nums: &[Vec<u64>], slots: usize) -> [Vec<A>; 2] {
        let mut dfs = Dfs::<A> {
            st,
            nums,
            violations: vec![0; st.n_divisors],
            satisfied: st.n_divisors as u64,
            acc: [vec![A::zero_weight(); slots], vec![A::zero_weight(); slots]],
        };
        dfs.run(0, A::unit_weight());
        dfs.acc
    }
    let counts = if denom.bits() <= 127 {
        run_dfs::<u128>(st, &nums, slots).map(|v| v.into_iter().map(Accum::into_natural).collect())
    } else {
        run_dfs::<Natural>(st, &nums, slots)
    };
    Ok(RawDistribution { counts, denom })
}

/// Fold each singleton prime s into the count distribution as an independent
/// Bernoulli(1/s): new[r] = old[r] * (s-1) + old[r-1], denominator *= s.
fn fold_singletons(
    mut numerators: Vec<Natural>,
    mut denom: Natural,
    singletons: &[u64],
) -> (Vec<Natural>, Natural) {
    for &s in singletons {
        let mut next = vec![Natural::zero(); numerators.len() + 1];
        for (r, v) in numerators.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            next[r] += v * nat(s - 1);
            next[r + 1] += v;
        }
        numerators = next;
        denom *= nat(s);
    }
    (numerators, denom)
}

fn to_distribution(
    window: Window,
    numerators: Vec<Natural>,
    denom: &Natural,
) -> DensityDistribution {
    let mut probs = BTreeMap::new();
    for (r, v) in numerators.into_iter().enumerate() {
        if !v.is_zero() {
            probs.insert(r as u64, ratio_from_naturals(v, denom.clone()));
        }
    }
    DensityDistribution::from_parts(window, probs)
}

fn distribution_opts(w: &Window, guard: u64, marginalize: bool) -> Result<DensityDistribution> {
    let st = analyze(w, marginalize, None)?;
    let raw = enumerate(&st, guard)?;
    let mut totals = raw.counts[0].clone();
    for (t, m) in totals.iter_mut().zip(&raw.counts[1]) {
        *t += m;
    }
    let (nums, denom) = fold_singletons(totals, raw.denom, &st.singletons);
    Ok(to_distribution(*w, nums, &denom))
}

/// Exact delta_r(n, m) for every r at once, with singleton primes
/// marginalized out of the enumeration and folded back in afterwards.
///
/// Fails with `GuardExceeded` when the post-marginalization profile space
/// would exceed `guard` states.
pub fn density_distribution(w: &Window, guard: u64) -> Result<DensityDistribution> {
    distribution_opts(w, guard, true)
}

/// Same result with marginalization disabled: every relevant prime is
/// enumerated. Exists so tests can confirm marginalization neutrality.
pub fn density_distribution_unmarginalized(w: &Window, guard: u64) -> Result<DensityDistribution> {
    distribution_opts(w, guard, false)
}

/// delta_r(n, m); absent counts read as 0.
pub fn delta(w: &Window, r: u64, guard: u64) -> Result<Ratio> {
    Ok(density_distribution(w, guard)?.delta(r))
}

/// Distribution plus the density of "the only window divisor is `marked`",
/// used by the 2p drop check.
pub(crate) fn distribution_with_sole_marker(
    w: &Window,
    guard: u64,
    marked: u64,
) -> Result<(DensityDistribution, Ratio)> {
    let st = analyze(w, true, Some(marked))?;
    let raw = enumerate(&st, guard)?;
    // Sole density: count 1 with the marker satisfied and no singleton dividing.
    let mut sole_num = raw.counts[1].get(1).cloned().unwrap_or_default();
    let mut denom = raw.denom.clone();
    for &s in &st.singletons {
        sole_num *= nat(s - 1);
        denom *= nat(s);
    }
    let sole = if sole_num.is_zero() {
        Ratio::zero()
    } else {
        ratio_from_naturals(sole_num, denom)
    };

    let mut totals = raw.counts[0].clone();
    for (t, m) in totals.iter_mut().zip(&raw.counts[1]) {
        *t += m;
    }
    let (nums, full_denom) = fold_singletons(totals, raw.denom, &st.singletons);
    Ok((to_distribution(*w, nums, &full_denom), sole))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::ratio;

    fn w(n: u64, m: u64) -> Window {
        Window::new(n, m).unwrap()
    }

    #[test]
    fn distribution_3_6() {
        let d = density_distribution(&w(3, 6), DEFAULT_GUARD).unwrap();
        assert_eq!(d.delta(0), ratio(3, 5));
        assert_eq!(d.delta(1), ratio(7, 20));
        assert_eq!(d.delta(2), ratio(1, 20));
        assert_eq!(d.delta(3), ratio(0, 1));
        assert_eq!(d.probs().len(), 3);
    }

    #[test]
    fn distribution_3_7() {
        let d = density_distribution(&w(3, 7), DEFAULT_GUARD).unwrap();
        assert_eq!(d.delta(1), ratio(1, 3));
        assert_eq!(d.delta(0), ratio(8, 15));
    }

    #[test]
    fn distribution_1_3() {
        let d = density_distribution(&w(1, 3), DEFAULT_GUARD).unwrap();
        assert_eq!(d.delta(0), ratio(1, 2));
        assert_eq!(d.delta(1), ratio(1, 2));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&w(3, 8), 1, DEFAULT_GUARD).unwrap(), ratio(38, 105));
        assert_eq!(delta(&w(3, 7), 0, DEFAULT_GUARD).unwrap(), ratio(8, 15));
        assert_eq!(delta(&w(9, 11), 1, DEFAULT_GUARD).unwrap(), ratio(1, 10));
    }

    #[test]
    fn normalization_holds() {
        for n in 1..=8 {
            for m in n + 2..=n + 9 {
                let d = density_distribution(&w(n, m), DEFAULT_GUARD).unwrap();
                assert_eq!(
                    d.probs().values().sum::<Ratio>(),
                    Ratio::one(),
                    "window ({n},{m})"
                );
            }
        }
    }

    #[test]
    fn marginalization_is_neutral() {
        for n in 1..=6 {
            for m in n + 2..=n + 8 {
                let a = density_distribution(&w(n, m), DEFAULT_GUARD).unwrap();
                let b = density_distribution_unmarginalized(&w(n, m), DEFAULT_GUARD).unwrap();
                assert_eq!(a, b, "window ({n},{m})");
            }
        }
    }

    #[test]
    fn guard_trips() {
        let err = density_distribution(&w(1, 40), 4).unwrap_err();
        match err {
            Error::GuardExceeded { states, guard, .. } => {
                assert!(states > 4);
                assert_eq!(guard, 4);
            }
            other => panic!("expected GuardExceeded, got {other:?}"),
        }
    }

    #[test]
    fn big_denominator_path() {
        // Narrow window at large n: the common denominator overflows u128,
        // exercising the big-integer enumeration.
        let window = w(1_000_000, 1_000_008);
        let d = density_distribution(&window, DEFAULT_GUARD).unwrap();
        assert_eq!(d.probs().values().sum::<Ratio>(), Ratio::one());
        let ie = crate::window_density::inclusion_exclusion_delta(&window, 1).unwrap();
        assert_eq!(d.delta(1), ie);
    }

    #[test]
    fn sole_marker_is_zero_for_two_p() {
        // Window (3, 11), marked divisor 10 = 2*5 with 5 in the window.
        let (d, sole) = distribution_with_sole_marker(&w(3, 11), DEFAULT_GUARD, 10).unwrap();
        assert_eq!(sole, Ratio::zero());
        assert_eq!(d, density_distribution(&w(3, 11), DEFAULT_GUARD).unwrap());
    }

    #[test]
    fn sole_marker_counts_solitary_divisors() {
        // Window (3, 6), marked divisor 4: x with only divisor 4 are
        // x = 4 mod 20 classes avoiding 5: density 1/4 * 4/5 = 1/5.
        let (_, sole) = distribution_with_sole_marker(&w(3, 6), DEFAULT_GUARD, 4).unwrap();
        assert_eq!(sole, ratio(1, 5));
    }
}

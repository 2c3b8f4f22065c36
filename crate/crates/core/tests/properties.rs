//! Cross-engine invariants and structural properties.
//!
//! The deterministic sweeps enumerate every window inside an exactly stated
//! envelope; the proptest blocks probe the same invariants over randomized
//! inputs where enumeration would be arbitrary.

use std::cmp::Ordering;

use num_traits::One;
use proptest::prelude::*;

use divisor_density::exact_math::{
    is_prime, lcm_range, nat, ratio_from_naturals, totient, FactoredNatural, Ratio,
};
use divisor_density::kth_prime_density::{
    delta_table, implication_audit, monotone_tail_certificate, unimodality_verdict,
};
use divisor_density::period_oracle::period_counts;
use divisor_density::sequence_analysis::{count_local_maxima, local_extrema};
use divisor_density::window_density::{
    density_distribution, density_distribution_unmarginalized, inclusion_exclusion_delta, Window,
    DEFAULT_GUARD,
};

/// Profile engine, subset inclusion-exclusion, and the period oracle agree
/// exactly on every window with width <= 12 and lcm <= 10^7.
#[test]
fn engines_agree_inside_the_envelope() {
    let mut windows = 0;
    let mut agree = |w: &Window| {
        let pc = match period_counts(w, 10_000_000) {
            Ok(pc) => pc,
            Err(_) => return,
        };
        windows += 1;
        let dist = density_distribution(w, DEFAULT_GUARD).unwrap();
        let mut total = Ratio::from_integer(0.into());
        for r in 0..=w.width() + 1 {
            let ie = inclusion_exclusion_delta(w, r).unwrap();
            assert_eq!(dist.delta(r), ie, "profile vs subsets {w} r={r}");
            assert_eq!(ie, pc.density(r), "subsets vs period {w} r={r}");
            total += ie;
        }
        assert!(total.is_one(), "normalization over {w}");
    };
    for n in 1..=25u64 {
        for m in n + 2..=n + 13 {
            agree(&Window::new(n, m).unwrap());
        }
    }
    // Larger n: narrow windows whose lcm still fits, including bases where
    // the engine's common denominator exceeds u128.
    for n in [50u64, 100, 313, 1000, 2161, 100_000] {
        for m in n + 2..=n + 4 {
            agree(&Window::new(n, m).unwrap());
        }
    }
    assert!(windows > 100, "envelope unexpectedly small: {windows}");
}

/// Monotone-tail certificates stay sound far beyond where they were found:
/// every computed step after the certified index is non-increasing.
#[test]
fn certificates_are_sound_to_two_thousand() {
    let i_max = 2000;
    let table = delta_table(i_max, 2);
    for r in 0..=2u64 {
        let cert = monotone_tail_certificate(r, 100).unwrap().unwrap();
        for i in cert..i_max {
            assert_ne!(
                table.cmp_delta(r, i as isize + 1, i as isize),
                Ordering::Greater,
                "delta_{r} rose at i = {i} past its certificate {cert}"
            );
        }
    }
}

/// The certificate for r needs the one for r - 1.
#[test]
fn certificate_chain_is_enforced() {
    // delta_3 has no drop at desk scale, so r = 4 cannot be certified.
    let err = monotone_tail_certificate(4, 100).unwrap_err();
    assert_eq!(
        err.to_string(),
        "no monotone-tail certificate established for r = 3"
    );
}

/// The tempting shortcut "delta_{k-1}(i-1) < delta_{k-1}(i) implies
/// d_k(p_i) < d_k(p_{i+1})" is not valid in general; the audit must flag the
/// instances where it fails numerically, and the k <= 3 verdicts must come
/// out unimodal regardless (their sequences are non-increasing outright).
#[test]
fn implication_audit_reports_the_known_failures() {
    let failures = implication_audit(3, 25).unwrap();
    assert!(
        failures.contains(&3),
        "d_3 dips from p_3=7 to p_4=11: {failures:?}"
    );
    for k in 1..=3u64 {
        assert!(unimodality_verdict(k, 60).unwrap().unimodal);
    }
    // Where the premise never holds (delta_0 is decreasing), no failures.
    assert!(implication_audit(1, 60).unwrap().is_empty());
}

fn arb_window() -> impl Strategy<Value = Window> {
    (1u64..=30, 2u64..=14).prop_map(|(n, width)| Window::new(n, n + width).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Distributions are normalized and sparse (no zero entries stored).
    #[test]
    fn distributions_normalize(w in arb_window()) {
        let dist = density_distribution(&w, DEFAULT_GUARD).unwrap();
        let total: Ratio = dist.probs().values().sum();
        prop_assert!(total.is_one());
        prop_assert!(dist.probs().values().all(|v| *v > Ratio::from_integer(0.into())));
        prop_assert!(dist.max_count() <= w.width());
    }

    /// Folding singleton primes out of the enumeration changes nothing.
    #[test]
    fn marginalization_neutrality(w in arb_window()) {
        let a = density_distribution(&w, DEFAULT_GUARD).unwrap();
        let b = density_distribution_unmarginalized(&w, DEFAULT_GUARD).unwrap();
        prop_assert_eq!(a, b);
    }

    /// Totient is multiplicative across coprime arguments.
    #[test]
    fn totient_multiplicative(
        a in proptest::collection::btree_map(0usize..6, 1u32..4, 0..4),
        b in proptest::collection::btree_map(6usize..12, 1u32..4, 0..4),
    ) {
        let small = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        let fa = FactoredNatural::from_factors(
            a.iter().map(|(&i, &e)| (small[i], e))).unwrap();
        let fb = FactoredNatural::from_factors(
            b.iter().map(|(&i, &e)| (small[i], e))).unwrap();
        prop_assert!(fa.is_coprime_to(&fb));
        prop_assert_eq!(totient(&fa.mul(&fb)), totient(&fa) * totient(&fb));
    }

    /// Reversing a sequence swaps maxima and minima with mirrored indices.
    #[test]
    fn extrema_reverse_symmetry(seq in proptest::collection::vec(0u8..6, 1..40)) {
        let fwd = local_extrema(&seq).unwrap();
        let mut rev = seq.clone();
        rev.reverse();
        let bwd = local_extrema(&rev).unwrap();
        let mirror = |runs: &[(usize, usize)]| {
            let n = seq.len();
            let mut out: Vec<(usize, usize)> =
                runs.iter().map(|&(a, b)| (n - 1 - b, n - 1 - a)).collect();
            out.reverse();
            out
        };
        prop_assert_eq!(mirror(&fwd.maxima), bwd.maxima);
        prop_assert_eq!(mirror(&fwd.minima), bwd.minima);
    }

    /// The unimodality flag matches the runs-based characterization computed
    /// independently: at most one maximum run and no interior minimum run.
    #[test]
    fn unimodal_matches_runs_characterization(seq in proptest::collection::vec(0u8..5, 1..40)) {
        let report = local_extrema(&seq).unwrap();
        let interior_min = report
            .minima
            .iter()
            .any(|&(a, b)| a > 0 && b < seq.len() - 1);
        let by_runs = count_local_maxima(&seq).unwrap() <= 1 && !interior_min;
        prop_assert_eq!(report.unimodal, by_runs);
    }

    /// The product formula over primes matches the totient of the range lcm.
    #[test]
    fn totient_product_identity_sampled(x in 2u64..2000) {
        let l = lcm_range(1, x).unwrap();
        let mut prod = Ratio::one();
        for q in divisor_density::exact_math::primes_up_to(x) {
            prod *= ratio_from_naturals(nat(q - 1), nat(q));
        }
        prop_assert_eq!(prod, ratio_from_naturals(totient(&l), l.value()));
    }
}

/// Exhaustive form of the product identity over the whole small range.
#[test]
fn totient_product_identity_to_one_thousand() {
    let mut prod = Ratio::one();
    for x in 2u64..=1000 {
        if is_prime(x) {
            prod *= ratio_from_naturals(nat(x - 1), nat(x));
        }
        let l = lcm_range(1, x).unwrap();
        assert_eq!(prod, ratio_from_naturals(totient(&l), l.value()), "x = {x}");
    }
}

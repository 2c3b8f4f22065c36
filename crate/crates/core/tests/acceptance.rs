//! Acceptance suite: one test per acceptance criterion, printing a pass/fail
//! line each. Every expected value is frozen exactly; every comparison on the
//! density side is exact rational equality.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//!
//! Criteria 6b and 9b assert claims that are false at isolated boundary
//! points (the 2p drop degenerates to equality at n = 1 for odd p; the
//! product bound 1/(2 ln m) fails at m = 11 and m = 13). They are implemented
//! as stated and fail honestly, with the exact exceptional sets in their
//! messages; the surrounding tests pin the true behavior.

use divisor_density::analytic_bounds::{
    delta0_lower_bound_check, mertens_bound_violations, mertens_check,
};
use divisor_density::exact_math::{is_prime, ratio};
use divisor_density::kth_prime_density::{
    d_k_sequence, delta_table, monotone_tail_certificate, unimodality_verdict,
};
use divisor_density::period_oracle::{
    kth_prime_period_counts, period_counts, DEFAULT_PERIOD_LIMIT,
};
use divisor_density::window_density::{
    density_distribution, extend_with_prime, inclusion_exclusion_delta, n_one_sequence,
    n_one_sweep, non_unimodality_scan, two_p_check, Window, DEFAULT_GUARD,
};

mod golden;

fn announce(criterion: &str, passed: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {} — {detail}",
        if passed { "pass" } else { "FAIL" }
    );
}

#[test]
fn criterion_01_worked_example_values() {
    let cases = [
        (3u64, 6u64, 1u64, ratio(7, 20)),
        (3, 7, 1, ratio(1, 3)),
        (3, 7, 0, ratio(8, 15)),
        (3, 8, 1, ratio(38, 105)),
    ];
    let mut failures = Vec::new();
    for (n, m, r, expected) in cases {
        let w = Window::new(n, m).unwrap();
        let by_profile = density_distribution(&w, DEFAULT_GUARD).unwrap().delta(r);
        let by_subsets = inclusion_exclusion_delta(&w, r).unwrap();
        let by_period = period_counts(&w, DEFAULT_PERIOD_LIMIT).unwrap().density(r);
        for (engine, got) in [
            ("profile", by_profile),
            ("inclusion-exclusion", by_subsets),
            ("period", by_period),
        ] {
            if got != expected {
                failures.push(format!("{engine} delta_{r}({n},{m}) = {got}"));
            }
        }
    }
    announce(
        "1",
        failures.is_empty(),
        "4 worked-example window values, 3 engines each, exact",
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_02_golden_tables() {
    let table = delta_table(10, 4);
    let mut failures = Vec::new();
    for (r, row) in golden::DELTA_ROWS.iter().enumerate() {
        for (i, &(num, den)) in row.iter().enumerate() {
            if table.value(r as u64, i as isize) != ratio(num, den) {
                failures.push(format!("delta_{r}({i})"));
            }
        }
    }
    let mut d_checked = 0;
    for &(k, row) in golden::D_ROWS.iter() {
        let start = if k == 1 { 0usize } else { 1 };
        for (pos, &(num, den)) in row.iter().enumerate() {
            d_checked += 1;
            if table.dk_value(k, start + pos) != ratio(num, den) {
                failures.push(format!("d_{k}(p_{})", start + pos));
            }
        }
        // The sequence form must reproduce the same values once the leading
        // zeros are stripped.
        let seq = d_k_sequence(k, 10).unwrap();
        for entry in &seq.entries {
            if entry.value != table.dk_value(k, entry.index) {
                failures.push(format!("d_{k} sequence at i={}", entry.index));
            }
        }
    }
    assert_eq!(d_checked, 51);
    announce(
        "2",
        failures.is_empty(),
        "50 delta entries + 51 d_k entries, exact",
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_03_n_one_monotone_desk_scale() {
    // Structural sweep to 10^4 on the integer state: delta_1(1, m) never
    // increases and never falls below delta_0(1, m).
    let sweep = n_one_sweep(10_000).unwrap();
    let structural = sweep.non_increasing && sweep.delta1_dominates;

    // Ground truth for the small prefix. The period oracle covers windows up
    // to m = 21 (L = lcm(1..20) = 232792560 needs a raised limit); beyond the
    // oracle's reach the independent profile engine carries the check to 30.
    let mut oracle_failures = Vec::new();
    for (m, d1, d0) in n_one_sequence(30).unwrap() {
        let w = Window::new(1, m).unwrap();
        if m <= 21 {
            let pc = period_counts(&w, 250_000_000).unwrap();
            if pc.density(1) != d1 || pc.density(0) != d0 {
                oracle_failures.push(format!("period oracle at m={m}"));
            }
        }
        let dist = density_distribution(&w, DEFAULT_GUARD).unwrap();
        if dist.delta(1) != d1 || dist.delta(0) != d0 {
            oracle_failures.push(format!("profile engine at m={m}"));
        }
    }
    let passed = structural && oracle_failures.is_empty();
    announce(
        "3",
        passed,
        "delta_1(1,m) non-increasing and >= delta_0(1,m) for m <= 10^4; \
         period-oracle equality to m=21 (oracle limit), profile-engine equality to m=30",
    );
    assert!(structural, "structural sweep: {sweep:?}");
    assert!(oracle_failures.is_empty(), "{oracle_failures:?}");
}

#[test]
fn criterion_04_step_identities() {
    // Across every step to 10^4, A/phi(L) moves by exactly +1/(p-1) at a
    // prime, -1/(p(p-1)) at a prime square, and 0 otherwise; all checked by
    // cross-multiplied integer identities inside the sweep.
    let sweep = n_one_sweep(10_000).unwrap();
    announce(
        "4",
        sweep.step_identities,
        "telescoping step identities exact for m <= 10^4",
    );
    assert!(sweep.step_identities, "{sweep:?}");
}

#[test]
fn criterion_05_non_unimodality_for_small_n() {
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for n in 2..=20u64 {
        match non_unimodality_scan(n, 400, DEFAULT_GUARD).unwrap() {
            Some((seq, report)) => {
                assert!(report.maxima.len() >= 2, "n={n}");
                let (i, j, k) = report.witness.expect("non-unimodal needs a witness");
                let triple = (seq[i].0, seq[j].0, seq[k].0);
                // The scanned sequence must dip strictly at the witness.
                assert!(seq[j].1 < seq[i].1 && seq[j].1 < seq[k].1, "n={n}");
                if n == 3 {
                    assert_eq!(triple, (6, 7, 8), "the worked example witness");
                }
                witnesses.push(format!("n={n}:{triple:?}"));
            }
            None => failures.push(format!("no second maximum found for n={n}")),
        }
    }
    announce(
        "5",
        failures.is_empty(),
        &format!(
            ">=2 maxima runs for every n in 2..=20; witnesses {}",
            witnesses.join(" ")
        ),
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_06a_prime_step_identity() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=10u64 {
        for p in (n + 2)..=50 {
            if !is_prime(p) {
                continue;
            }
            checked += 1;
            let base = density_distribution(&Window::new(n, p).unwrap(), DEFAULT_GUARD).unwrap();
            let stepped = extend_with_prime(&base, p).unwrap();
            let direct =
                density_distribution(&Window::new(n, p + 1).unwrap(), DEFAULT_GUARD).unwrap();
            if stepped != direct {
                failures.push(format!("extend ({n},{p})"));
            }
        }
    }
    announce(
        "6a",
        failures.is_empty(),
        &format!("extend_with_prime == full recomputation on {checked} (n,p) pairs"),
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_06b_two_p_lemma() {
    // As stated: for ALL n <= 10 and primes n < p <= 50, the 2p extension
    // drops delta_1 strictly and nothing has 2p as its sole divisor.
    let mut sole_failures = Vec::new();
    let mut drop_failures = Vec::new();
    let mut checked = 0;
    for n in 1..=10u64 {
        for p in (n + 1)..=50 {
            if !is_prime(p) {
                continue;
            }
            checked += 1;
            let tp = two_p_check(n, p, DEFAULT_GUARD).unwrap();
            if tp.sole_2p_density != ratio(0, 1) {
                sole_failures.push((n, p));
            }
            if !tp.strict_drop {
                drop_failures.push((n, p));
            }
        }
    }
    assert!(
        sole_failures.is_empty(),
        "sole-2p density must vanish: {sole_failures:?}"
    );
    // Strictness does hold on every pair with n >= 2.
    assert!(
        drop_failures.iter().all(|&(n, p)| n == 1 && p > 2),
        "unexpected strictness failures beyond the n=1 boundary: {drop_failures:?}"
    );
    let passed = drop_failures.is_empty();
    announce(
        "6b",
        passed,
        &format!(
            "sole-2p density = 0 on all {checked} pairs; strict drop fails only at {drop_failures:?}"
        ),
    );
    assert!(
        passed,
        "the 2p drop is an equality, not strict, at n = 1 for odd p: with 2 inside \
         the window (1, 2p), every multiple of 2p already has the divisors 2 and p, \
         so adding 2p never changes delta_1. Strictness holds for every tested pair \
         with 2 <= n <= 10. Exceptional pairs: {drop_failures:?}"
    );
}

#[test]
fn criterion_07_kth_prime_verdicts() {
    let mut failures = Vec::new();
    for k in 1..=3u64 {
        let report = unimodality_verdict(k, 1000).unwrap();
        if !report.unimodal {
            failures.push(format!("d_{k} not unimodal to 1000"));
        }
    }
    let cert = monotone_tail_certificate(2, 100).unwrap();
    if cert != Some(23) {
        failures.push(format!("certificate r=2 = {cert:?}"));
    }
    for k in 4..=20u64 {
        let report = unimodality_verdict(k, 200).unwrap();
        if report.unimodal || report.witness.is_none() {
            failures.push(format!("d_{k} lacks a non-unimodality witness"));
        }
    }
    // The k = 4 witness values are the golden fractions exactly.
    let report = unimodality_verdict(4, 200).unwrap();
    let (i, j, l) = report.witness.unwrap();
    let table = delta_table(12, 3);
    let offset = 3usize;
    let values = [
        table.dk_value(4, i + offset),
        table.dk_value(4, j + offset),
        table.dk_value(4, l + offset),
    ];
    let expected = [ratio(31, 5005), ratio(206, 36465), ratio(1308, 230945)];
    if values != expected {
        failures.push(format!("k=4 witness values {values:?}"));
    }
    announce(
        "7",
        failures.is_empty(),
        "d_k unimodal for k <= 3 to i=1000 (r=2 certificate at 23); \
         witnessed non-unimodality for k = 4..20",
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_08_kth_prime_oracle_equivalence() {
    let table = delta_table(8, 8);
    let mut checked = 0;
    let mut failures = Vec::new();
    for i in 0..=8usize {
        for k in 1..=(i as u64 + 1) {
            checked += 1;
            let oracle = kth_prime_period_counts(k, i, 250_000_000).unwrap();
            if table.dk_value(k, i) != oracle.density() {
                failures.push(format!("d_{k}(p_{i})"));
            }
        }
    }
    announce(
        "8",
        failures.is_empty(),
        &format!("{checked} (k,i) pairs equal the period oracle"),
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_09a_mertens_asymptote() {
    let report = mertens_check(100_000).unwrap();
    let ok = (report.asymptote_ratio - 1.0).abs() < 0.05;
    announce(
        "9a",
        ok,
        &format!(
            "product/(e^-gamma/ln m) = {:.6} at m = 10^5",
            report.asymptote_ratio
        ),
    );
    assert!(ok, "asymptote ratio {}", report.asymptote_ratio);
}

#[test]
fn criterion_09b_phi_over_l_bound_sweep() {
    // As stated: phi(L)/L > 1/(2 ln m) for ALL 10 <= m <= 10^5.
    let violations = mertens_bound_violations(10, 100_000).unwrap();
    // The sweep's own finding, pinned so the exceptional set cannot drift.
    assert!(
        violations == vec![11, 13] || violations.is_empty(),
        "unexpected violation set {violations:?}"
    );
    let passed = violations.is_empty();
    announce(
        "9b",
        passed,
        &format!("prod_{{q<=m}}(q-1)/q > 1/(2 ln m) sweep; violations {violations:?}"),
    );
    assert!(
        passed,
        "the bound fails at m = 11 (product 16/77 = 0.20779... < 0.20852...) and \
         m = 13 (product 192/1001 = 0.19181... < 0.19494...): exactly 32 ln 11 < 77 \
         and 384 ln 13 < 1001. It holds everywhere else in [10, 10^5]."
    );
}

#[test]
fn criterion_09c_gcd_class_identity() {
    // m > n^2 pairs; exact identity against the window engine, and against
    // the period oracle wherever L stays within reach.
    let pairs = [
        (2u64, 5u64),
        (2, 6),
        (2, 10),
        (2, 16),
        (3, 12),
        (3, 20),
        (4, 17),
        (4, 30),
        (5, 40),
    ];
    let mut failures = Vec::new();
    for (n, m) in pairs {
        let chain = delta0_lower_bound_check(n, m, DEFAULT_GUARD).unwrap();
        if !chain.identity_holds {
            failures.push(format!("identity ({n},{m})"));
        }
        if !chain.chain_holds {
            failures.push(format!("chain ({n},{m})"));
        }
        if let Ok(pc) = period_counts(&Window::new(n, m).unwrap(), 250_000_000) {
            if pc.density(0) != chain.delta0 {
                failures.push(format!("oracle delta_0 ({n},{m})"));
            }
        }
    }
    announce(
        "9c",
        failures.is_empty(),
        &format!(
            "sum phi(L/i)/L identity and bound chain at {} points",
            pairs.len()
        ),
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_10_declared_out_of_reach() {
    // The asymptotic statements (superpolynomially many maxima; the
    // O(log log / log) upper bound) have no finite instantiation to test.
    // Their finite ingredients are covered by criteria 5 and 6: rises at
    // primes with delta_0 > delta_1, strict 2p drops, and witness triples.
    let witnessed = non_unimodality_scan(3, 60, DEFAULT_GUARD)
        .unwrap()
        .is_some();
    let drop = two_p_check(3, 5, DEFAULT_GUARD).unwrap().strict_drop;
    announce(
        "10",
        witnessed && drop,
        "asymptotic claims substituted by criteria 5-6 ingredients",
    );
    assert!(witnessed && drop);
}

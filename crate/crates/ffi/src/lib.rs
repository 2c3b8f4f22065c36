//! C ABI over the divisor-density engines.
//!
//! Exact rationals cross the boundary as NUL-terminated `numerator/denominator`
//! strings in lowest terms (they routinely exceed any machine word); free them
//! with [`dd_string_free`]. Distributions are opaque handles released with
//! [`dd_distribution_free`]. Every fallible call returns a [`DdStatus`];
//! outputs are written through pointers only on `DD_STATUS_OK`.

use std::ffi::{c_char, CString};

use divisor_density::error::Error;
use divisor_density::exact_math::{format_ratio, Ratio};
use divisor_density::kth_prime_density::{delta_table, monotone_tail_certificate};
use divisor_density::period_oracle::period_counts;
use divisor_density::window_density::{
    density_distribution, inclusion_exclusion_delta, DensityDistribution, Window,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum DdStatus {
    /// Success.
    Ok = 0,
    /// A required pointer was NULL.
    NullPointer = 1,
    /// Domain error: invalid window, zero k, non-prime argument, ...
    Domain = 2,
    /// A resource guard (profile states, period length, window width) tripped.
    Resource = 3,
    /// The requested value does not exist (absent certificate).
    NotFound = 4,
}

/// Selects how a density is computed.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum DdEngine {
    /// Capped-valuation profile enumeration (the general engine).
    Profile = 0,
    /// Subset inclusion-exclusion (narrow windows only).
    InclusionExclusion = 1,
    /// Brute-force counting over one full period.
    Period = 2,
}

/// Opaque exact distribution r -> delta_r(n, m).
pub struct DdDistribution(DensityDistribution);

fn status_of(err: &Error) -> DdStatus {
    match err.exit_code() {
        3 => DdStatus::Resource,
        _ => DdStatus::Domain,
    }
}

fn export_ratio(value: &Ratio, out: *mut *mut c_char) -> DdStatus {
    let s = CString::new(format_ratio(value)).expect("no interior NULs in a fraction");
    unsafe { *out = s.into_raw() };
    DdStatus::Ok
}

/// Crate version as a static string; do not free.
#[no_mangle]
pub extern "C" fn dd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Exact delta_r(n, m) by the chosen engine, written to `out_value` as a
/// `numerator/denominator` string.
///
/// `guard` caps profile states (engine `Profile`); `period_limit` caps the
/// period length (engine `Period`). Pass 0 for either to use the defaults.
///
/// # Safety
/// `out_value` must be a valid pointer to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_delta(
    n: u64,
    m: u64,
    r: u64,
    engine: DdEngine,
    guard: u64,
    period_limit: u64,
    out_value: *mut *mut c_char,
) -> DdStatus {
    if out_value.is_null() {
        return DdStatus::NullPointer;
    }
    let guard = if guard == 0 {
        divisor_density::window_density::DEFAULT_GUARD
    } else {
        guard
    };
    let period_limit = if period_limit == 0 {
        divisor_density::period_oracle::DEFAULT_PERIOD_LIMIT
    } else {
        period_limit
    };
    let window = match Window::new(n, m) {
        Ok(w) => w,
        Err(e) => return status_of(&e),
    };
    let value = match engine {
        DdEngine::Profile => density_distribution(&window, guard).map(|d| d.delta(r)),
        DdEngine::InclusionExclusion => inclusion_exclusion_delta(&window, r),
        DdEngine::Period => period_counts(&window, period_limit).map(|pc| pc.density(r)),
    };
    match value {
        Ok(v) => export_ratio(&v, out_value),
        Err(e) => status_of(&e),
    }
}

/// Compute the full distribution over the window (n, m) and hand back an
/// opaque handle. Pass guard = 0 for the default.
///
/// # Safety
/// `out` must be a valid pointer to writable memory for one pointer. The
/// returned handle must be released with [`dd_distribution_free`].
#[no_mangle]
pub unsafe extern "C" fn dd_distribution_compute(
    n: u64,
    m: u64,
    guard: u64,
    out: *mut *mut DdDistribution,
) -> DdStatus {
    if out.is_null() {
        return DdStatus::NullPointer;
    }
    let guard = if guard == 0 {
        divisor_density::window_density::DEFAULT_GUARD
    } else {
        guard
    };
    let window = match Window::new(n, m) {
        Ok(w) => w,
        Err(e) => return status_of(&e),
    };
    match density_distribution(&window, guard) {
        Ok(dist) => {
            *out = Box::into_raw(Box::new(DdDistribution(dist)));
            DdStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Window bounds of a distribution handle.
///
/// # Safety
/// `dist` must be a live handle from [`dd_distribution_compute`]; `out_n` and
/// `out_m` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn dd_distribution_window(
    dist: *const DdDistribution,
    out_n: *mut u64,
    out_m: *mut u64,
) -> DdStatus {
    if dist.is_null() || out_n.is_null() || out_m.is_null() {
        return DdStatus::NullPointer;
    }
    let dist = &(*dist).0;
    *out_n = dist.window().n();
    *out_m = dist.window().m();
    DdStatus::Ok
}

/// Number of divisor counts with positive density.
///
/// # Safety
/// `dist` must be a live handle from [`dd_distribution_compute`].
#[no_mangle]
pub unsafe extern "C" fn dd_distribution_support(dist: *const DdDistribution) -> u64 {
    if dist.is_null() {
        return 0;
    }
    (*dist).0.probs().len() as u64
}

/// The idx-th support entry (ascending r): writes r and its exact density.
///
/// # Safety
/// `dist` must be a live handle; `out_r` and `out_value` must be valid
/// writable pointers. The string goes to [`dd_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dd_distribution_entry(
    dist: *const DdDistribution,
    idx: u64,
    out_r: *mut u64,
    out_value: *mut *mut c_char,
) -> DdStatus {
    if dist.is_null() || out_r.is_null() || out_value.is_null() {
        return DdStatus::NullPointer;
    }
    match (*dist).0.probs().iter().nth(idx as usize) {
        Some((&r, value)) => {
            *out_r = r;
            export_ratio(value, out_value)
        }
        None => DdStatus::NotFound,
    }
}

/// Exact delta_r(n, m) looked up on a handle; absent counts read as 0.
///
/// # Safety
/// `dist` must be a live handle; `out_value` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_distribution_delta(
    dist: *const DdDistribution,
    r: u64,
    out_value: *mut *mut c_char,
) -> DdStatus {
    if dist.is_null() || out_value.is_null() {
        return DdStatus::NullPointer;
    }
    export_ratio(&(*dist).0.delta(r), out_value)
}

/// Release a distribution handle. NULL is a no-op.
///
/// # Safety
/// `dist` must be NULL or a handle from [`dd_distribution_compute`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn dd_distribution_free(dist: *mut DdDistribution) {
    if !dist.is_null() {
        drop(Box::from_raw(dist));
    }
}

/// Exact density of integers whose k-th smallest prime factor is the i-th
/// prime (p_0 = 2), as a fraction string.
///
/// # Safety
/// `out_value` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_kth_prime_density(
    k: u64,
    i: u64,
    out_value: *mut *mut c_char,
) -> DdStatus {
    if out_value.is_null() {
        return DdStatus::NullPointer;
    }
    if k == 0 {
        return DdStatus::Domain;
    }
    let table = delta_table(i as usize, k - 1);
    export_ratio(&table.dk_value(k, i as usize), out_value)
}

/// Index from which the r-th row of the prime-divisor-count table is
/// certified non-increasing, searching up to i_max. `DD_STATUS_NOT_FOUND`
/// when no drop occurs in range.
///
/// # Safety
/// `out_index` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_monotone_tail_certificate(
    r: u64,
    i_max: u64,
    out_index: *mut u64,
) -> DdStatus {
    if out_index.is_null() {
        return DdStatus::NullPointer;
    }
    match monotone_tail_certificate(r, i_max as usize) {
        Ok(Some(idx)) => {
            *out_index = idx as u64;
            DdStatus::Ok
        }
        Ok(None) => DdStatus::NotFound,
        Err(e) => status_of(&e),
    }
}

/// Free a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string produced by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

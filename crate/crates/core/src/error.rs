//! Error type shared by all engines.

use std::fmt;

use num_bigint::BigUint;

/// Everything that can go wrong across the engines.
///
/// Variants split into two families: domain errors (bad arguments, violated
/// preconditions) and resource errors (a computation that would exceed a
/// configured guard). [`Error::exit_code`] maps the families onto the CLI
/// exit-code contract: 2 for domain errors, 3 for resource errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The open interval (n, m) is empty or n = 0.
    InvalidWindow { n: u64, m: u64 },
    /// A named argument violated an operation's precondition.
    InvalidArgument(&'static str),
    /// A prime was required.
    NotPrime(u64),
    /// Profile enumeration would visit more states than the guard allows.
    GuardExceeded {
        states: u128,
        guard: u64,
        /// Sequence scans report the m at which the guard tripped.
        at_m: Option<u64>,
    },
    /// The subset-sum oracle only handles narrow windows.
    WindowTooWide { width: u64, max: u64 },
    /// The period oracle refuses periods above its limit.
    PeriodTooLarge { period: BigUint, limit: u64 },
    /// `extend_with_prime` was handed a prime that is not the window's m.
    ExtensionMismatch { p: u64, m: u64 },
    /// Extrema analysis of an empty sequence.
    EmptySequence,
    /// A monotone-tail certificate depends on the certificate for r-1.
    CertificateMissing { r: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWindow { n, m } => {
                write!(f, "invalid window ({n},{m}): need n >= 1 and m >= n+2")
            }
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::NotPrime(x) => write!(f, "{x} is not prime"),
            Error::GuardExceeded {
                states,
                guard,
                at_m,
            } => match at_m {
                Some(m) => write!(
                    f,
                    "state-space guard exceeded at m = {m}: {states} profile states > guard {guard}"
                ),
                None => write!(
                    f,
                    "state-space guard exceeded: {states} profile states > guard {guard}"
                ),
            },
            Error::WindowTooWide { width, max } => {
                write!(
                    f,
                    "window width {width} exceeds the subset oracle limit {max}"
                )
            }
            Error::PeriodTooLarge { period, limit } => {
                write!(f, "period {period} exceeds the period-oracle limit {limit}")
            }
            Error::ExtensionMismatch { p, m } => {
                write!(
                    f,
                    "prime extension mismatch: p = {p} but the window ends at m = {m}"
                )
            }
            Error::EmptySequence => write!(f, "empty sequence"),
            Error::CertificateMissing { r } => {
                write!(f, "no monotone-tail certificate established for r = {r}")
            }
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// CLI exit code: 2 for usage/domain errors, 3 for resource guards.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GuardExceeded { .. }
            | Error::WindowTooWide { .. }
            | Error::PeriodTooLarge { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! The dedicated n = 1 recursion.
//!
//! For the window (1, m) let L = lcm(2, ..., m-1), let A count the residues
//! in [1, L] with exactly one divisor in the window and phi(L) those with
//! none. Growing m only matters when the new divisor m is a prime p or a
//! prime square p^2:
//!
//!   prime:        L' = pL,  phi' = (p-1) phi,  A' = A(p-1) + phi
//!   prime square: L' = pL,  phi' = p phi,      A' = Ap - phi/(p-1)
//!
//! Every other composite m already has two distinct window divisors, so the
//! counts carry over unchanged. The state is held as plain integers; ratios
//! are materialized on demand, and the long-range monotonicity sweeps compare
//! by cross-multiplication so no gcd ever touches the thousands-of-digit
//! state.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{is_prime, nat, ratio_from_naturals, Natural, Ratio};

/// How the new divisor m affects the (1, m) -> (1, m+1) step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// m = p prime.
    Prime(u64),
    /// m = p^2 for a prime p.
    PrimeSquare(u64),
    /// m composite with two distinct proper divisors already in the window.
    Inert,
}

/// Exact state of the n = 1 window (1, m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NOneState {
    m: u64,
    a: Natural,
    phi: Natural,
    lcm: Natural,
}

impl NOneState {
    /// Base case m = 3: window {2}, L = 2, A = phi(L) = 1.
    pub fn base() -> Self {
        NOneState {
            m: 3,
            a: Natural::one(),
            phi: Natural::one(),
            lcm: nat(2),
        }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Residue count A with exactly one divisor in (1, m).
    pub fn a(&self) -> &Natural {
        &self.a
    }

    /// phi(L): residues with no divisor in (1, m).
    pub fn phi(&self) -> &Natural {
        &self.phi
    }

    /// L = lcm(2, ..., m-1).
    pub fn lcm(&self) -> &Natural {
        &self.lcm
    }

    /// delta_1(1, m) = A / L in lowest terms.
    pub fn a_over_l(&self) -> Ratio {
        ratio_from_naturals(self.a.clone(), self.lcm.clone())
    }

    /// delta_0(1, m) = phi(L) / L in lowest terms.
    pub fn phi_over_l(&self) -> Ratio {
        ratio_from_naturals(self.phi.clone(), self.lcm.clone())
    }

    /// A / phi(L), the telescoping quantity of the step identities.
    pub fn a_over_phi(&self) -> Ratio {
        ratio_from_naturals(self.a.clone(), self.phi.clone())
    }

    /// delta_1(1, m) >= delta_0(1, m), i.e. A >= phi(L).
    pub fn delta1_dominates(&self) -> bool {
        self.a >= self.phi
    }

    /// Classify the divisor the next step adds.
    pub fn next_step_kind(&self) -> StepKind {
        classify(self.m)
    }

    /// Advance to the state for m+1.
    pub fn step(&self) -> (NOneState, StepKind) {
        let kind = self.next_step_kind();
        let next = match kind {
            StepKind::Prime(p) => NOneState {
                m: self.m + 1,
                a: &self.a * nat(p - 1) + &self.phi,
                phi: &self.phi * nat(p - 1),
                lcm: &self.lcm * nat(p),
            },
            StepKind::PrimeSquare(p) => {
                let (correction, rem) = self.phi.div_rem(&nat(p - 1));
                debug_assert!(rem.is_zero(), "phi(L) is divisible by p-1 once p | L");
                NOneState {
                    m: self.m + 1,
                    a: &self.a * nat(p) - correction,
                    phi: &self.phi * nat(p),
                    lcm: &self.lcm * nat(p),
                }
            }
            StepKind::Inert => NOneState {
                m: self.m + 1,
                ..self.clone()
            },
        };
        (next, kind)
    }
}

fn classify(m: u64) -> StepKind {
    if is_prime(m) {
        return StepKind::Prime(m);
    }
    let root = (m as f64).sqrt() as u64;
    for candidate in root.saturating_sub(1)..=root + 1 {
        if candidate * candidate == m && is_prime(candidate) {
            return StepKind::PrimeSquare(candidate);
        }
    }
    StepKind::Inert
}

/// (m, delta_1(1, m), delta_0(1, m)) for m = 3 ..= m_max. Materializes
/// reduced ratios per entry, so keep m_max modest; use [`n_one_sweep`] for
/// long-range structural checks.
pub fn n_one_sequence(m_max: u64) -> Result<Vec<(u64, Ratio, Ratio)>> {
    if m_max < 3 {
        return Err(Error::InvalidArgument("n_one_sequence needs m_max >= 3"));
    }
    let mut state = NOneState::base();
    let mut out = Vec::with_capacity((m_max - 2) as usize);
    out.push((3, state.a_over_l(), state.phi_over_l()));
    while state.m() < m_max {
        state = state.step().0;
        out.push((state.m(), state.a_over_l(), state.phi_over_l()));
    }
    Ok(out)
}

/// Outcome of the integer-state sweep over m = 3 ..= m_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NOneSweep {
    pub m_max: u64,
    /// delta_1(1, m+1) <= delta_1(1, m) held at every step.
    pub non_increasing: bool,
    /// A >= phi(L) held at every m.
    pub delta1_dominates: bool,
    /// Every step moved A/phi(L) by exactly +1/(p-1), -1/(p(p-1)), or 0.
    pub step_identities: bool,
    /// First m violating any of the above, if one exists.
    pub first_violation: Option<u64>,
}

impl NOneSweep {
    pub fn all_hold(&self) -> bool {
        self.non_increasing && self.delta1_dominates && self.step_identities
    }
}

/// Verify the long-range structure with pure integer arithmetic:
/// cross-multiplied comparisons and the telescoping identities
///
///   prime p:        (A' phi - A phi') (p-1)    == phi phi'
///   prime square:   (A phi' - A' phi) p (p-1)  == phi phi'
///   otherwise:      A' phi == A phi'
///
/// where primed values belong to m+1.
pub fn n_one_sweep(m_max: u64) -> Result<NOneSweep> {
    if m_max < 3 {
        return Err(Error::InvalidArgument("n_one_sweep needs m_max >= 3"));
    }
    let mut report = NOneSweep {
        m_max,
        non_increasing: true,
        delta1_dominates: true,
        step_identities: true,
        first_violation: None,
    };
    let flag = |cond: bool, field: &mut bool, m: u64, report_first: &mut Option<u64>| {
        if !cond {
            *field = false;
            report_first.get_or_insert(m);
        }
    };
    let mut state = NOneState::base();
    if !state.delta1_dominates() {
        report.delta1_dominates = false;
        report.first_violation = Some(3);
    }
    while state.m() < m_max {
        let (next, kind) = state.step();
        let m = state.m();
        // delta_1 non-increasing: A' L <= A L', and L' = pL or L.
        let non_inc = match kind {
            StepKind::Prime(p) | StepKind::PrimeSquare(p) => next.a <= &state.a * nat(p),
            StepKind::Inert => next.a == state.a,
        };
        let mut fv = report.first_violation;
        flag(non_inc, &mut report.non_increasing, m, &mut fv);
        flag(
            next.a >= next.phi,
            &mut report.delta1_dominates,
            next.m,
            &mut fv,
        );
        let identity = match kind {
            StepKind::Prime(p) => {
                let lhs = (&next.a * &state.phi - &state.a * &next.phi) * nat(p - 1);
                lhs == &state.phi * &next.phi
            }
            StepKind::PrimeSquare(p) => {
                let lhs = (&state.a * &next.phi - &next.a * &state.phi) * nat(p * (p - 1));
                lhs == &state.phi * &next.phi
            }
            StepKind::Inert => &next.a * &state.phi == &state.a * &next.phi,
        };
        flag(identity, &mut report.step_identities, m, &mut fv);
        report.first_violation = fv;
        state = next;
    }
    Ok(report)
}

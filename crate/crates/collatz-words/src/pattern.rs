//! Realization families: for a word `[n0, ..., nS]`, the start values `M` and
//! end values `N` of all realizing Collatz sequences form arithmetic
//! progressions `M(k) = M0 + 2^D * k`, `N(k) = N0 + 3^S * k`. This module
//! computes them three ways that must agree: coupled recurrences for
//! unit-tail words, their closed-form solution, and the general construction
//! that appends the trailing down-run.
//!
//! The recurrence walks the word one `s`-block at a time. Extending a
//! unit-tail word by one block means asking which end values `N + 3^(S-1)*t`
//! have the 2-adic shape `2^(n-1) * (2m+1)` that supports `n-1` further down
//! steps and one up step; that is a Diophantine condition
//! `3^(S-1)*t - 2^n*m = c` solved exactly by [`crate::diophantine`]. The
//! family base is finally normalized to its smallest positive member, which
//! is the k = 0 realization.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use thiserror::Error;

use crate::arith::{ceil_div, pow2, pow3};
use crate::diophantine::special_solution;
use crate::words::{word_counts, WordTuple};

/// State of the coupled recurrences after processing level `S`.
///
/// `m` is the start-value basepoint of the integer-parameter family (it may
/// leave the fundamental range, or go nonpositive, before the final shift),
/// `n_tilde` the end-value basepoint minus 2, and `c` the right-hand side the
/// next extension step would solve. `step_exp2` is the exponent of the
/// 2-power step at this level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceState {
    pub level: u64,
    pub m: BigInt,
    pub n_tilde: BigInt,
    pub c: BigInt,
    pub step_exp2: u64,
}

impl RecurrenceState {
    /// End-value basepoint `N(S) = n_tilde + 2`.
    pub fn n(&self) -> BigInt {
        &self.n_tilde + 2
    }
}

/// An arithmetic-progression family of realizations. `member(k)` for
/// `k = 0, 1, 2, ...` enumerates all of them in increasing order; `m0` is the
/// smallest start value realizing the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationFamily {
    pub m0: BigUint,
    pub n0: BigUint,
    pub m_step: BigUint,
    pub n_step: BigUint,
}

impl RealizationFamily {
    /// The k-th realization `(M(k), N(k)) = (m0 + m_step*k, n0 + n_step*k)`.
    pub fn member(&self, k: u64) -> (BigUint, BigUint) {
        (
            &self.m0 + &self.m_step * BigUint::from(k),
            &self.n0 + &self.n_step * BigUint::from(k),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("recurrence families require a unit tail (last entry 1); got {found}")]
    NonUnitTail { found: u64 },
}

// A(n) = 2^(n-1) - 2 in integer form, which extends to n = 1 where it is -1.
fn block_offset(n: u64) -> BigInt {
    BigInt::from(pow2(n - 1)) - 2
}

/// Iterates the coupled recurrences over all levels `1..=S` of the word.
///
/// Level 1 is the closed input `M(1) = 2^n0`, `N~(1) = 0`, `c(1) = A(n1)`;
/// level `j` is produced from level `j-1` with the special solution of
/// `3^(j-1)*x - 2^(n_{j-1})*y = 1`. Only entries `n1..n_{S-1}` influence the
/// start/end basepoints at level `S`; the last entry enters `c(S)` alone.
pub fn recurrence_states(word: &WordTuple) -> Vec<RecurrenceState> {
    let ns = word.ns();
    let levels = ns.len() as u64;
    let mut states = Vec::with_capacity(ns.len());
    states.push(RecurrenceState {
        level: 1,
        m: BigInt::from(pow2(word.n0())),
        n_tilde: BigInt::from(0),
        c: block_offset(ns[0]),
        step_exp2: 1 + word.n0(),
    });
    for level in 2..=levels {
        let prev = states.last().expect("at least level 1 present");
        let n_prev = ns[level as usize - 2];
        let (x0, y0) = special_solution(level - 1, n_prev);
        let m = &prev.m + BigInt::from(pow2(prev.step_exp2)) * &prev.c * BigInt::from(x0);
        let n_tilde = BigInt::from(3) * BigInt::from(y0) * &prev.c;
        let c = -&n_tilde + block_offset(ns[level as usize - 1]);
        states.push(RecurrenceState {
            level,
            m,
            n_tilde,
            c,
            step_exp2: prev.step_exp2 + n_prev,
        });
    }
    states
}

/// The closed-form solution of the recurrences, evaluated independently of
/// the iteration: `c(S)` as an alternating sum over products of special
/// solutions, `M(S)` as `2^n0` plus the accumulated corrections, and
/// `N~(S) = A(nS) - c(S)`. Must agree exactly with the final
/// [`recurrence_states`] entry. Requires a unit tail.
pub fn closed_form_state(word: &WordTuple) -> Result<RecurrenceState, PatternError> {
    let ns = word.ns();
    let tail = *ns.last().expect("tuple words have at least one entry");
    if tail != 1 {
        return Err(PatternError::NonUnitTail { found: tail });
    }
    let s = ns.len() as u64;
    // cache (x0, y0) at each level j = 1..=S-1 and step exponents
    let specials: Vec<(BigInt, BigInt)> = (1..s)
        .map(|j| {
            let (x0, y0) = special_solution(j, ns[j as usize - 1]);
            (BigInt::from(x0), BigInt::from(y0))
        })
        .collect();
    let c_at = |j: u64| -> BigInt {
        // c(j) = A(n_j) + sum_{i=1}^{j-1} (-3)^i A(n_{j-i}) prod_{l=1}^{i} y0(j-l)
        let mut total = block_offset(ns[j as usize - 1]);
        let mut product = BigInt::one();
        let mut sign_pow = BigInt::one();
        for i in 1..j {
            product *= &specials[(j - i) as usize - 1].1;
            sign_pow *= BigInt::from(-3);
            total += &sign_pow * block_offset(ns[(j - i) as usize - 1]) * &product;
        }
        total
    };
    let mut step_exp = 1 + word.n0();
    let mut m = BigInt::from(pow2(word.n0()));
    for j in 1..s {
        m += BigInt::from(pow2(step_exp)) * &specials[j as usize - 1].0 * c_at(j);
        step_exp += ns[j as usize - 1];
    }
    let c = c_at(s);
    let n_tilde = block_offset(tail) - &c;
    Ok(RecurrenceState {
        level: s,
        m,
        n_tilde,
        c,
        step_exp2: step_exp,
    })
}

// Shifts the raw basepoints onto the smallest positive start value of the
// residue class; the end value moves in lockstep.
fn normalize(m_raw: BigInt, n_raw: BigInt, m_step: BigUint, n_step: BigUint) -> RealizationFamily {
    let shift = ceil_div(&(BigInt::one() - &m_raw), &m_step);
    let m0 = m_raw + BigInt::from(m_step.clone()) * &shift;
    let n0 = n_raw + BigInt::from(n_step.clone()) * &shift;
    assert!(
        m0.is_positive() && n0.is_positive(),
        "family normalization must land on positive members; arithmetic bug"
    );
    RealizationFamily {
        m0: m0.to_biguint().expect("positive"),
        n0: n0.to_biguint().expect("positive"),
        m_step,
        n_step,
    }
}

/// Realization family of a unit-tail word via the recurrences.
///
/// The steps are `2^D` and `3^S` (for a unit tail the core-down count equals
/// the full down count). Words with a longer tail are routed to
/// [`general_families`].
pub fn recur_families_ns1(word: &WordTuple) -> Result<RealizationFamily, PatternError> {
    let tail = *word.ns().last().expect("tuple words have at least one entry");
    if tail != 1 {
        return Err(PatternError::NonUnitTail { found: tail });
    }
    let state = recurrence_states(word)
        .pop()
        .expect("at least one level");
    let m_step = pow2(state.step_exp2);
    let n_step = pow3(state.level);
    Ok(normalize(state.m.clone(), state.n(), m_step, n_step))
}

/// Realization family of any tuple word.
///
/// Builds the unit-tail family for the word with its trailing down-run
/// removed, then appends `d^(nS - 1)`: end values must be `2^(nS-1) * m`, a
/// Diophantine condition whose solution re-parameterizes the family with
/// steps `2^D` and `3^S`. For a unit tail this appends nothing and agrees
/// exactly with [`recur_families_ns1`].
pub fn general_families(word: &WordTuple) -> RealizationFamily {
    let ns = word.ns();
    let s = ns.len() as u64;
    let tail = *ns.last().expect("tuple words have at least one entry");
    let state = recurrence_states(word)
        .pop()
        .expect("at least one level");
    let n_base = state.n();
    let c_new = -&n_base;
    let (x0, y0) = special_solution(s, tail - 1);
    let m_raw = &state.m - BigInt::from(pow2(state.step_exp2)) * &n_base * BigInt::from(x0);
    let n_raw = &c_new * BigInt::from(y0);
    let m_step = pow2(word_counts(word).downs);
    let n_step = pow3(s);
    normalize(m_raw, n_raw, m_step, n_step)
}

//! Exact solver for the family of linear Diophantine equations
//! `3^m * x - 2^n * y = c`, together with structural checks on the special
//! solution: periodicity of `y0` in `n`, the shift identity for `x0`, and the
//! reduced-residue-system property.
//!
//! Since `gcd(3^m, 2^n) = 1`, every right-hand side is solvable. The special
//! solution of the `c = 1` instance is
//!
//! ```text
//! y0(m, n) = ((3^m + 1) / 2)^(n + 3^(m-1))  (mod 3^m),     m >= 1
//! x0(m, n) = (1 + 2^n * y0(m, n)) / 3^m
//! ```
//!
//! with `y0(0, n) = 1` and `x0(0, n) = 1 + 2^n`. The base `(3^m + 1)/2` is the
//! inverse of 2 modulo `3^m` and a primitive root there, so the exponent is
//! reduced modulo `phi(3^m)` before exponentiation; the literal exponent is
//! astronomically large already for moderate `m`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ceil_div, mod_pow, pow2, pow3, totient_of_3_pow};

/// The instance `3^m * x - 2^n * y = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DioProblem {
    /// Exponent of 3 on the x side.
    pub m: u64,
    /// Exponent of 2 on the y side.
    pub n: u64,
    /// Right-hand side.
    pub c: BigInt,
}

/// The positive solution family of a [`DioProblem`]:
/// `x(k) = c*x0 + 2^n*(t_min + k)`, `y(k) = c*y0 + 3^m*(t_min + k)` for
/// `k >= 0` enumerates exactly the positive solutions in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DioSolution {
    pub x0: BigUint,
    pub y0: BigUint,
    pub t_min: BigInt,
    /// `2^n`, the x increment per unit of the parameter.
    pub x_step: BigUint,
    /// `3^m`, the y increment per unit of the parameter.
    pub y_step: BigUint,
    rhs: BigInt,
}

impl DioSolution {
    /// The k-th positive pair `(x(k), y(k))`.
    pub fn member(&self, k: u64) -> (BigUint, BigUint) {
        let t = &self.t_min + BigInt::from(k);
        let x = &self.rhs * BigInt::from(self.x0.clone()) + BigInt::from(self.x_step.clone()) * &t;
        let y = &self.rhs * BigInt::from(self.y0.clone()) + BigInt::from(self.y_step.clone()) * &t;
        (
            x.to_biguint().expect("x(k) is positive for k >= 0"),
            y.to_biguint().expect("y(k) is positive for k >= 0"),
        )
    }
}

/// The special solution `(x0, y0)` of `3^m * x - 2^n * y = 1`.
///
/// `y0` is the least positive residue, so `1 <= y0 <= 3^m - 1` for `m >= 1`
/// and `y0 = 1` for `m = 0`. Panics if the division defining `x0` is not
/// exact, which would contradict the defining identity.
pub fn special_solution(m: u64, n: u64) -> (BigUint, BigUint) {
    if m == 0 {
        return (BigUint::one() + pow2(n), BigUint::one());
    }
    let modulus = pow3(m);
    let base = BigInt::from((&modulus + BigUint::one()) / BigUint::from(2u32));
    // exponent n + 3^(m-1), reduced mod phi(3^m); the base is a unit mod 3^m
    let exponent = (BigUint::from(n) + pow3(m - 1)) % totient_of_3_pow(m);
    let y0 = mod_pow(&base, &exponent, &modulus);
    assert!(
        !y0.is_zero() && y0 < modulus,
        "special_solution({m}, {n}): y0 out of range; arithmetic bug"
    );
    let numerator = BigUint::one() + pow2(n) * &y0;
    let (x0, r) = numerator.div_mod_floor(&modulus);
    assert!(
        r.is_zero(),
        "special_solution({m}, {n}): 1 + 2^n*y0 not divisible by 3^m; arithmetic bug"
    );
    (x0, y0)
}

/// Smallest `t` with `c*x0 + 2^n*t >= 0` and `c*y0 + 3^m*t >= 0`, by the
/// two-branch ceiling formula: `ceil(|c|*x0 / 2^n)` for `c < 0`, else
/// `ceil(-c*y0 / 3^m)`.
///
/// This is the raw shift used by the realization recurrences, where the
/// boundary solutions with `x = 0` or `y = 0` are meaningful.
pub fn t_min_nonneg(m: u64, n: u64, c: &BigInt) -> BigInt {
    let (x0, y0) = special_solution(m, n);
    t_min_nonneg_with(m, n, c, &x0, &y0)
}

fn t_min_nonneg_with(m: u64, n: u64, c: &BigInt, x0: &BigUint, y0: &BigUint) -> BigInt {
    if c.is_negative() {
        ceil_div(&(c.abs() * BigInt::from(x0.clone())), &pow2(n))
    } else {
        ceil_div(&(-(c * BigInt::from(y0.clone()))), &pow3(m))
    }
}

/// Smallest `t` with `c*x0 + 2^n*t >= 1` and `c*y0 + 3^m*t >= 1`.
///
/// Starts from the ceiling formula of [`t_min_nonneg`] and bumps the value
/// while either family member is still below 1 (which happens when a ceiling
/// argument is an exact integer, e.g. for `c = 0`).
pub fn t_min(m: u64, n: u64, c: &BigInt) -> BigInt {
    let (x0, y0) = special_solution(m, n);
    let x_step = BigInt::from(pow2(n));
    let y_step = BigInt::from(pow3(m));
    let x_base = c * BigInt::from(x0.clone());
    let y_base = c * BigInt::from(y0.clone());
    let mut t = t_min_nonneg_with(m, n, c, &x0, &y0);
    while (&x_base + &x_step * &t) < BigInt::one() || (&y_base + &y_step * &t) < BigInt::one() {
        t += 1;
    }
    t
}

/// Solves the problem: the returned family enumerates all positive solutions
/// in increasing order.
pub fn solve(problem: &DioProblem) -> DioSolution {
    let (x0, y0) = special_solution(problem.m, problem.n);
    DioSolution {
        t_min: t_min(problem.m, problem.n, &problem.c),
        x0,
        y0,
        x_step: pow2(problem.n),
        y_step: pow3(problem.m),
        rhs: problem.c.clone(),
    }
}

/// Result of measuring the period of `n -> y0(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub m: u64,
    pub n_max: u64,
    /// Smallest `p >= 1` with `y0(m, n+p) = y0(m, n)` on the whole window.
    pub period: u64,
    pub totient: BigUint,
    /// One full period of values, `y0(m, 0..period)`.
    pub first_period: Vec<BigUint>,
    /// Whether the window was long enough (`n_max >= 2*phi(3^m)`) to certify
    /// the primitive period.
    pub certified: bool,
}

/// Measures the primitive period of `n -> y0(m, n)` over `n = 0..=n_max`.
///
/// When the window is long enough (`n_max >= 2*phi(3^m)`) the measured period
/// is asserted to equal `phi(3^m)`; a mismatch would falsify the periodicity
/// property and hence signal an arithmetic bug.
pub fn y0_period_check(m: u64, n_max: u64) -> PeriodReport {
    let values: Vec<BigUint> = (0..=n_max).map(|n| special_solution(m, n).1).collect();
    let mut period = n_max + 1;
    'outer: for p in 1..=n_max {
        for i in 0..=(n_max - p) as usize {
            if values[i] != values[i + p as usize] {
                continue 'outer;
            }
        }
        period = p;
        break;
    }
    let totient = totient_of_3_pow(m);
    let certified = BigUint::from(n_max) >= BigUint::from(2u32) * &totient;
    if certified {
        assert_eq!(
            BigUint::from(period),
            totient,
            "y0 period for m = {m} differs from phi(3^m); arithmetic bug"
        );
    }
    let first_period = values[..period.min(n_max + 1) as usize].to_vec();
    PeriodReport {
        m,
        n_max,
        period,
        totient,
        first_period,
        certified,
    }
}

/// Checks the shift identity
/// `x0(m, n + phi(3^m)) = 2^phi(3^m) * x0(m, n) - (2^phi(3^m) - 1)/3^m`.
///
/// The totient must fit in a `u64` shift, which holds for every practically
/// reachable `m`.
pub fn x0_shift_check(m: u64, n: u64) -> bool {
    let phi = totient_of_3_pow(m);
    let phi_u64 = crate::arith::to_u64(&phi).expect("phi(3^m) fits u64 for checkable m");
    let q = pow2(phi_u64);
    let (r, rem) = (&q - BigUint::one()).div_mod_floor(&pow3(m));
    assert!(rem.is_zero(), "3^m divides 2^phi(3^m) - 1 by Euler's theorem");
    let lhs = special_solution(m, n + phi_u64).0;
    let rhs = BigInt::from(q) * BigInt::from(special_solution(m, n).0) - BigInt::from(r);
    BigInt::from(lhs) == rhs
}

/// Checks that `{y0(m, n) : 0 <= n < phi(3^m)}` is exactly the smallest
/// positive reduced residue system modulo `3^m` (with `RRS(1) = {1}`).
pub fn rrs_check(m: u64) -> bool {
    let phi = totient_of_3_pow(m);
    let phi_u64 = crate::arith::to_u64(&phi).expect("phi(3^m) fits u64 for checkable m");
    let mut produced: Vec<BigUint> = (0..phi_u64).map(|n| special_solution(m, n).1).collect();
    produced.sort();
    produced.dedup();
    let modulus = pow3(m);
    let three = BigUint::from(3u32);
    let mut expected = Vec::new();
    let mut r = BigUint::one();
    while r < modulus {
        if !(&r % &three).is_zero() {
            expected.push(r.clone());
        }
        r += BigUint::one();
    }
    if m == 0 {
        expected.push(BigUint::one());
    }
    produced == expected
}

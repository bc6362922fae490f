//! Exact big-integer helpers shared by every module.
//!
//! Everything here is total on its stated domain and panics on violated
//! preconditions or on conditions that would signal an arithmetic bug
//! (an inexact division that number theory says must be exact). No floating
//! point, no silent overflow: powers like `2^D` and `3^S` stay exact for
//! exponents well past 256.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// `2^e` exactly.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << usize::try_from(e).expect("exponent fits usize")
}

/// `3^e` exactly.
pub fn pow3(e: u64) -> BigUint {
    BigUint::from(3u32).pow(u32::try_from(e).expect("exponent fits u32"))
}

/// `base^exponent mod modulus`, in `[0, modulus)`. Requires `modulus >= 1`.
///
/// Negative bases are normalized into the least nonnegative residue first.
pub fn mod_pow(base: &BigInt, exponent: &BigUint, modulus: &BigUint) -> BigUint {
    assert!(!modulus.is_zero(), "mod_pow: modulus must be >= 1");
    let m = BigInt::from(modulus.clone());
    let b = base.mod_floor(&m).to_biguint().expect("mod_floor is nonnegative");
    b.modpow(exponent, modulus)
}

/// Euler's totient of `3^m`, with the convention `phi(1) = 1`.
pub fn totient_of_3_pow(m: u64) -> BigUint {
    if m == 0 {
        BigUint::one()
    } else {
        BigUint::from(2u32) * pow3(m - 1)
    }
}

/// Ceiling division `ceil(num / den)` for `den >= 1`, exact for negative
/// numerators (rounds toward plus infinity, not toward zero).
pub fn ceil_div(num: &BigInt, den: &BigUint) -> BigInt {
    assert!(!den.is_zero(), "ceil_div: denominator must be >= 1");
    let den = BigInt::from(den.clone());
    let (q, r) = num.div_mod_floor(&den);
    if r.is_zero() {
        q
    } else {
        q + BigInt::one()
    }
}

/// The integrality-triangle entry `binom(n-1, m-1) * gcd(m, n) / m` for
/// `1 <= m <= n`; the division is always exact.
///
/// Panics if the division leaves a remainder, which would contradict the
/// integrality lemma and therefore signal a bug in this crate's arithmetic.
pub fn triangle_a(n: u64, m: u64) -> BigUint {
    assert!(1 <= m && m <= n, "triangle_a: need 1 <= m <= n");
    let b = num_integer::binomial(BigUint::from(n - 1), BigUint::from(m - 1));
    let g = BigUint::from(m.gcd(&n));
    let (q, r) = (b * g).div_mod_floor(&BigUint::from(m));
    assert!(
        r.is_zero(),
        "triangle_a({n}, {m}): division by m is not exact; arithmetic bug"
    );
    q
}

/// Convenience for tests and display code: u64 view of a small BigUint.
pub fn to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

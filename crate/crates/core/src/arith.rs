//! Base-p digit combinatorics on non-negative integers.
//!
//! Everything here is total on `u64` except [`nu2`], which rejects zero.

use crate::error::{Error, Result};

/// Base-`p` digits of `r`, least significant first. Zero has no digits.
pub fn digits(mut r: u64, p: u64) -> Vec<u64> {
    assert!(p >= 2, "digit base must be at least 2");
    let mut out = Vec::new();
    while r > 0 {
        out.push(r % p);
        r /= p;
    }
    out
}

/// `a ⊇_p b`: every base-`p` digit of `b` is either zero or equal to the
/// digit of `a` in the same position.
pub fn contains_p(mut a: u64, mut b: u64, p: u64) -> bool {
    assert!(p >= 2, "digit base must be at least 2");
    while b > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd != 0 && bd != ad {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// 2-adic valuation.
pub fn nu2(a: u64) -> Result<u32> {
    if a == 0 {
        return Err(Error::ValuationOfZero);
    }
    Ok(a.trailing_zeros())
}

/// Smallest `L` with `r < p^L`, i.e. the number of significant base-`p` digits.
pub fn cap_l(r: u64, p: u64) -> u32 {
    assert!(p >= 2, "digit base must be at least 2");
    let mut l = 0;
    let mut power: u128 = 1;
    while u128::from(r) >= power {
        power *= u128::from(p);
        l += 1;
    }
    l
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `x mod 2^exp == 0`, computed without overflow for any `exp <= 127`.
pub(crate) fn divisible_by_pow2(x: u128, exp: u32) -> bool {
    x & ((1u128 << exp) - 1) == 0
}

/// `x mod 2^exp`.
pub(crate) fn mod_pow2(x: u128, exp: u32) -> u128 {
    x & ((1u128 << exp) - 1)
}

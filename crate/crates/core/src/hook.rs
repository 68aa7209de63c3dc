//! Odd hook Specht modules in characteristic 2: their decomposition into
//! two-part Young modules and when every summand is uniserial.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{contains_p, digits, divisible_by_pow2, is_prime};
use crate::error::{Error, Result};
use crate::partition::{HookShape, TwoPartPartition};
use crate::structure::{young_series, young_uniserial, CompositionSeries};

/// A pair `(r, b)` tested for being `p`-special (`p = 0` or a prime).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPair {
    pub r: u64,
    pub b: i64,
    pub p: u64,
}

impl SpecialPair {
    pub fn new(r: u64, b: i64, p: u64) -> Result<Self> {
        if p != 0 && !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { r, b, p })
    }

    pub fn is_special(&self) -> bool {
        let (r, b) = (i128::from(self.r), i128::from(self.b));
        match self.p {
            0 => -r <= b && b <= r && (r - b) % 2 == 0,
            2 => binary_signed_sum(self.r, self.b),
            p => signed_digit_sum(self.r, self.b, p),
        }
    }
}

/// Whether `b = Σ p^i t_i` with `|t_i| <= r_i` and `r_i - t_i` even, where
/// `r_i` are the base-`p` digits of `r`. For `p = 0` the condition is
/// `|b| <= r` with `r - b` even.
pub fn is_p_special(r: u64, b: i64, p: u64) -> Result<bool> {
    Ok(SpecialPair::new(r, b, p)?.is_special())
}

/// `p = 2`: every set bit of `r` contributes `±2^i`. Searched from the top
/// bit down, pruning any branch whose remaining target exceeds the total
/// weight of the bits still unassigned.
fn binary_signed_sum(r: u64, b: i64) -> bool {
    let bits: Vec<i128> = (0..64).filter(|i| r >> i & 1 == 1).map(|i| 1i128 << i).collect();
    // below[j] = sum of the j lowest weights
    let mut below = vec![0i128; bits.len() + 1];
    for (j, w) in bits.iter().enumerate() {
        below[j + 1] = below[j] + w;
    }

    fn search(bits: &[i128], below: &[i128], target: i128) -> bool {
        let Some((&w, rest)) = bits.split_last() else {
            return target == 0;
        };
        let room = below[rest.len()];
        [target - w, target + w]
            .into_iter()
            .any(|t| t.abs() <= room && search(rest, below, t))
    }

    let target = i128::from(b);
    target.abs() <= below[bits.len()] && search(&bits, &below, target)
}

/// General prime: walk the digits from the bottom, tracking every value the
/// remaining target can take after dividing out the digits fixed so far.
pub(crate) fn signed_digit_sum(r: u64, b: i64, p: u64) -> bool {
    let p = i128::from(p);
    let mut states = BTreeSet::from([i128::from(b)]);
    for digit in digits(r, p as u64) {
        let digit = i128::from(digit);
        let mut next = BTreeSet::new();
        for &target in &states {
            let mut t = -digit;
            while t <= digit {
                if (target - t).rem_euclid(p) == 0 {
                    next.insert((target - t) / p);
                }
                t += 2;
            }
        }
        if next.is_empty() {
            return false;
        }
        states = next;
    }
    states.contains(&0)
}

/// Maps an odd hook onto the two-part partition `(arm, leg)` with
/// `arm > leg`, replacing a hook whose leg is at least its arm by its
/// conjugate.
pub fn normalize_hook(h: HookShape) -> Result<TwoPartPartition> {
    if h.size().is_multiple_of(2) {
        return Err(Error::EvenHook(h.size()));
    }
    let h = if h.arm() <= h.leg() { h.conjugate() } else { h };
    h.as_two_part()
}

/// `α - 2 + 2δ ⊇_2 δ` for the normalized label `λ` of a hook.
pub fn summand_condition(lam: TwoPartPartition, delta: u64) -> bool {
    contains_p(lam.alpha() - 2 + 2 * delta, delta, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YoungSummand {
    pub delta: u64,
    pub label: TwoPartPartition,
    pub uniserial: bool,
    pub series: Option<CompositionSeries>,
}

/// `S^(a,1^b) = ⊕_δ Y^(λ±δ)` for an odd hook with `λ = (a, b)` normalized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YoungDecomposition {
    pub hook: HookShape,
    pub base: TwoPartPartition,
    pub deltas: Vec<u64>,
    pub summands: Vec<YoungSummand>,
}

impl YoungDecomposition {
    pub fn all_uniserial(&self) -> bool {
        self.summands.iter().all(|s| s.uniserial)
    }
}

pub fn hook_decompose(h: HookShape) -> Result<YoungDecomposition> {
    let base = normalize_hook(h)?;
    let deltas: Vec<u64> = (0..=base.lam2()).filter(|&d| summand_condition(base, d)).collect();
    let summands = deltas
        .iter()
        .map(|&delta| {
            let label = base.shift(delta).expect("delta <= lam2");
            let uniserial = young_uniserial(label);
            let series = if uniserial { young_series(label).ok() } else { None };
            YoungSummand { delta, label, uniserial, series }
        })
        .collect();
    Ok(YoungDecomposition { hook: h, base, deltas, summands })
}

/// Summand labels read off directly from the `p`-special parametrisation:
/// with `a = 2 + 2u, b = 2v + 1` the summands are `Y^(2+2c, 1+2d)`, and with
/// `a = 2u + 1, b = 2v` they are `Y^(1+2c, 2d)`, over all `c >= d >= 0` with
/// `c + d = u + v` and `(c - d, u - v)` 2-special.
pub fn hook_summands_via_special_pairs(h: HookShape) -> Result<Vec<TwoPartPartition>> {
    let base = normalize_hook(h)?;
    let (a, b) = (base.lam1(), base.lam2());
    let a_even = a % 2 == 0;
    let (u, v) = if a_even { ((a - 2) / 2, (b - 1) / 2) } else { ((a - 1) / 2, b / 2) };
    let target = i64::try_from(u - v).map_err(|_| Error::OutOfRange(u))?;
    let mut labels = Vec::new();
    for d in 0..=(u + v) / 2 {
        let c = u + v - d;
        if (SpecialPair { r: c - d, b: target, p: 2 }).is_special() {
            let label = if a_even {
                TwoPartPartition::new(2 + 2 * c, 1 + 2 * d)?
            } else {
                TwoPartPartition::new(1 + 2 * c, 2 * d)?
            };
            labels.push(label);
        }
    }
    labels.sort();
    Ok(labels)
}

/// Outcome of the direct-sum-of-uniserials criterion for an odd hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookVerdict {
    pub ds_uniserial: bool,
    pub nu: u32,
    /// Largest `λ2` allowed for this `ν`.
    pub bound: u64,
    pub alpha: u64,
    pub modulus_exponent: u32,
    /// `α + 2^ν ≡ 0 (mod 2^L)`
    pub congruence: bool,
    /// False when `ν` has no tabulated bound and `bound` is just `λ2`.
    pub bound_known: bool,
}

/// Bound on `λ2` for each `ν >= 1`.
pub fn ds_bound(nu: u32) -> Option<u64> {
    match nu {
        0 => None,
        1 => Some(11),
        2 => Some(21),
        3 => Some(25),
        _ => Some(9),
    }
}

pub fn hook_ds_uniserial(h: HookShape) -> Result<HookVerdict> {
    let lam = normalize_hook(h)?;
    let congruence = young_uniserial(lam);
    let nu = lam.nu();
    let (bound, bound_known) = match ds_bound(nu) {
        Some(b) => (b, true),
        None => (lam.lam2(), false),
    };
    Ok(HookVerdict {
        ds_uniserial: congruence && lam.lam2() <= bound,
        nu,
        bound,
        alpha: lam.alpha(),
        modulus_exponent: lam.modulus_exponent(),
        congruence,
        bound_known,
    })
}

/// `S^(a,1^b)` for odd `n` is indecomposable exactly when `α - 2 ≡ 0 (mod 2^L)`.
pub fn hook_indecomposable(h: HookShape) -> Result<bool> {
    let lam = normalize_hook(h)?;
    Ok(divisible_by_pow2(u128::from(lam.alpha() - 2), lam.modulus_exponent()))
}

//! Composition factors and uniseriality of two-part Specht and Young modules
//! in characteristic 2.
//!
//! Throughout, `α = λ1 - λ2 + 1`, `ν = ν_2(α)` and `L = L_2(λ2)`. When
//! `λ2 = 0` the modulus `2^L` is 1 and every congruence holds.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{contains_p, divisible_by_pow2, mod_pow2, nu2};
use crate::decomp::young_filtration;
use crate::error::{Error, Result};
use crate::partition::{SimpleLabel, TwoPartPartition};

/// Which clause of the uniserial Specht criterion fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SpechtClause {
    /// `α + 2^ν ≡ 0 (mod 2^L)`
    PowerOfTwoOrPlusZero,
    /// `α + 2^ν ≡ 2^(L-1) (mod 2^L)` and `2^(ν+1) + 2^(L-1) > λ2`
    PlusHalfWithBound,
    /// `α - 2^ν ≡ 0 (mod 2^L)`
    MinusZero,
    NotUniserial,
}

impl fmt::Display for SpechtClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpechtClause::PowerOfTwoOrPlusZero => "POWER_OF_TWO_OR_PLUS_ZERO",
            SpechtClause::PlusHalfWithBound => "PLUS_HALF_WITH_BOUND",
            SpechtClause::MinusZero => "MINUS_ZERO",
            SpechtClause::NotUniserial => "NOT_UNISERIAL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpechtUniserialVerdict {
    pub uniserial: bool,
    pub case_tag: SpechtClause,
}

impl From<SpechtClause> for SpechtUniserialVerdict {
    fn from(case_tag: SpechtClause) -> Self {
        Self { uniserial: case_tag != SpechtClause::NotUniserial, case_tag }
    }
}

/// Uniseriality of `S^λ` by the three congruence clauses, checked in order.
pub fn specht_uniserial(lam: TwoPartPartition) -> SpechtUniserialVerdict {
    let alpha = u128::from(lam.alpha());
    let nu = lam.nu();
    let l = lam.modulus_exponent();
    let pow_nu = 1u128 << nu;

    let clause = if divisible_by_pow2(alpha + pow_nu, l) {
        SpechtClause::PowerOfTwoOrPlusZero
    } else if l >= 1
        && mod_pow2(alpha + pow_nu, l) == 1u128 << (l - 1)
        && (1u128 << (nu + 1)) + (1u128 << (l - 1)) > u128::from(lam.lam2())
    {
        SpechtClause::PlusHalfWithBound
    } else if divisible_by_pow2(alpha - pow_nu, l) {
        SpechtClause::MinusZero
    } else {
        SpechtClause::NotUniserial
    };
    clause.into()
}

/// The same question phrased through the positions `a`, `b`, `c` of the
/// first 1, the first later 0 and the first later 1 in the binary expansion
/// of `α`.
pub fn specht_uniserial_original(lam: TwoPartPartition) -> bool {
    let alpha = lam.alpha();
    if alpha.is_power_of_two() {
        return true;
    }
    let lam2 = u128::from(lam.lam2());
    let a = lam.nu();
    let b = nu2(alpha + (1 << a)).expect("positive");
    let c = nu2(alpha - (1 << a)).expect("alpha is not a power of two");
    (c > b && (1u128 << c) > lam2) || (c < b && (1u128 << b) + (1u128 << c) > lam2)
}

/// Composition factors `D^(λ±e)` keyed by the shift `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorMultiset {
    pub base: TwoPartPartition,
    entries: BTreeMap<u64, u64>,
}

impl FactorMultiset {
    pub fn empty(base: TwoPartPartition) -> Self {
        Self { base, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, shift: u64, multiplicity: u64) {
        if multiplicity > 0 {
            *self.entries.entry(shift).or_default() += multiplicity;
        }
    }

    pub fn multiplicity(&self, shift: u64) -> u64 {
        self.entries.get(&shift).copied().unwrap_or(0)
    }

    /// `(shift, multiplicity)` pairs in increasing shift.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&e, &m)| (e, m))
    }

    pub fn shifts(&self) -> Vec<u64> {
        self.entries.keys().copied().collect()
    }

    /// Total number of composition factors counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// `{e : 0 <= e <= λ2, α + 2e ⊇_2 e, λ±e 2-regular}`, each with multiplicity 1.
pub fn specht_factors(lam: TwoPartPartition) -> FactorMultiset {
    let alpha = lam.alpha();
    let mut out = FactorMultiset::empty(lam);
    for e in 0..=lam.lam2() {
        if contains_p(alpha + 2 * e, e, 2) && lam.shift(e).expect("e <= lam2").is_2_regular() {
            out.add(e, 1);
        }
    }
    out
}

/// Composition factors of `Y^λ`, summed over its Specht layers and written
/// relative to `λ`.
pub fn young_factors(lam: TwoPartPartition) -> FactorMultiset {
    let mut out = FactorMultiset::empty(lam);
    for (d, layer) in young_filtration(lam).shifts.iter().zip(young_filtration(lam).layers()) {
        for (e, m) in specht_factors(layer).iter() {
            out.add(d + e, m);
        }
    }
    out
}

/// `S^λ = D^λ` exactly when `α ≡ 0 (mod 2^L)`.
pub fn specht_simple(lam: TwoPartPartition) -> Result<bool> {
    if !lam.is_2_regular() {
        return Err(Error::SingularLabel);
    }
    Ok(divisible_by_pow2(u128::from(lam.alpha()), lam.modulus_exponent()))
}

/// `Y^λ` is uniserial exactly when `α + 2^ν ≡ 0 (mod 2^L)`.
pub fn young_uniserial(lam: TwoPartPartition) -> bool {
    divisible_by_pow2(u128::from(lam.alpha()) + (1u128 << lam.nu()), lam.modulus_exponent())
}

/// The unique composition series of a uniserial module, socle first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSeries {
    pub base: TwoPartPartition,
    pub labels: Vec<SimpleLabel>,
}

impl CompositionSeries {
    pub fn shifts(&self) -> Vec<u64> {
        self.labels.iter().map(|l| l.shift).collect()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.labels.len() == 1
    }

    /// The series' labels collected into a multiset.
    pub fn factors(&self) -> FactorMultiset {
        let mut out = FactorMultiset::empty(self.base);
        for l in &self.labels {
            out.add(l.shift, 1);
        }
        out
    }
}

/// Composition series of a uniserial `Y^λ`: `S^λ` read upward from its
/// socle (`2^ν, 2^(ν+1), .., 2^(L-1)`, then `D^λ`), followed by the mirror
/// image of its radical.
pub fn young_series(lam: TwoPartPartition) -> Result<CompositionSeries> {
    if !young_uniserial(lam) {
        return Err(Error::NotUniserial);
    }
    let label = |shift| SimpleLabel::new(lam, shift).expect("series shift within lam2");
    if !lam.is_2_regular() {
        // only (1,1) survives the criterion; both layers are D^(2)
        return Ok(CompositionSeries { base: lam, labels: vec![label(1), label(1)] });
    }
    let nu = lam.nu();
    let l = lam.modulus_exponent();
    let mut shifts: Vec<u64> = (nu..l).map(|j| 1u64 << j).collect();
    let radical = shifts.clone();
    shifts.push(0);
    shifts.extend(radical.into_iter().rev());
    Ok(CompositionSeries { base: lam, labels: shifts.into_iter().map(label).collect() })
}

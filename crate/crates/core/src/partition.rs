//! Two-part partitions, hook shapes and simple-module labels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{cap_l, nu2};
use crate::error::{Error, Result};

/// Largest supported part or size.
pub const MAX_VALUE: u64 = i64::MAX as u64;

/// A partition `(lam1, lam2)` with `lam1 >= lam2 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(u64, u64)", into = "(u64, u64)")]
pub struct TwoPartPartition {
    lam1: u64,
    lam2: u64,
}

impl TwoPartPartition {
    pub fn new(lam1: u64, lam2: u64) -> Result<Self> {
        if lam1 < lam2 {
            return Err(Error::InvalidPartition(lam1, lam2));
        }
        match lam1.checked_add(lam2) {
            Some(n) if n <= MAX_VALUE => Ok(Self { lam1, lam2 }),
            _ => Err(Error::OutOfRange(lam1.max(lam2))),
        }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u64) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn lam1(&self) -> u64 {
        self.lam1
    }

    pub fn lam2(&self) -> u64 {
        self.lam2
    }

    pub fn size(&self) -> u64 {
        self.lam1 + self.lam2
    }

    /// `lam1 - lam2 + 1`, always at least 1.
    pub fn alpha(&self) -> u64 {
        self.lam1 - self.lam2 + 1
    }

    /// 2-adic valuation of [`alpha`](Self::alpha).
    pub fn nu(&self) -> u32 {
        nu2(self.alpha()).expect("alpha is positive")
    }

    /// Number of binary digits of `lam2`; congruences are taken mod `2^L`.
    pub fn modulus_exponent(&self) -> u32 {
        cap_l(self.lam2, 2)
    }

    /// `λ ± d = (lam1 + d, lam2 - d)`.
    pub fn shift(&self, d: u64) -> Result<Self> {
        if d > self.lam2 {
            return Err(Error::ShiftExceedsSecondPart { shift: d, lam2: self.lam2 });
        }
        Ok(Self { lam1: self.lam1 + d, lam2: self.lam2 - d })
    }

    /// The only 2-singular two-part shapes are `(k, k)` with `k >= 1`.
    pub fn is_2_regular(&self) -> bool {
        !(self.lam1 == self.lam2 && self.lam2 >= 1)
    }

    /// Dominance order; for two-part partitions of the same size this
    /// reduces to comparing first parts.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::IncomparableSizes(self.size(), other.size()));
        }
        Ok(self.lam1 >= other.lam1)
    }

    /// Iterates over all two-part partitions of `n`, by increasing `lam2`.
    pub fn all_of_size(n: u64) -> impl Iterator<Item = Self> {
        (0..=n / 2).map(move |lam2| Self { lam1: n - lam2, lam2 })
    }
}

impl From<TwoPartPartition> for (u64, u64) {
    fn from(p: TwoPartPartition) -> Self {
        (p.lam1, p.lam2)
    }
}

impl TryFrom<(u64, u64)> for TwoPartPartition {
    type Error = Error;

    fn try_from((lam1, lam2): (u64, u64)) -> Result<Self> {
        Self::new(lam1, lam2)
    }
}

impl fmt::Display for TwoPartPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lam1, self.lam2)
    }
}

fn parse_nat(s: &str, whole: &str) -> Result<u64> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(whole.to_string()));
    }
    s.parse().map_err(|_| Error::Parse(whole.to_string()))
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t)
}

/// Accepts `l1,l2`, `(l1,l2)` or a single part `n`.
impl FromStr for TwoPartPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_parens(s);
        let parts: Vec<&str> = inner.split(',').collect();
        match parts.as_slice() {
            [n] => Self::row(parse_nat(n, s)?),
            [a, b] => Self::new(parse_nat(a, s)?, parse_nat(b, s)?),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// The hook partition `(arm, 1^leg)` of `arm + leg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookShape {
    arm: u64,
    leg: u64,
}

impl HookShape {
    pub fn new(arm: u64, leg: u64) -> Result<Self> {
        if arm == 0 {
            return Err(Error::InvalidHook);
        }
        match arm.checked_add(leg) {
            Some(n) if n <= MAX_VALUE => Ok(Self { arm, leg }),
            _ => Err(Error::OutOfRange(arm.max(leg))),
        }
    }

    pub fn arm(&self) -> u64 {
        self.arm
    }

    pub fn leg(&self) -> u64 {
        self.leg
    }

    pub fn size(&self) -> u64 {
        self.arm + self.leg
    }

    /// The conjugate hook `(leg + 1, 1^(arm - 1))`.
    pub fn conjugate(&self) -> Self {
        Self { arm: self.leg + 1, leg: self.arm - 1 }
    }

    /// `(arm, leg)` read as a two-part partition, if `arm >= leg`.
    pub fn as_two_part(&self) -> Result<TwoPartPartition> {
        TwoPartPartition::new(self.arm, self.leg)
    }
}

impl fmt::Display for HookShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.leg == 0 {
            write!(f, "({})", self.arm)
        } else {
            write!(f, "({},1^{})", self.arm, self.leg)
        }
    }
}

/// Accepts `a,1^b`, `(a,1^b)`, or bare `a` for the one-row hook.
impl FromStr for HookShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_parens(s);
        let parts: Vec<&str> = inner.split(',').collect();
        match parts.as_slice() {
            [a] => Self::new(parse_nat(a, s)?, 0),
            [a, leg] => {
                let leg = leg.trim();
                let b = match leg.split_once('^') {
                    Some((one, b)) if one.trim() == "1" => parse_nat(b, s)?,
                    None if leg == "1" => 1,
                    _ => return Err(Error::Parse(s.to_string())),
                };
                Self::new(parse_nat(a, s)?, b)
            }
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// The simple module `D^(base ± shift)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleLabel {
    pub base: TwoPartPartition,
    pub shift: u64,
}

impl SimpleLabel {
    pub fn new(base: TwoPartPartition, shift: u64) -> Result<Self> {
        base.shift(shift)?;
        Ok(Self { base, shift })
    }

    pub fn partition(&self) -> TwoPartPartition {
        self.base.shift(self.shift).expect("validated on construction")
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.partition())
    }
}

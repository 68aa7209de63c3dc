//! Multiplicities `d(α, β) = [∇(μ) : L(λ)]` for two-part partitions and the
//! Specht filtration of a two-part Young module.
//!
//! Here `α = μ1 - μ2 + 1` and `β = λ1 - λ2 + 1`. Both are computed twice: by
//! the halving recursion and by the digit-containment closed form. The
//! recursion is kept as the reference the closed form is checked against.

use serde::{Deserialize, Serialize};

use crate::arith::contains_p;
use crate::error::{Error, Result};
use crate::partition::TwoPartPartition;

fn check_args(alpha: u64, beta: u64) -> Result<()> {
    if alpha == 0 || beta == 0 {
        return Err(Error::NonPositiveArgument);
    }
    if alpha % 2 != beta % 2 {
        return Err(Error::ParityMismatch);
    }
    Ok(())
}

/// `d(α, β)` by iterating the four-case halving recursion down to `d(1, 1)`.
///
/// `β > α` yields 0.
pub fn d_recursive(alpha: u64, beta: u64) -> Result<u64> {
    check_args(alpha, beta)?;
    let (mut a, mut b) = (alpha, beta);
    loop {
        if b > a {
            return Ok(0);
        }
        if a == 1 {
            // b <= a forces b == 1
            return Ok(1);
        }
        let congruent = a % 4 == b % 4;
        match (a % 2 == 1, congruent) {
            (true, true) => (a, b) = (a.div_ceil(2), b.div_ceil(2)),
            (true, false) => (a, b) = ((a - 1) / 2, b.div_ceil(2)),
            (false, true) => (a, b) = (a / 2, b / 2),
            (false, false) => return Ok(0),
        }
    }
}

/// `d(α, β) = 1` iff `α + β - 2 ⊇_2 α - β`.
pub fn d_closed(alpha: u64, beta: u64) -> Result<u64> {
    check_args(alpha, beta)?;
    if beta > alpha {
        return Ok(0);
    }
    Ok(u64::from(contains_p(alpha + beta - 2, alpha - beta, 2)))
}

/// Specht layers `S^(λ±d)` of `Y^λ`, bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpechtFiltration {
    pub base: TwoPartPartition,
    pub shifts: Vec<u64>,
}

impl SpechtFiltration {
    pub fn layers(&self) -> impl Iterator<Item = TwoPartPartition> + '_ {
        self.shifts.iter().map(|&d| self.base.shift(d).expect("filtration shift within lam2"))
    }
}

/// All `0 <= d <= λ2` with `α - 1 + d ⊇_2 d`, ascending.
pub fn young_filtration(lam: TwoPartPartition) -> SpechtFiltration {
    let a1 = lam.alpha() - 1;
    let shifts = (0..=lam.lam2()).filter(|&d| contains_p(a1 + d, d, 2)).collect();
    SpechtFiltration { base: lam, shifts }
}

//! Exhaustive cross-checks between independent routes to the same answer.
//!
//! Each suite scans every shape up to a bound, in parallel, and reports the
//! number of checks made together with the first counterexample in scan
//! order.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::{d_closed, d_recursive, young_filtration};
use crate::hook::{
    hook_decompose, hook_ds_uniserial, hook_indecomposable, hook_summands_via_special_pairs,
    summand_condition, SpecialPair,
};
use crate::arith::contains_p;
use crate::partition::{HookShape, TwoPartPartition};
use crate::structure::{
    specht_factors, specht_simple, specht_uniserial, specht_uniserial_original, young_factors,
    young_series, young_uniserial, FactorMultiset,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    ClosedForm,
    SpecialPairs,
    Classification,
    Series,
    All,
}

impl Suite {
    pub fn default_bound(self) -> u64 {
        match self {
            Suite::ClosedForm => 512,
            Suite::SpecialPairs => 600,
            Suite::Classification | Suite::Series | Suite::All => 400,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub bound: u64,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} (bound {}, {} checks)", self.suite, self.bound, self.checked),
            Some(c) => write!(f, "FAIL {} (bound {}): {}", self.suite, self.bound, c),
        }
    }
}

/// Counts checks and remembers the first failure within one slice of a scan.
#[derive(Default)]
struct Tally {
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }
}

fn scan<F>(suite: &'static str, bound: u64, items: Vec<u64>, f: F) -> SuiteReport
where
    F: Fn(u64, &mut Tally) + Sync + Send,
{
    let tallies: Vec<Tally> = items
        .into_par_iter()
        .map(|n| {
            let mut t = Tally::default();
            f(n, &mut t);
            t
        })
        .collect();
    SuiteReport {
        suite,
        bound,
        checked: tallies.iter().map(|t| t.checked).sum(),
        counterexample: tallies.into_iter().find_map(|t| t.failure),
    }
}

fn odd_hooks(n: u64) -> impl Iterator<Item = HookShape> {
    (1..=n).map(move |arm| HookShape::new(arm, n - arm).expect("arm >= 1"))
}

/// Uniseriality of `Y^λ` decided from composition factors alone: `S^λ`
/// uniserial and `[Y^λ] = 2[S^λ] - [D^λ]`. The 2-singular shapes `(k, k)`
/// are uniserial only for `k = 1`.
pub fn young_uniserial_via_factors(lam: TwoPartPartition) -> bool {
    if !lam.is_2_regular() {
        return lam.lam1() == 1;
    }
    if !specht_uniserial(lam).uniserial {
        return false;
    }
    let mut expected = FactorMultiset::empty(lam);
    for (e, m) in specht_factors(lam).iter() {
        expected.add(e, if e == 0 { 2 * m - 1 } else { 2 * m });
    }
    young_factors(lam) == expected
}

pub fn closed_form(bound: u64) -> SuiteReport {
    scan("closed-form", bound, (1..=bound).collect(), |alpha, t| {
        for beta in (1..=alpha).filter(|b| b % 2 == alpha % 2) {
            let (r, c) = (d_recursive(alpha, beta), d_closed(alpha, beta));
            t.check(r == c, || format!("d({alpha},{beta}): recursion {r:?}, closed form {c:?}"));
        }
    })
}

pub fn special_pairs(bound: u64) -> SuiteReport {
    let odd: Vec<u64> = (1..=bound).filter(|n| n % 2 == 1).collect();
    scan("special-pairs", bound, odd, |n, t| {
        for h in odd_hooks(n) {
            let dec = hook_decompose(h).expect("odd hook");
            let lam = dec.base;
            if h.arm() > h.leg() {
                let half = (lam.alpha() - 2) / 2;
                for delta in 0..=lam.lam2() {
                    let special =
                        SpecialPair { r: half + delta, b: half as i64, p: 2 }.is_special();
                    let contained = summand_condition(lam, delta);
                    t.check(special == contained, || {
                        format!("{h} δ={delta}: special {special}, containment {contained}")
                    });
                }
                let indecomposable = hook_indecomposable(h).expect("odd hook");
                t.check(indecomposable == (dec.deltas.len() == 1), || {
                    format!("{h}: {} summands, indecomposable criterion {indecomposable}", dec.deltas.len())
                });
            }
            let direct: Vec<_> = dec.summands.iter().map(|s| s.label).collect();
            let via = hook_summands_via_special_pairs(h).expect("odd hook");
            t.check(direct == via, || format!("{h}: summands {direct:?} vs {via:?}"));
        }
    })
}

pub fn classification(bound: u64) -> SuiteReport {
    scan("classification", bound, (0..=bound).collect(), |n, t| {
        for lam in TwoPartPartition::all_of_size(n) {
            let young = young_uniserial(lam);
            let specht = specht_uniserial(lam).uniserial;
            let original = specht_uniserial_original(lam);
            t.check(specht == original, || {
                format!("S^{lam}: congruence form {specht}, digit-position form {original}")
            });
            let by_factors = young_uniserial_via_factors(lam);
            t.check(young == by_factors, || {
                format!("Y^{lam}: congruence {young}, factor criterion {by_factors}")
            });
            t.check(!young || specht, || format!("Y^{lam} uniserial but S^{lam} is not"));
            if lam.is_2_regular() {
                let alpha = lam.alpha();
                let witness = young_filtration(lam)
                    .shifts
                    .into_iter()
                    .find(|&d| !contains_p(alpha + 2 * d, d, 2));
                t.check(witness.is_none() || !young, || {
                    format!("Y^{lam} uniserial despite foreign layer {witness:?}")
                });
            }
        }
        if n % 2 == 1 {
            for h in odd_hooks(n).filter(|h| h.arm() > h.leg()) {
                let verdict = hook_ds_uniserial(h).expect("odd hook").ds_uniserial;
                let direct = hook_decompose(h).expect("odd hook").all_uniserial();
                t.check(verdict == direct, || {
                    format!("S^{h}: closed criterion {verdict}, summand check {direct}")
                });
            }
        }
    })
}

pub fn series(bound: u64) -> SuiteReport {
    scan("series", bound, (0..=bound).collect(), |n, t| {
        for lam in TwoPartPartition::all_of_size(n) {
            let Ok(series) = young_series(lam) else {
                t.check(!young_uniserial(lam), || format!("Y^{lam}: series missing"));
                continue;
            };
            let shifts = series.shifts();
            t.check(series.factors() == young_factors(lam), || {
                format!("Y^{lam}: series {shifts:?} disagrees with composition factors")
            });
            if lam.is_2_regular() {
                let palindrome = shifts.iter().eq(shifts.iter().rev());
                t.check(palindrome && shifts.len() % 2 == 1 && shifts[shifts.len() / 2] == 0, || {
                    format!("Y^{lam}: series {shifts:?} is not an odd palindrome around D^λ")
                });
                if specht_simple(lam) == Ok(true) {
                    t.check(series.is_simple(), || format!("Y^{lam}: simple Specht but series {shifts:?}"));
                }
            } else {
                t.check(lam.lam1() == 1 && shifts == [1, 1], || format!("Y^{lam}: series {shifts:?}"));
            }
        }
    })
}

pub fn run(suite: Suite, bound: u64) -> Vec<SuiteReport> {
    match suite {
        Suite::ClosedForm => vec![closed_form(bound)],
        Suite::SpecialPairs => vec![special_pairs(bound)],
        Suite::Classification => vec![classification(bound)],
        Suite::Series => vec![series(bound)],
        Suite::All => vec![closed_form(bound), special_pairs(bound), classification(bound), series(bound)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_small_bounds() {
        for report in run(Suite::All, 60) {
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn factor_criterion_examples() {
        let p = |a, b| TwoPartPartition::new(a, b).unwrap();
        assert!(young_uniserial_via_factors(p(48, 21)));
        assert!(young_uniserial_via_factors(p(1, 1)));
        assert!(!young_uniserial_via_factors(p(2, 2)));
        assert!(!young_uniserial_via_factors(p(29, 8)));
    }

    #[test]
    fn report_formatting() {
        let r = SuiteReport { suite: "x", bound: 3, checked: 7, counterexample: None };
        assert_eq!(r.to_string(), "PASS x (bound 3, 7 checks)");
    }
}

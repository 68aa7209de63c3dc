//! Exit criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use spechtlab::decomp::{d_closed, d_recursive};
use spechtlab::hook::{
    hook_decompose, hook_ds_uniserial, hook_summands_via_special_pairs, is_p_special,
};
use spechtlab::render::decomposition_diagrams;
use spechtlab::structure::{
    specht_factors, specht_uniserial, young_factors, young_series, young_uniserial, FactorMultiset,
};
use spechtlab::{Error, HookShape, TwoPartPartition};

fn report(id: &str, ok: bool, detail: String) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {id}: {detail}");
    assert!(ok, "criterion {id} failed: {detail}");
}

fn within(id: &str, start: Instant, limit: Duration) -> (bool, String) {
    let elapsed = start.elapsed();
    (elapsed < limit, format!("{id} took {elapsed:?} (limit {limit:?})"))
}

fn hook(a: u64, b: u64) -> HookShape {
    HookShape::new(a, b).unwrap()
}

/// `(δ, ambient chain)` for every summand.
fn chains(arm: u64, leg: u64) -> Vec<(u64, Vec<u64>)> {
    let dec = hook_decompose(hook(arm, leg)).unwrap();
    assert!(dec.all_uniserial());
    dec.deltas.iter().copied().zip(decomposition_diagrams(&dec).unwrap().iter().map(|d| d.labels())).collect()
}

fn check_table(arm: u64, leg: u64, expected: &[(u64, &[u64])]) -> (bool, String) {
    let start = Instant::now();
    let got = chains(arm, leg);
    let (fast, timing) = within("decomposition", start, Duration::from_secs(1));
    let want_deltas: Vec<u64> = expected.iter().map(|(d, _)| *d).collect();
    let got_deltas: Vec<u64> = got.iter().map(|(d, _)| *d).collect();
    let mut problems = Vec::new();
    for (delta, chain) in expected {
        match got.iter().find(|(d, _)| d == delta) {
            Some((_, c)) if c == chain => {}
            Some((_, c)) => problems.push(format!("δ={delta}: chain {c:?}, expected {chain:?}")),
            None => problems.push(format!("δ={delta} missing")),
        }
    }
    for (delta, chain) in got.iter().filter(|(d, _)| !want_deltas.contains(d)) {
        problems.push(format!("unexpected summand δ={delta} with chain {chain:?}"));
    }
    if got_deltas.len() != 7 {
        problems.push(format!("{} summands instead of 7", got_deltas.len()));
    }
    let ok = fast && problems.is_empty() && got_deltas == want_deltas;
    let detail = if problems.is_empty() {
        format!("S^({arm},1^{leg}): δ = {got_deltas:?}, all chains match; {timing}")
    } else {
        format!("S^({arm},1^{leg}): δ = {got_deltas:?}; {}; {timing}", problems.join("; "))
    };
    (ok, detail)
}

#[test]
fn criterion_1_first_table() {
    let expected: &[(u64, &[u64])] = &[
        (0, &[4, 8, 16, 0, 16, 8, 4]),
        (2, &[2]),
        (6, &[14, 6, 14]),
        (8, &[12, 16, 8, 16, 12]),
        (10, &[10]),
        (16, &[20, 16, 20]),
        (18, &[18]),
    ];
    let (ok, detail) = check_table(48, 21, expected);
    report("1 (48,1^21)", ok, detail);
}

#[test]
fn criterion_1_second_table() {
    // ±2 and ±4 carry the computed ambient labels (2 and 4) where printed
    // tables show 0.
    let expected: &[(u64, &[u64])] = &[
        (0, &[8, 16, 0, 16, 8]),
        (2, &[6, 10, 18, 2, 18, 10, 6]),
        (4, &[4]),
        (10, &[14, 18, 10, 18, 14]),
        (12, &[12]),
        (18, &[22, 18, 22]),
        (20, &[20]),
    ];
    let got = chains(48, 25);
    let middle = got.iter().find(|(d, _)| *d == 2).map(|(_, c)| c[3]);
    let sole = got.iter().find(|(d, _)| *d == 4).map(|(_, c)| c.clone());
    assert_eq!(middle, Some(2), "middle edge of ±2 in ambient convention");
    assert_ne!(middle, Some(0));
    assert_eq!(sole, Some(vec![4]), "sole edge of ±4 in ambient convention");
    let (ok, detail) = check_table(48, 25, expected);
    report("1 (48,1^25)", ok, detail);
}

#[test]
fn criterion_2_closed_form() {
    let start = Instant::now();
    let mut pairs = 0u64;
    let mut mismatches = Vec::new();
    for alpha in 1..=512u64 {
        for beta in (1..=alpha).filter(|b| b % 2 == alpha % 2) {
            pairs += 1;
            if d_recursive(alpha, beta).unwrap() != d_closed(alpha, beta).unwrap() {
                mismatches.push((alpha, beta));
            }
        }
    }
    let (fast, timing) = within("scan", start, Duration::from_secs(5));
    report(
        "2",
        fast && mismatches.is_empty(),
        format!("{pairs} pairs, {} mismatches {:?}; {timing}", mismatches.len(), mismatches.first()),
    );
}

/// Uniseriality of `Y^λ` from composition factors: `S^λ` uniserial and
/// `[Y^λ] = 2[S^λ] - [D^λ]`; for `(k, k)` only `k = 1`.
fn direct_young_criterion(lam: TwoPartPartition) -> bool {
    if !lam.is_2_regular() {
        return lam.lam1() == 1;
    }
    if !specht_uniserial(lam).uniserial {
        return false;
    }
    let mut expected = FactorMultiset::empty(lam);
    for (e, m) in specht_factors(lam).iter() {
        expected.add(e, 2 * m - u64::from(e == 0));
    }
    young_factors(lam) == expected
}

#[test]
fn criterion_3_young_classification() {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for n in 0..=1000u64 {
        for lam in TwoPartPartition::all_of_size(n) {
            checked += 1;
            if young_uniserial(lam) != direct_young_criterion(lam) {
                mismatches.push(lam);
            }
        }
    }
    let (fast, timing) = within("scan", start, Duration::from_secs(30));
    report(
        "3",
        fast && mismatches.is_empty(),
        format!("{checked} partitions, {} mismatches {:?}; {timing}", mismatches.len(), mismatches.first()),
    );
}

#[test]
fn criterion_4_hook_classification() {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for n in (1..=400u64).step_by(2) {
        for leg in 0..=(n - 1) / 2 {
            let h = hook(n - leg, leg);
            checked += 1;
            let verdict = hook_ds_uniserial(h).unwrap().ds_uniserial;
            let summands = hook_decompose(h).unwrap().summands.iter().all(|s| young_uniserial(s.label));
            if verdict != summands {
                mismatches.push(h);
            }
        }
    }
    let (fast, timing) = within("scan", start, Duration::from_secs(30));
    report(
        "4",
        fast && mismatches.is_empty(),
        format!("{checked} hooks, {} mismatches {:?}; {timing}", mismatches.len(), mismatches.first()),
    );
}

#[test]
fn criterion_5_special_pairs() {
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for n in (1..=600u64).step_by(2) {
        for leg in 0..=(n - 1) / 2 {
            let (arm, h) = (n - leg, hook(n - leg, leg));
            let alpha = arm - leg + 1;
            for delta in 0..=leg {
                checked += 1;
                // summand condition: ((α - 2 + 2δ)/2, (α - 2)/2) is 2-special
                let special = is_p_special((alpha - 2 + 2 * delta) / 2, ((alpha - 2) / 2) as i64, 2).unwrap();
                let contained = (alpha - 2 + 2 * delta) & delta == delta;
                if special != contained {
                    mismatches.push(format!("{h} δ={delta}"));
                }
            }
            let via: BTreeSet<_> = hook_summands_via_special_pairs(h).unwrap().into_iter().collect();
            let direct: BTreeSet<_> = hook_decompose(h).unwrap().summands.iter().map(|s| s.label).collect();
            if via != direct {
                mismatches.push(format!("{h}: summand sets differ"));
            }
        }
    }
    report(
        "5",
        mismatches.is_empty(),
        format!("{checked} (hook, δ) pairs, {} mismatches {:?}", mismatches.len(), mismatches.first()),
    );
}

#[test]
fn criterion_6_indecomposable_hooks() {
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for n in (1..=600u64).step_by(2) {
        for leg in 0..=(n - 1) / 2 {
            let arm = n - leg;
            let modulus = 1u64 << (64 - leg.leading_zeros());
            let murphy = (arm - leg - 1) % modulus == 0;
            checked += 1;
            if (hook_decompose(hook(arm, leg)).unwrap().deltas.len() == 1) != murphy {
                mismatches.push((arm, leg));
            }
        }
    }
    let mut even_ok = true;
    for n in (2..=200u64).step_by(2) {
        for arm in 1..=n {
            even_ok &= hook_decompose(hook(arm, n - arm)) == Err(Error::EvenHook(n));
        }
    }
    report(
        "6",
        mismatches.is_empty() && even_ok,
        format!(
            "{checked} odd hooks, {} mismatches {:?}; even hooks rejected: {even_ok}",
            mismatches.len(),
            mismatches.first()
        ),
    );
}

#[test]
fn criterion_7_series_structure() {
    let mut checked = 0u64;
    let mut problems = Vec::new();
    for n in 0..=1000u64 {
        for lam in TwoPartPartition::all_of_size(n).filter(|l| l.is_2_regular() && young_uniserial(*l)) {
            checked += 1;
            let s = young_series(lam).unwrap().shifts();
            let mut from_series = FactorMultiset::empty(lam);
            s.iter().for_each(|&e| from_series.add(e, 1));
            let palindrome = s.iter().eq(s.iter().rev());
            if !palindrome || s.len().is_multiple_of(2) || from_series != young_factors(lam) {
                problems.push(format!("{lam}: {s:?}"));
            }
        }
    }
    let one_one = young_series(TwoPartPartition::new(1, 1).unwrap()).unwrap();
    let d2 = TwoPartPartition::new(2, 0).unwrap();
    let one_one_ok = one_one.labels.len() == 2 && one_one.labels.iter().all(|l| l.partition() == d2);
    let two_two = young_series(TwoPartPartition::new(2, 2).unwrap());
    let two_two_ok = two_two == Err(Error::NotUniserial);
    report(
        "7",
        problems.is_empty() && one_one_ok && two_two_ok,
        format!(
            "{checked} uniserial 2-regular series, {} problems {:?}; (1,1) -> [D^(2), D^(2)]: {one_one_ok}; (2,2) rejected: {two_two_ok}",
            problems.len(),
            problems.first()
        ),
    );
}

#[test]
fn criterion_8_maximal_summand_count() {
    let mut max = 0usize;
    let mut attained: BTreeSet<(u32, u64)> = BTreeSet::new();
    for n in (1..=400u64).step_by(2) {
        for leg in 0..=(n - 1) / 2 {
            let h = hook(n - leg, leg);
            if !hook_ds_uniserial(h).unwrap().ds_uniserial {
                continue;
            }
            let lam = h.as_two_part().unwrap();
            let count = hook_decompose(h).unwrap().deltas.len();
            if count > max {
                max = count;
                attained.clear();
            }
            if count == max {
                attained.insert((lam.nu(), leg));
            }
        }
    }
    let expected: BTreeSet<(u32, u64)> = (18..=21).map(|l| (2, l)).chain((20..=25).map(|l| (3, l))).collect();
    report(
        "8",
        max == 7 && attained == expected,
        format!("maximum summand count {max}, attained at (nu, lam2) in {attained:?}; expected 7 at {expected:?}"),
    );
}

use super::plan::TestPlan;
use super::report::{CheckKind, SimReport, Verdict};
use super::simulation::check_simulation;
use crate::encoding::{Encoding, FinitePermutation};
use crate::error::{Error, Result};
use crate::model::Model;

/// Attached to every report of a probe in which nothing verified.
pub const FAMILY_RELATIVE: &str = "refutation relative to family only";

/// Runs [`check_simulation`] for every encoding in `family`.
pub fn probe_encodings(a: &Model, b: &Model, family: &[Encoding], plan: &TestPlan) -> Result<Vec<SimReport>> {
    if family.is_empty() {
        return Err(Error::InvalidPlan("empty encoding family".into()));
    }
    let mut reports = family.iter().map(|e| check_simulation(a, b, e, plan)).collect::<Result<Vec<_>>>()?;
    let none_verified = reports.iter().all(|r| r.aggregate != Verdict::Verified);
    for r in &mut reports {
        r.claim.check = CheckKind::Probe;
        if none_verified {
            r.notes.push(FAMILY_RELATIVE.to_string());
        }
    }
    Ok(reports)
}

/// `stripe(d, r)` for `1 ≤ d ≤ max_d`, `r < d`.
pub fn stripe_family(max_d: u64) -> Vec<Encoding> {
    (1..=max_d).flat_map(|d| (0..d).map(move |r| Encoding::stripe(d, r).expect("r < d"))).collect()
}

/// Every permutation of `[0, k)` (identity elsewhere), in lexicographic
/// order of image lists.
pub fn permutation_family(k: usize) -> Vec<Encoding> {
    let mut images: Vec<u64> = (0..k as u64).collect();
    let mut out = Vec::new();
    loop {
        out.push(Encoding::table(FinitePermutation::from_images(&images).expect("a permutation")));
        // next lexicographic permutation
        let Some(i) = (1..images.len()).rev().find(|&i| images[i - 1] < images[i]) else { break };
        let j = (i..images.len()).rev().find(|&j| images[j] > images[i - 1]).expect("exists");
        images.swap(i - 1, j);
        images[i..].reverse();
    }
    out
}

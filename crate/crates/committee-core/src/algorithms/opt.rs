//! Brute-force optimal committees for small instances.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::profile::{ApprovalProfile, Committee};

/// Enumerations above this subset count are refused.
const ENUMERATION_LIMIT: u64 = 1_000_000;

/// `C(m, k)` unless it exceeds `cap`.
fn binomial_capped(m: u64, k: u64, cap: u64) -> Option<u64> {
    debug_assert!(k <= m);
    let k = k.min(m - k);
    let mut value = 1u64;
    for j in 1..=k {
        value = value.saturating_mul(m - k + j) / j;
        if value > cap {
            return None;
        }
    }
    Some(value)
}

struct Search<'a> {
    masks: &'a [Vec<u64>],
    words: usize,
    size: usize,
    matroid: Option<&'a dyn Matroid>,
    best: Option<(u32, Vec<u32>)>,
}

impl Search<'_> {
    fn run(&mut self, chosen: &mut Vec<u32>, levels: &mut [Vec<u64>], start: usize) {
        let depth = chosen.len();
        if depth == self.size {
            let covered: u32 = levels[depth].iter().map(|w| w.count_ones()).sum();
            if self.best.as_ref().is_none_or(|&(c, _)| covered > c) {
                self.best = Some((covered, chosen.clone()));
            }
            return;
        }
        let last = self.masks.len() - (self.size - depth);
        for c in start..=last {
            chosen.push(c as u32);
            if self.matroid.is_none_or(|mat| mat.independent(chosen)) {
                let (head, tail) = levels.split_at_mut(depth + 1);
                for w in 0..self.words {
                    tail[0][w] = head[depth][w] | self.masks[c][w];
                }
                self.run(chosen, levels, c + 1);
            }
            chosen.pop();
        }
    }
}

fn voter_masks(profile: &ApprovalProfile) -> (Vec<Vec<u64>>, usize) {
    let words = profile.voters().div_ceil(64);
    let masks = (0..profile.candidates() as u32)
        .map(|c| {
            let mut mask = vec![0u64; words];
            for &v in profile.approvers(c) {
                mask[v as usize / 64] |= 1 << (v % 64);
            }
            mask
        })
        .collect();
    (masks, words)
}

fn optimize(
    profile: &ApprovalProfile,
    size: usize,
    matroid: Option<&dyn Matroid>,
) -> Result<(Committee, f64)> {
    let m = profile.candidates();
    if size == 0 || size > m {
        return Err(Error::arg(format!(
            "committee size k={size} must satisfy 1 <= k <= m with m={m}"
        )));
    }
    if binomial_capped(m as u64, size as u64, ENUMERATION_LIMIT).is_none() {
        return Err(Error::TooLarge(format!(
            "enumerating all {size}-subsets of {m} candidates exceeds {ENUMERATION_LIMIT}"
        )));
    }
    let (masks, words) = voter_masks(profile);
    let mut levels = vec![vec![0u64; words]; size + 1];
    let mut search = Search {
        masks: &masks,
        words,
        size,
        matroid,
        best: None,
    };
    search.run(&mut Vec::with_capacity(size), &mut levels, 0);
    let (covered, members) = search
        .best
        .ok_or_else(|| Error::arg("no feasible committee of the requested size"))?;
    let committee = Committee::new(members, size)?;
    Ok((committee, covered as f64 / profile.voters() as f64))
}

/// Optimal coverage over all size-`k` committees, by enumeration.
///
/// The first maximizer in lexicographic order is returned. Refuses
/// instances with more than 10^6 subsets.
pub fn exact_opt(profile: &ApprovalProfile, k: usize) -> Result<(Committee, f64)> {
    optimize(profile, k, None)
}

/// Optimal coverage over all bases of `matroid`, by enumeration with
/// independence pruning. Subject to the same 10^6-subset guard.
pub fn exact_opt_matroid(
    profile: &ApprovalProfile,
    matroid: &dyn Matroid,
) -> Result<(Committee, f64)> {
    if matroid.universe() != profile.candidates() {
        return Err(Error::arg(format!(
            "matroid universe {} does not match the {}-candidate profile",
            matroid.universe(),
            profile.candidates()
        )));
    }
    optimize(profile, matroid.rank(), Some(matroid))
}

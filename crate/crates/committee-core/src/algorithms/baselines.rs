//! Reference rules the main algorithms are compared against.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algorithms::RunResult;
use crate::error::{Error, Result};
use crate::matroid::{random_basis, UniformMatroid};
use crate::profile::ApprovalProfile;

/// Selects the `k` candidates with the most approvals; ties go to the
/// lowest candidate index.
pub fn approval_voting(profile: &ApprovalProfile, k: usize) -> Result<RunResult> {
    let m = profile.candidates();
    if k == 0 || k > m {
        return Err(Error::arg(format!(
            "committee size k={k} must satisfy 1 <= k <= m with m={m}"
        )));
    }
    let counts = profile.approval_counts();
    let mut order: Vec<u32> = (0..m as u32).collect();
    order.sort_by(|&a, &b| counts[b as usize].cmp(&counts[a as usize]).then(a.cmp(&b)));
    order.truncate(k);
    order.sort_unstable();
    let committee = crate::profile::Committee::new(order, k)?;
    let score = profile.cc_score(&committee)?;
    Ok(RunResult {
        committee,
        score,
        queries: 0,
        iterations: 1,
        seed: 0,
    })
}

/// Local-search proportional approval voting: from a random size-`k`
/// committee, repeatedly applies the first exchange (in lexicographic
/// `(incoming, outgoing)` order) that raises the PAV score by at least
/// `threshold * n / k^2`, until no exchange clears the bar.
pub fn ls_pav(profile: &ApprovalProfile, k: usize, threshold: f64, seed: u64) -> Result<RunResult> {
    let m = profile.candidates();
    let n = profile.voters();
    if k == 0 || k > m {
        return Err(Error::arg(format!(
            "committee size k={k} must satisfy 1 <= k <= m with m={m}"
        )));
    }
    if !(threshold > 0.0 && threshold.is_finite()) {
        return Err(Error::arg(format!(
            "improvement threshold must be positive, got {threshold}"
        )));
    }
    let bar = threshold * n as f64 / (k * k) as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let uniform = UniformMatroid::new(m, k)?;
    let mut committee = random_basis(&uniform, &mut rng)?;
    let mut coverage = profile.coverage_vector(&committee)?;

    // The PAV score never exceeds n * H(k) and each accepted exchange adds
    // at least `bar`, so this many steps always suffice.
    let harmonic_k: f64 = (1..=k).map(|j| 1.0 / j as f64).sum();
    let cap = (n as f64 * harmonic_k / bar).ceil() as u64 + 1;

    let mut iterations = 0u64;
    'search: while iterations < cap {
        for c_in in 0..m as u32 {
            if committee.contains(c_in) {
                continue;
            }
            for idx in 0..committee.len() {
                let c_out = committee.members()[idx];
                let mut delta = 0.0;
                for &v in profile.approvers(c_in) {
                    if !profile.approves(v as usize, c_out) {
                        delta += 1.0 / (coverage[v as usize] + 1) as f64;
                    }
                }
                for &v in profile.approvers(c_out) {
                    if !profile.approves(v as usize, c_in) {
                        delta -= 1.0 / coverage[v as usize] as f64;
                    }
                }
                if delta >= bar {
                    committee.swap(c_in, c_out)?;
                    for &v in profile.approvers(c_in) {
                        coverage[v as usize] += 1;
                    }
                    for &v in profile.approvers(c_out) {
                        coverage[v as usize] -= 1;
                    }
                    iterations += 1;
                    continue 'search;
                }
            }
        }
        break;
    }

    let covered = coverage.iter().filter(|&&h| h > 0).count();
    Ok(RunResult {
        committee,
        score: covered as f64 / n as f64,
        queries: 0,
        iterations,
        seed,
    })
}

//! Non-oblivious local search over a matroid, complete and sampled.
//!
//! Both searches walk the exchange neighborhood of a basis and accept the
//! best swap as long as it improves the auxiliary objective enough. They
//! share the [`SwapTable`] reduction, so when the sampled search reads the
//! whole population its floating-point deltas, and therefore its entire
//! trajectory, match the complete-information search bit for bit.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algorithms::bounds::{ls_iteration_cap, query_family_count, required_sample_size_ls};
use crate::algorithms::RunResult;
use crate::error::{Error, Result};
use crate::matroid::{random_basis, Matroid};
use crate::objectives::{AlphaSequence, SwapTable};
use crate::oracle::{build_query_family_sized, QueryOracle};
use crate::profile::ApprovalProfile;

fn check_search_inputs(
    universe: usize,
    candidates: usize,
    k: usize,
    beta: f64,
    alphas: &AlphaSequence,
) -> Result<()> {
    if universe != candidates {
        return Err(Error::arg(format!(
            "matroid universe {universe} does not match the {candidates}-candidate profile"
        )));
    }
    if k == 0 {
        return Err(Error::arg("matroid rank must be at least 1"));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::arg(format!("beta must be positive, got {beta}")));
    }
    if alphas.max_index() < k {
        return Err(Error::arg(format!(
            "objective weights cover coverage counts up to {}, need {k}",
            alphas.max_index()
        )));
    }
    Ok(())
}

/// Local search on full ballots: starts from a uniformly random basis and,
/// while some matroid-preserving exchange improves the auxiliary objective
/// by more than `beta`, performs the best one.
///
/// Ties go to the lexicographically smallest `(incoming, outgoing)` pair.
/// The objective is bounded by its top weight, so the search performs at
/// most `ceil(alpha_k / beta)` exchanges. With
/// `beta = (1 - g) / (g k ln k)` the final coverage is within a
/// `1 - 1/e - g` factor of the best basis.
pub fn local_search_beta(
    profile: &ApprovalProfile,
    matroid: &dyn Matroid,
    beta: f64,
    alphas: &AlphaSequence,
    seed: u64,
) -> Result<RunResult> {
    let m = profile.candidates();
    let k = matroid.rank();
    check_search_inputs(matroid.universe(), m, k, beta, alphas)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut committee = random_basis(matroid, &mut rng)?;
    let mut coverage = profile.coverage_vector(&committee)?;
    let n = profile.voters() as u64;
    let cap = ls_iteration_cap(1.0, alphas.get(k), beta)?;

    let mut scratch = committee.members().to_vec();
    let mut iterations = 0u64;
    while iterations < cap {
        let mut best: Option<(f64, u32, u32)> = None;
        for c_in in 0..m as u32 {
            if committee.contains(c_in) {
                continue;
            }
            for (slot, &c_out) in committee.members().iter().enumerate() {
                scratch.copy_from_slice(committee.members());
                scratch[slot] = c_in;
                if !matroid.independent(&scratch) {
                    continue;
                }
                let table = SwapTable::from_profile(profile, &coverage, c_in, c_out, k);
                let delta = table.delta(alphas, n);
                if best.is_none_or(|(d, _, _)| delta > d) {
                    best = Some((delta, c_in, c_out));
                }
            }
        }
        match best {
            Some((delta, c_in, c_out)) if delta > beta => {
                committee.swap(c_in, c_out)?;
                for &v in profile.approvers(c_in) {
                    coverage[v as usize] += 1;
                }
                for &v in profile.approvers(c_out) {
                    coverage[v as usize] -= 1;
                }
                iterations += 1;
            }
            _ => break,
        }
    }

    let covered = coverage.iter().filter(|&&h| h > 0).count();
    Ok(RunResult {
        committee,
        score: covered as f64 / profile.voters() as f64,
        queries: 0,
        iterations,
        seed,
    })
}

/// Local search driven entirely by oracle queries.
///
/// Each round presents a query family around the current basis to `ell`
/// sampled voters, estimates every matroid-preserving exchange's objective
/// change from those responses, and performs the best one while the
/// estimate stays at or above `beta - eps`, where
/// `eps = ((xi - 1) / (2 xi)) * beta`. `ell` defaults to
/// [`required_sample_size_ls`] and iterations are hard-capped at
/// `ceil(xi * alpha_k / beta)` since noisy estimates alone do not guarantee
/// termination. With a census oracle the estimates are exact, so the margin
/// drops out: the rule reverts to strictly exceeding `beta`, the cap to
/// `ceil(alpha_k / beta)`, and the run replays [`local_search_beta`]
/// exactly, seed for seed.
///
/// Requires rank at least 3 and `k < t <= m`. The reported score is
/// measured on the true ballots.
#[allow(clippy::too_many_arguments)]
pub fn ls_incomplete(
    oracle: &mut QueryOracle,
    matroid: &dyn Matroid,
    beta: f64,
    t: usize,
    delta: f64,
    xi: f64,
    alphas: &AlphaSequence,
    seed: u64,
    ell_override: Option<u64>,
) -> Result<RunResult> {
    let m = oracle.candidates();
    let k = matroid.rank();
    check_search_inputs(matroid.universe(), m, k, beta, alphas)?;
    if k < 3 {
        return Err(Error::arg(format!(
            "sampled local search requires rank at least 3, got {k}"
        )));
    }
    let family_count = query_family_count(m, k, t)?;
    let census = oracle.census();
    let alpha_k = alphas.get(k);
    let (eps, ell, cap) = if census {
        (
            0.0,
            oracle.voters() as u64,
            ls_iteration_cap(1.0, alpha_k, beta)?,
        )
    } else {
        let cap = ls_iteration_cap(xi, alpha_k, beta)?;
        let (eps, ell) = required_sample_size_ls(beta, xi, delta, m, k, alpha_k)?;
        (eps, ell_override.unwrap_or(ell), cap)
    };
    if ell == 0 {
        return Err(Error::arg("sample size override must be positive"));
    }
    if census {
        if let Some(forced) = ell_override {
            if forced != ell {
                return Err(Error::arg(format!(
                    "census sampling reads all {ell} voters, cannot force {forced}"
                )));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut committee = random_basis(matroid, &mut rng)?;
    oracle.reseed(seed);
    let start_queries = oracle.queries();

    let mut scratch = committee.members().to_vec();
    let mut seen = vec![false; m];
    let mut h_rows: Vec<usize> = Vec::new();
    let mut iterations = 0u64;
    while iterations < cap {
        let family = build_query_family_sized(m, &committee, t, family_count)?;
        seen.iter_mut().for_each(|s| *s = false);
        let mut best: Option<(f64, u32, u32)> = None;
        for query in family.sets() {
            let responses = oracle.sample_responses(query, ell)?;
            // Sets start with the committee in member order, so the first k
            // response bits of each row locate that voter's coverage.
            h_rows.clear();
            h_rows.extend(
                responses
                    .rows()
                    .iter()
                    .map(|row| row[..k].iter().filter(|&&b| b).count()),
            );
            for (pos, &c_in) in query.iter().enumerate().skip(k) {
                if seen[c_in as usize] {
                    continue;
                }
                seen[c_in as usize] = true;
                for (slot, &c_out) in committee.members().iter().enumerate() {
                    scratch.copy_from_slice(committee.members());
                    scratch[slot] = c_in;
                    if !matroid.independent(&scratch) {
                        continue;
                    }
                    let mut table = SwapTable::new(k);
                    for (row, &h) in responses.rows().iter().zip(&h_rows) {
                        match (row[pos], row[slot]) {
                            (true, false) => table.add_gain(h),
                            (false, true) => table.add_loss(h),
                            _ => {}
                        }
                    }
                    let estimate = table.delta(alphas, ell);
                    if best.is_none_or(|(d, _, _)| estimate > d) {
                        best = Some((estimate, c_in, c_out));
                    }
                }
            }
        }
        let accepted = match best {
            Some((estimate, _, _)) if census => estimate > beta,
            Some((estimate, _, _)) => estimate >= beta - eps,
            None => false,
        };
        if !accepted {
            break;
        }
        let (_, c_in, c_out) = best.expect("accepted exchange exists");
        committee.swap(c_in, c_out)?;
        iterations += 1;
    }

    let score = oracle.ground_truth().cc_score(&committee)?;
    Ok(RunResult {
        committee,
        score,
        queries: oracle.queries() - start_queries,
        iterations,
        seed,
    })
}

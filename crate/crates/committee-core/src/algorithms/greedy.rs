//! Greedy committee selection under complete and sampled information.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithms::bounds::{query_family_count, required_sample_size_greedy};
use crate::algorithms::RunResult;
use crate::error::{Error, Result};
use crate::oracle::{build_query_family_sized, QueryOracle};
use crate::profile::{ApprovalProfile, Committee};

fn check_committee_size(k: usize, m: usize) -> Result<()> {
    if k == 0 || k > m {
        return Err(Error::arg(format!(
            "committee size k={k} must satisfy 1 <= k <= m with m={m}"
        )));
    }
    Ok(())
}

/// Selects `k` candidates by repeatedly adding the one covering the most
/// voters not yet covered; ties go to the lowest candidate index.
///
/// The result is deterministic and guarantees at least a `1 - (1 - 1/k)^k`
/// fraction of the optimal coverage.
pub fn greedy(profile: &ApprovalProfile, k: usize) -> Result<RunResult> {
    let m = profile.candidates();
    check_committee_size(k, m)?;
    let mut covered = vec![false; profile.voters()];
    let mut committee = Committee::empty(k);
    for _ in 0..k {
        let mut best: Option<(usize, u32)> = None;
        for c in 0..m as u32 {
            if committee.contains(c) {
                continue;
            }
            let gain = profile
                .approvers(c)
                .iter()
                .filter(|&&v| !covered[v as usize])
                .count();
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, c));
            }
        }
        let (_, chosen) = best.expect("k <= m leaves an unchosen candidate");
        committee.add(chosen)?;
        for &v in profile.approvers(chosen) {
            covered[v as usize] = true;
        }
    }
    let score = covered.iter().filter(|&&c| c).count() as f64 / profile.voters() as f64;
    Ok(RunResult {
        committee,
        score,
        queries: 0,
        iterations: k as u64,
        seed: 0,
    })
}

/// Greedy selection that, at every step, picks uniformly at random among
/// all candidates whose marginal score gain is within `eps` of the best.
///
/// `eps = 0` reduces to [`greedy`] including its lowest-index tie rule.
/// Larger `eps` trades score for the freedom to perturb outcomes; the score
/// stays within a `(1 - 1/e) / (1 + eps (1 - 1/e))` factor of optimal.
pub fn greedy_eps(profile: &ApprovalProfile, k: usize, eps: f64, seed: u64) -> Result<RunResult> {
    let m = profile.candidates();
    check_committee_size(k, m)?;
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::arg(format!(
            "slack eps must be finite and non-negative, got {eps}"
        )));
    }
    if eps == 0.0 {
        let mut result = greedy(profile, k)?;
        result.seed = seed;
        return Ok(result);
    }
    let n = profile.voters();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covered = vec![false; n];
    let mut committee = Committee::empty(k);
    let mut gains: Vec<(u32, usize)> = Vec::with_capacity(m);
    for _ in 0..k {
        gains.clear();
        for c in 0..m as u32 {
            if committee.contains(c) {
                continue;
            }
            let gain = profile
                .approvers(c)
                .iter()
                .filter(|&&v| !covered[v as usize])
                .count();
            gains.push((c, gain));
        }
        let best_gain = gains
            .iter()
            .map(|&(_, g)| g)
            .max()
            .expect("candidates remain");
        // A gain counts as near-best when the score shortfall (best - gain)/n
        // is at most eps.
        let threshold = eps * n as f64;
        let eligible: Vec<u32> = gains
            .iter()
            .filter(|&&(_, g)| (best_gain - g) as f64 <= threshold)
            .map(|&(c, _)| c)
            .collect();
        let chosen = eligible[rng.gen_range(0..eligible.len())];
        committee.add(chosen)?;
        for &v in profile.approvers(chosen) {
            covered[v as usize] = true;
        }
    }
    let score = covered.iter().filter(|&&c| c).count() as f64 / n as f64;
    Ok(RunResult {
        committee,
        score,
        queries: 0,
        iterations: k as u64,
        seed,
    })
}

/// Greedy selection driven entirely by oracle queries.
///
/// Each of the `k` steps presents every size-`t` query set in a family
/// covering all candidates to `ell` sampled voters and adds the candidate
/// with the highest estimated coverage gain; ties go to the lowest index.
/// `ell` defaults to [`required_sample_size_greedy`]`(gamma, delta, m, k)`
/// and may be overridden (for fixed query budgets, or set to the number of
/// voters with a census oracle). The score reported is measured on the true
/// ballots; the oracle's counter advances by exactly
/// `k * t * ceil((m - k) / (t - k)) * ell`.
pub fn greedy_incomplete(
    oracle: &mut QueryOracle,
    k: usize,
    t: usize,
    gamma: f64,
    delta: f64,
    seed: u64,
    ell_override: Option<u64>,
) -> Result<RunResult> {
    let m = oracle.candidates();
    check_committee_size(k, m)?;
    let family_count = query_family_count(m, k, t)?;
    let ell = match ell_override {
        Some(0) => return Err(Error::arg("sample size override must be positive")),
        Some(ell) => ell,
        None => required_sample_size_greedy(gamma, delta, m, k)?.1,
    };
    oracle.reseed(seed);
    let start_queries = oracle.queries();

    let mut committee = Committee::empty(k);
    let mut seen = vec![false; m];
    let mut extended: Vec<u32> = Vec::with_capacity(k);
    for _ in 0..k {
        let family = build_query_family_sized(m, &committee, t, family_count)?;
        seen.iter_mut().for_each(|s| *s = false);
        let mut best: Option<(usize, u32)> = None;
        for query in family.sets() {
            let responses = oracle.sample_responses(query, ell)?;
            let base_hits = responses.coverage_hits(committee.members())?;
            for &c in query {
                if committee.contains(c) || seen[c as usize] {
                    continue;
                }
                seen[c as usize] = true;
                extended.clear();
                extended.extend_from_slice(committee.members());
                extended.push(c);
                let gain = responses.coverage_hits(&extended)? - base_hits;
                if best.is_none_or(|(g, _)| gain > g) {
                    best = Some((gain, c));
                }
            }
        }
        let (_, chosen) = best.expect("query family covers every candidate");
        committee.add(chosen)?;
    }

    let score = oracle.ground_truth().cc_score(&committee)?;
    Ok(RunResult {
        committee,
        score,
        queries: oracle.queries() - start_queries,
        iterations: k as u64,
        seed,
    })
}

//! Committee selection when every response bit may be flipped.

use crate::algorithms::bounds::required_repeats_inaccurate;
use crate::algorithms::{greedy, RunResult};
use crate::error::{Error, Result};
use crate::oracle::{OracleMode, QueryOracle};
use crate::profile::ApprovalProfile;

/// Reconstructs the hidden profile by majority vote.
///
/// Presents the full candidate list to every voter `U` times, where `U` is
/// [`required_repeats_inaccurate`] for the oracle's flip probability (one
/// presentation suffices for an exact oracle), and records approval when
/// more than half of the responses say approve; ties decode as disapprove.
/// Returns the decoded profile and `U`. The oracle's counter advances by
/// exactly `U * n * m`.
pub fn decode_profile(oracle: &mut QueryOracle, delta: f64) -> Result<(ApprovalProfile, u64)> {
    let repeats = match oracle.mode() {
        OracleMode::Exact => 1,
        OracleMode::Inaccurate { p } => {
            required_repeats_inaccurate(p, delta, oracle.voters(), oracle.candidates())?
        }
    };
    Ok((decode_profile_with(oracle, repeats)?, repeats))
}

/// Like [`decode_profile`] but with a caller-chosen repetition count, for
/// runs that deliberately under-read the oracle (a single noisy pass, for
/// instance).
pub fn decode_profile_with(oracle: &mut QueryOracle, repeats: u64) -> Result<ApprovalProfile> {
    if repeats == 0 {
        return Err(Error::arg("repetition count must be positive"));
    }
    let n = oracle.voters();
    let m = oracle.candidates();
    let everyone: Vec<u32> = (0..m as u32).collect();
    let mut ballots = Vec::with_capacity(n);
    let mut approve_counts = vec![0u64; m];
    for voter in 0..n {
        approve_counts.iter_mut().for_each(|c| *c = 0);
        for _ in 0..repeats {
            let response = oracle.present(voter, &everyone)?;
            for (count, bit) in approve_counts.iter_mut().zip(response) {
                *count += bit as u64;
            }
        }
        let ballot: Vec<u32> = approve_counts
            .iter()
            .enumerate()
            .filter(|&(_, &count)| 2 * count > repeats)
            .map(|(c, _)| c as u32)
            .collect();
        ballots.push(ballot);
    }
    ApprovalProfile::new(m, ballots)
}

/// Greedy selection against a flipping oracle: majority-decodes the whole
/// profile via [`decode_profile`], then runs [`greedy`] on the result.
///
/// With probability at least `1 - delta` the decoded profile is exact and
/// the run inherits greedy's guarantee. The reported score is measured on
/// the true ballots.
pub fn greedy_inaccurate(oracle: &mut QueryOracle, k: usize, delta: f64) -> Result<RunResult> {
    if k == 0 || k > oracle.candidates() {
        return Err(Error::arg(format!(
            "committee size k={k} must satisfy 1 <= k <= m with m={}",
            oracle.candidates()
        )));
    }
    let start_queries = oracle.queries();
    let (decoded, _) = decode_profile(oracle, delta)?;
    let inner = greedy(&decoded, k)?;
    let score = oracle.ground_truth().cc_score(&inner.committee)?;
    Ok(RunResult {
        committee: inner.committee,
        score,
        queries: oracle.queries() - start_queries,
        iterations: inner.iterations,
        seed: 0,
    })
}

//! Committee-selection procedures and their sample-size calculators.
//!
//! Complete information: [`greedy`], its randomized relaxation
//! [`greedy_eps`], non-oblivious [`local_search_beta`] over a matroid, the
//! [`approval_voting`] and [`ls_pav`] baselines, and the brute-force
//! [`exact_opt`]. Incomplete information: [`greedy_incomplete`] and
//! [`ls_incomplete`] drive the same searches through sampled oracle queries.
//! Inaccurate information: [`greedy_inaccurate`] decodes a noisy oracle by
//! majority vote before selecting. The closed-form calculators in
//! [`bounds`] size the voter samples, repetition counts, and query budgets.

mod baselines;
pub mod bounds;
mod greedy;
mod inaccurate;
mod local_search;
mod opt;

pub use baselines::{approval_voting, ls_pav};
pub use greedy::{greedy, greedy_eps, greedy_incomplete};
pub use inaccurate::{decode_profile, decode_profile_with, greedy_inaccurate};
pub use local_search::{local_search_beta, ls_incomplete};
pub use opt::{exact_opt, exact_opt_matroid};

use crate::profile::Committee;

/// Outcome of one algorithm run.
#[derive(Debug, Clone)]
pub struct RunResult {
    /// The selected committee; feasible for the governing constraint.
    pub committee: Committee,
    /// Chamberlin-Courant score of the committee on the true ballots.
    pub score: f64,
    /// Individual (voter, candidate) lookups consumed; zero under complete
    /// information.
    pub queries: u64,
    /// Selection or improvement steps performed.
    pub iterations: u64,
    /// Seed the run was started with, echoed for bookkeeping.
    pub seed: u64,
}

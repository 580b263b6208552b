//! Gated ballot access with query accounting.
//!
//! Algorithms running under restricted information never touch an
//! [`ApprovalProfile`](crate::ApprovalProfile) directly; they present query
//! sets to voters through a [`QueryOracle`], which counts every individual
//! (voter, candidate) lookup and, in the inaccurate mode, flips each response
//! bit independently with probability `p`. Query families partition the
//! candidates into size-`t` sets anchored on the current committee, and
//! [`SampledResponses`] holds one query set's sampled answers together with
//! the coverage and exact-pattern estimators computed from them.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::profile::{ApprovalProfile, Committee};

/// How the oracle answers lookups.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleMode {
    /// Responses equal the true ballot bits.
    Exact,
    /// Each response bit flips independently with probability `p ∈ (0, 1/2)`,
    /// freshly on every presentation.
    Inaccurate {
        /// Flip probability.
        p: f64,
    },
}

/// The only gateway to ballots for information-restricted algorithms.
///
/// The oracle owns the hidden profile, a seeded generator driving voter
/// sampling and response noise, and a counter of individual lookups. One
/// oracle serves one algorithm run; concurrent runs use separate oracles
/// with independent seeds.
#[derive(Debug, Clone)]
pub struct QueryOracle {
    profile: ApprovalProfile,
    mode: OracleMode,
    rng: ChaCha8Rng,
    queries: u64,
    census: bool,
}

impl QueryOracle {
    /// Wraps a profile. Rejects inaccurate modes with `p` outside `(0, 1/2)`.
    pub fn new(profile: ApprovalProfile, mode: OracleMode, seed: u64) -> Result<Self> {
        if let OracleMode::Inaccurate { p } = mode {
            if !(p > 0.0 && p < 0.5) {
                return Err(Error::arg(format!(
                    "flip probability must lie strictly between 0 and 1/2, got {p}"
                )));
            }
        }
        Ok(QueryOracle {
            profile,
            mode,
            rng: ChaCha8Rng::seed_from_u64(seed),
            queries: 0,
            census: false,
        })
    }

    /// Switches census sampling on or off. Under census sampling,
    /// [`QueryOracle::sample_voters`] returns every voter exactly once
    /// instead of drawing with replacement.
    pub fn with_census(mut self, census: bool) -> Self {
        self.census = census;
        self
    }

    /// Restarts the oracle's random stream from `seed`. The query counter
    /// keeps its value; only sampling and response noise are affected.
    pub fn reseed(&mut self, seed: u64) {
        self.rng = ChaCha8Rng::seed_from_u64(seed);
    }

    /// Whether census sampling is active.
    pub fn census(&self) -> bool {
        self.census
    }

    /// Number of voters behind the oracle.
    pub fn voters(&self) -> usize {
        self.profile.voters()
    }

    /// Number of candidates behind the oracle.
    pub fn candidates(&self) -> usize {
        self.profile.candidates()
    }

    /// Response mode.
    pub fn mode(&self) -> OracleMode {
        self.mode
    }

    /// Total individual (voter, candidate) lookups so far.
    pub fn queries(&self) -> u64 {
        self.queries
    }

    /// The hidden profile, for evaluation and reporting only. Algorithms
    /// under restricted information must go through [`QueryOracle::present`].
    pub fn ground_truth(&self) -> &ApprovalProfile {
        &self.profile
    }

    /// Presents query set `q` to one voter and returns one response bit per
    /// candidate in `q`, charging `|q|` lookups to the counter.
    pub fn present(&mut self, voter: usize, q: &[u32]) -> Result<Vec<bool>> {
        if q.is_empty() {
            return Err(Error::arg("query set is empty"));
        }
        if voter >= self.profile.voters() {
            return Err(Error::arg(format!("voter {voter} out of range")));
        }
        if let Some(&c) = q.iter().find(|&&c| c as usize >= self.profile.candidates()) {
            return Err(Error::arg(format!("candidate {c} out of range")));
        }
        self.queries += q.len() as u64;
        let mut bits = Vec::with_capacity(q.len());
        for &c in q {
            let truth = self.profile.approves(voter, c);
            let bit = match self.mode {
                OracleMode::Exact => truth,
                OracleMode::Inaccurate { p } => truth ^ self.rng.gen_bool(p),
            };
            bits.push(bit);
        }
        Ok(bits)
    }

    /// Draws `count` voter indices.
    ///
    /// Default: i.i.d. uniform with replacement, consuming the oracle's
    /// generator. Census mode: requires `count` equal to the number of voters
    /// and returns `0..n` in order.
    pub fn sample_voters(&mut self, count: u64) -> Result<Vec<u32>> {
        if count == 0 {
            return Err(Error::arg("sample size must be at least 1"));
        }
        let n = self.profile.voters();
        if self.census {
            if count != n as u64 {
                return Err(Error::arg(format!(
                    "census sampling requires the full population: asked {count}, have {n}"
                )));
            }
            return Ok((0..n as u32).collect());
        }
        Ok((0..count)
            .map(|_| self.rng.gen_range(0..n) as u32)
            .collect())
    }

    /// Samples `count` voters and presents `q` to each of them.
    pub fn sample_responses(&mut self, q: &[u32], count: u64) -> Result<SampledResponses> {
        let voters = self.sample_voters(count)?;
        let mut rows = Vec::with_capacity(voters.len());
        for &v in &voters {
            rows.push(self.present(v as usize, q)?);
        }
        Ok(SampledResponses {
            query: q.to_vec(),
            rows,
        })
    }
}

/// Query sets of size `t`, each containing the anchor committee, jointly
/// covering all candidates.
#[derive(Debug, Clone)]
pub struct QueryFamily {
    sets: Vec<Vec<u32>>,
    t: usize,
}

impl QueryFamily {
    /// The query sets. Within each set the anchor committee comes first and
    /// the remaining candidates follow in ascending index order.
    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    /// Query size `t`.
    pub fn query_size(&self) -> usize {
        self.t
    }
}

/// Builds the smallest query family for committee `w` over candidates `0..m`:
/// `⌈(m − |W|) / (t − |W|)⌉` sets of size `t`, each containing `w`, jointly
/// covering every candidate. Non-committee candidates are dealt out in index
/// order; the last set is padded with the lowest-index non-committee
/// candidates it does not already hold. Requires `m ≥ t > |W|`.
pub fn build_query_family(m: usize, w: &Committee, t: usize) -> Result<QueryFamily> {
    let count = (m - w.len()).div_ceil(t - check_family_params(m, w, t)?);
    build_query_family_sized(m, w, t, count)
}

/// Like [`build_query_family`] but with a caller-chosen number of sets, used
/// by the incomplete-information algorithms to keep the per-iteration family
/// size fixed at the committee's final size `k` while it is still growing.
pub fn build_query_family_sized(
    m: usize,
    w: &Committee,
    t: usize,
    count: usize,
) -> Result<QueryFamily> {
    let fresh_per_set = t - check_family_params(m, w, t)?;
    let others: Vec<u32> = (0..m as u32).filter(|&c| !w.contains(c)).collect();
    if count == 0 || count * fresh_per_set < others.len() {
        return Err(Error::arg(format!(
            "{count} query sets of size {t} cannot cover {m} candidates"
        )));
    }
    let mut sets = Vec::with_capacity(count);
    for chunk in 0..count {
        let mut set = w.members().to_vec();
        set.extend(
            others
                .iter()
                .skip(chunk * fresh_per_set)
                .take(fresh_per_set),
        );
        // Short chunks (the tail, or extra sets) are padded with the
        // lowest-index non-committee candidates not already present.
        let mut pad = others.iter();
        while set.len() < t {
            let &c = pad.next().expect("t <= m guarantees enough candidates");
            if !set.contains(&c) {
                set.push(c);
            }
        }
        sets.push(set);
    }
    Ok(QueryFamily { sets, t })
}

fn check_family_params(m: usize, w: &Committee, t: usize) -> Result<usize> {
    if t <= w.len() {
        return Err(Error::arg(format!(
            "query size {t} must exceed committee size {}",
            w.len()
        )));
    }
    if t > m {
        return Err(Error::arg(format!("query size {t} exceeds {m} candidates")));
    }
    Ok(w.len())
}

/// One query set's responses from a voter sample, with the estimators
/// computed from them.
#[derive(Debug, Clone)]
pub struct SampledResponses {
    query: Vec<u32>,
    rows: Vec<Vec<bool>>,
}

impl SampledResponses {
    /// The query set the responses answer.
    pub fn query(&self) -> &[u32] {
        &self.query
    }

    /// One response per sampled voter, parallel to the query set.
    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    /// Number of sampled voters.
    pub fn sample_size(&self) -> usize {
        self.rows.len()
    }

    /// Number of sampled voters approving at least one candidate of `s`,
    /// which must be a subset of the query set.
    pub fn coverage_hits(&self, s: &[u32]) -> Result<usize> {
        let positions = self.positions(s)?;
        Ok(self
            .rows
            .iter()
            .filter(|row| positions.iter().any(|&p| row[p]))
            .count())
    }

    /// Estimated coverage probability `p̂_S`: the fraction of sampled voters
    /// approving at least one candidate of `s`. Under census sampling in
    /// exact mode this equals the CC score of `s` exactly.
    pub fn coverage_fraction(&self, s: &[u32]) -> Result<f64> {
        Ok(self.coverage_hits(s)? as f64 / self.rows.len() as f64)
    }

    /// Empirical distribution of exact approval patterns within the query
    /// set: for each observed pattern `S ⊆ Q`, the fraction `p̂_S` of sampled
    /// voters approving exactly `S`. The fractions sum to 1.
    pub fn pattern_distribution(&self) -> BTreeMap<Vec<u32>, f64> {
        let mut counts: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for row in &self.rows {
            let mut pattern: Vec<u32> = self
                .query
                .iter()
                .zip(row)
                .filter(|&(_, &bit)| bit)
                .map(|(&c, _)| c)
                .collect();
            pattern.sort_unstable();
            *counts.entry(pattern).or_insert(0) += 1;
        }
        let total = self.rows.len() as f64;
        counts
            .into_iter()
            .map(|(s, c)| (s, c as f64 / total))
            .collect()
    }

    fn positions(&self, s: &[u32]) -> Result<Vec<usize>> {
        s.iter()
            .map(|&c| {
                self.query.iter().position(|&q| q == c).ok_or_else(|| {
                    Error::arg(format!("candidate {c} is not part of the query set"))
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::fixture;

    fn exact_oracle() -> QueryOracle {
        QueryOracle::new(fixture(), OracleMode::Exact, 1).unwrap()
    }

    #[test]
    fn rejects_degenerate_flip_probabilities() {
        assert!(QueryOracle::new(fixture(), OracleMode::Inaccurate { p: 0.5 }, 0).is_err());
        assert!(QueryOracle::new(fixture(), OracleMode::Inaccurate { p: 0.0 }, 0).is_err());
        assert!(QueryOracle::new(fixture(), OracleMode::Inaccurate { p: 0.2 }, 0).is_ok());
    }

    #[test]
    fn exact_responses_match_ballots_and_count_queries() {
        let mut oracle = exact_oracle();
        let bits = oracle.present(1, &[0, 1, 2]).unwrap();
        assert_eq!(bits, vec![true, true, false]);
        assert_eq!(oracle.queries(), 3);
        let again = oracle.present(1, &[0, 1, 2]).unwrap();
        assert_eq!(again, bits);
        assert_eq!(oracle.queries(), 6);
    }

    #[test]
    fn present_validates_input() {
        let mut oracle = exact_oracle();
        assert!(oracle.present(9, &[0]).is_err());
        assert!(oracle.present(0, &[7]).is_err());
        assert!(oracle.present(0, &[]).is_err());
        assert_eq!(oracle.queries(), 0);
    }

    #[test]
    fn single_voter_sampling_is_constant() {
        let profile = ApprovalProfile::new(2, vec![vec![0]]).unwrap();
        let mut oracle = QueryOracle::new(profile, OracleMode::Exact, 3).unwrap();
        assert_eq!(oracle.sample_voters(5).unwrap(), vec![0; 5]);
    }

    #[test]
    fn sampling_is_reproducible_per_seed() {
        let mut a = exact_oracle();
        let mut b = exact_oracle();
        assert_eq!(a.sample_voters(10).unwrap(), b.sample_voters(10).unwrap());
    }

    #[test]
    fn sampling_frequencies_are_near_uniform() {
        let profile = ApprovalProfile::new(1, vec![vec![]; 10]).unwrap();
        let mut oracle = QueryOracle::new(profile, OracleMode::Exact, 11).unwrap();
        let draws = 100_000;
        let mut counts = [0u32; 10];
        for v in oracle.sample_voters(draws).unwrap() {
            counts[v as usize] += 1;
        }
        // Binomial(draws, 1/10): five standard deviations around the mean.
        let mean = draws as f64 / 10.0;
        let sd = (draws as f64 * 0.1 * 0.9).sqrt();
        for &c in &counts {
            assert!(
                (c as f64 - mean).abs() < 5.0 * sd,
                "count {c} too far from {mean}"
            );
        }
    }

    #[test]
    fn census_sampling_returns_everyone_once() {
        let mut oracle = exact_oracle().with_census(true);
        assert_eq!(oracle.sample_voters(4).unwrap(), vec![0, 1, 2, 3]);
        assert!(oracle.sample_voters(3).is_err());
    }

    #[test]
    fn inaccurate_flip_rate_matches_p() {
        let profile = ApprovalProfile::new(10, vec![vec![0, 3, 7]; 1]).unwrap();
        let p = 0.2;
        let mut oracle = QueryOracle::new(profile, OracleMode::Inaccurate { p }, 5).unwrap();
        let q: Vec<u32> = (0..10).collect();
        let calls = 1_000;
        let mut flips = 0u32;
        for _ in 0..calls {
            let bits = oracle.present(0, &q).unwrap();
            for (c, &bit) in q.iter().zip(&bits) {
                let truth = [0, 3, 7].contains(c);
                if bit != truth {
                    flips += 1;
                }
            }
        }
        let total = (calls * 10) as f64;
        let sd = (total * p * (1.0 - p)).sqrt();
        assert!(
            (flips as f64 - total * p).abs() < 3.0 * sd,
            "flip count {flips}"
        );
    }

    #[test]
    fn family_size_matches_closed_form() {
        let w = Committee::new((0..8).collect(), 8).unwrap();
        let family = build_query_family(1000, &w, 20).unwrap();
        assert_eq!(family.sets().len(), 992usize.div_ceil(12));
        assert_eq!(family.sets().len(), 83);
        for set in family.sets() {
            assert_eq!(set.len(), 20);
            assert!(w.members().iter().all(|c| set.contains(c)));
        }
        let mut covered = vec![false; 1000];
        for set in family.sets() {
            for &c in set {
                covered[c as usize] = true;
            }
        }
        assert!(covered.iter().all(|&c| c));
    }

    #[test]
    fn single_set_family_when_t_equals_m() {
        let w = Committee::new(vec![0, 2], 2).unwrap();
        let family = build_query_family(5, &w, 5).unwrap();
        assert_eq!(family.sets().len(), 1);
        let mut set = family.sets()[0].clone();
        set.sort_unstable();
        assert_eq!(set, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn family_rejects_bad_sizes() {
        let w = Committee::new(vec![0, 1], 2).unwrap();
        assert!(build_query_family(5, &w, 2).is_err());
        assert!(build_query_family(5, &w, 6).is_err());
        assert!(build_query_family_sized(5, &w, 3, 1).is_err());
    }

    #[test]
    fn sized_family_pads_with_lowest_free_candidates() {
        let w = Committee::new(vec![4, 5], 2).unwrap();
        let family = build_query_family_sized(8, &w, 4, 4).unwrap();
        assert_eq!(family.sets().len(), 4);
        for set in family.sets() {
            assert_eq!(set.len(), 4);
        }
        // The final set has exhausted the fresh candidates and is pure padding.
        assert_eq!(family.sets()[3], vec![4, 5, 0, 1]);
    }

    #[test]
    fn coverage_estimates_count_hits() {
        let responses = SampledResponses {
            query: vec![2, 5, 7],
            rows: vec![
                vec![true, false, false],
                vec![false, true, false],
                vec![true, true, false],
                vec![false, false, false],
            ],
        };
        assert_eq!(responses.coverage_hits(&[2, 5]).unwrap(), 3);
        assert!((responses.coverage_fraction(&[2, 5]).unwrap() - 0.75).abs() < 1e-12);
        assert_eq!(responses.coverage_fraction(&[7]).unwrap(), 0.0);
        assert!(responses.coverage_fraction(&[9]).is_err());
    }

    #[test]
    fn pattern_distribution_sums_to_one() {
        let responses = SampledResponses {
            query: vec![0, 1],
            rows: vec![vec![true, false], vec![true, true]],
        };
        let dist = responses.pattern_distribution();
        assert_eq!(dist.len(), 2);
        assert_eq!(dist[&vec![0]], 0.5);
        assert_eq!(dist[&vec![0, 1]], 0.5);
        let total: f64 = dist.values().sum();
        assert!((total - 1.0).abs() < 1e-12);

        let constant = SampledResponses {
            query: vec![3, 4],
            rows: vec![vec![false, true]; 5],
        };
        let dist = constant.pattern_distribution();
        assert_eq!(dist.len(), 1);
        assert_eq!(dist[&vec![4]], 1.0);
    }

    #[test]
    fn census_estimates_equal_population_values() {
        let profile = fixture();
        let mut oracle = QueryOracle::new(profile.clone(), OracleMode::Exact, 0)
            .unwrap()
            .with_census(true);
        let family = build_query_family(3, &Committee::empty(2), 3).unwrap();
        let responses = oracle.sample_responses(&family.sets()[0], 4).unwrap();
        let w = Committee::new(vec![0, 1], 2).unwrap();
        let estimate = responses.coverage_fraction(w.members()).unwrap();
        assert_eq!(estimate, profile.cc_score(&w).unwrap());
    }
}

//! Seeded batch experiments over datasets, algorithms, and information
//! regimes, with CSV output.
//!
//! A run sweeps the full factorial of datasets, algorithms, per-voter query
//! budgets (`M` levels), and flip probabilities, repeating each applicable
//! cell for a number of trials. Every trial's seed is derived from the base
//! seed and a stable hash of its cell key, so results are reproducible and
//! adding algorithms or levels never perturbs existing cells. Restricted
//! runs also report their score relative to the matching
//! complete-information algorithm on the same dataset and seed.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use crate::algorithms::bounds::{beta_from_gamma, m_budget_sample_size};
use crate::algorithms::{
    approval_voting, decode_profile_with, greedy, greedy_eps, greedy_inaccurate, greedy_incomplete,
    local_search_beta, ls_incomplete, ls_pav, RunResult,
};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, UniformMatroid};
use crate::objectives::AlphaSequence;
use crate::oracle::{OracleMode, QueryOracle};
use crate::profile::ApprovalProfile;

/// The selectable committee-selection procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgorithmId {
    /// Complete-information greedy.
    Greedy,
    /// Greedy with a randomized near-tie rule.
    GreedyEps,
    /// Non-oblivious local search over the committee-size matroid (or a
    /// quota matroid when one is supplied).
    LocalSearch,
    /// Top-`k` approval counts.
    ApprovalVoting,
    /// PAV local search baseline.
    LsPav,
    /// Greedy through sampled queries.
    GreedyIncomplete,
    /// Local search through sampled queries.
    LsIncomplete,
    /// Greedy after majority-decoding a flipping oracle.
    GreedyInaccurate,
}

impl AlgorithmId {
    /// All identifiers, in display order.
    pub const ALL: [AlgorithmId; 8] = [
        AlgorithmId::Greedy,
        AlgorithmId::GreedyEps,
        AlgorithmId::LocalSearch,
        AlgorithmId::ApprovalVoting,
        AlgorithmId::LsPav,
        AlgorithmId::GreedyIncomplete,
        AlgorithmId::LsIncomplete,
        AlgorithmId::GreedyInaccurate,
    ];

    /// Stable identifier used in CSV rows and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Greedy => "greedy",
            AlgorithmId::GreedyEps => "greedy-eps",
            AlgorithmId::LocalSearch => "local-search",
            AlgorithmId::ApprovalVoting => "approval-voting",
            AlgorithmId::LsPav => "ls-pav",
            AlgorithmId::GreedyIncomplete => "greedy-incomplete",
            AlgorithmId::LsIncomplete => "ls-incomplete",
            AlgorithmId::GreedyInaccurate => "greedy-inaccurate",
        }
    }

    /// Parses a command-line identifier.
    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| {
                Error::arg(format!(
                    "unknown algorithm {name:?}; expected one of: {}",
                    Self::ALL.map(|id| id.name()).join(", ")
                ))
            })
    }

    /// Whether the algorithm reads full ballots rather than oracle queries.
    pub fn complete_information(self) -> bool {
        matches!(
            self,
            AlgorithmId::Greedy
                | AlgorithmId::GreedyEps
                | AlgorithmId::LocalSearch
                | AlgorithmId::ApprovalVoting
                | AlgorithmId::LsPav
        )
    }

    /// The complete-information algorithm a restricted run is scored
    /// against.
    pub fn baseline(self) -> AlgorithmId {
        match self {
            AlgorithmId::GreedyIncomplete | AlgorithmId::GreedyInaccurate => AlgorithmId::Greedy,
            AlgorithmId::LsIncomplete => AlgorithmId::LocalSearch,
            other => other,
        }
    }
}

/// Shared knobs for single runs and experiment cells.
#[derive(Debug, Clone)]
pub struct RunSettings {
    /// Committee size (ignored when a quota matroid fixes it; they must
    /// agree).
    pub k: usize,
    /// Query-set size for sampled algorithms.
    pub t: usize,
    /// Target approximation fraction for sample-size formulas.
    pub gamma: f64,
    /// Failure probability for sample-size formulas.
    pub delta: f64,
    /// Stopping-margin multiplier of the sampled local search.
    pub xi: f64,
    /// Local-search threshold constant.
    pub c2: f64,
    /// Explicit local-search threshold; derived from `c2`, `gamma`, and `k`
    /// when absent.
    pub beta: Option<f64>,
    /// Near-tie slack of the randomized greedy.
    pub eps: f64,
    /// PAV swap-improvement threshold multiplier.
    pub pav_threshold: f64,
    /// Response flip probability; zero means accurate responses.
    pub p: f64,
    /// Per-voter presentation budget; converts to a voter sample size.
    pub m_budget: Option<u64>,
    /// Whether sampled algorithms read every voter once per query set.
    pub census: bool,
}

impl Default for RunSettings {
    fn default() -> Self {
        RunSettings {
            k: 2,
            t: 0,
            gamma: 0.85,
            delta: 0.05,
            xi: 2.0,
            c2: 1.0,
            beta: None,
            eps: 0.0,
            pav_threshold: 1.0,
            p: 0.0,
            m_budget: None,
            census: false,
        }
    }
}

impl RunSettings {
    fn beta_for_rank(&self, k: usize) -> Result<f64> {
        match self.beta {
            Some(beta) => Ok(beta),
            None => beta_from_gamma(self.c2, self.gamma, k),
        }
    }

    fn oracle_mode(&self) -> Result<OracleMode> {
        if self.p == 0.0 {
            Ok(OracleMode::Exact)
        } else if self.p > 0.0 && self.p < 0.5 {
            Ok(OracleMode::Inaccurate { p: self.p })
        } else {
            Err(Error::arg(format!(
                "flip probability must lie in [0, 1/2), got {}",
                self.p
            )))
        }
    }

    fn sample_override(&self, n: usize, m: usize) -> Result<Option<u64>> {
        match self.m_budget {
            Some(level) => Ok(Some(m_budget_sample_size(level, n, m, self.k, self.t)?)),
            None => Ok(None),
        }
    }
}

/// Runs one algorithm on one profile with the given settings.
///
/// A quota matroid, when supplied, constrains the local searches; the other
/// algorithms use plain committee size. Under a positive flip probability
/// the complete-information algorithms read the whole matrix once through
/// the noisy oracle and select on what they saw; scores always refer to the
/// true ballots.
pub fn run_algorithm(
    id: AlgorithmId,
    profile: &ApprovalProfile,
    quota: Option<&dyn Matroid>,
    settings: &RunSettings,
    seed: u64,
) -> Result<RunResult> {
    let m = profile.candidates();
    let k = match quota {
        Some(mat) => {
            if mat.universe() != m {
                return Err(Error::arg(format!(
                    "matroid universe {} does not match the {m}-candidate profile",
                    mat.universe()
                )));
            }
            mat.rank()
        }
        None => settings.k,
    };
    let mode = settings.oracle_mode()?;

    if id.complete_information() {
        let noisy_read;
        let (ballots, read_queries) = match mode {
            OracleMode::Exact => (profile, 0),
            OracleMode::Inaccurate { .. } => {
                let mut oracle = QueryOracle::new(profile.clone(), mode, seed)?;
                noisy_read = decode_profile_with(&mut oracle, 1)?;
                (&noisy_read, oracle.queries())
            }
        };
        let mut result = match id {
            AlgorithmId::Greedy => greedy(ballots, k)?,
            AlgorithmId::GreedyEps => greedy_eps(ballots, k, settings.eps, seed)?,
            AlgorithmId::ApprovalVoting => approval_voting(ballots, k)?,
            AlgorithmId::LsPav => ls_pav(ballots, k, settings.pav_threshold, seed)?,
            AlgorithmId::LocalSearch => {
                let uniform;
                let matroid: &dyn Matroid = match quota {
                    Some(mat) => mat,
                    None => {
                        uniform = UniformMatroid::new(m, k)?;
                        &uniform
                    }
                };
                let alphas = AlphaSequence::new(k)?;
                local_search_beta(ballots, matroid, settings.beta_for_rank(k)?, &alphas, seed)?
            }
            restricted => unreachable!("{restricted:?} is not complete-information"),
        };
        result.score = profile.cc_score(&result.committee)?;
        result.queries += read_queries;
        result.seed = seed;
        return Ok(result);
    }

    let mut oracle = QueryOracle::new(profile.clone(), mode, seed)?.with_census(settings.census);
    match id {
        AlgorithmId::GreedyIncomplete => {
            let ell = match settings.sample_override(profile.voters(), m)? {
                Some(ell) => Some(ell),
                None if settings.census => Some(profile.voters() as u64),
                None => None,
            };
            greedy_incomplete(
                &mut oracle,
                k,
                settings.t,
                settings.gamma,
                settings.delta,
                seed,
                ell,
            )
        }
        AlgorithmId::LsIncomplete => {
            let uniform;
            let matroid: &dyn Matroid = match quota {
                Some(mat) => mat,
                None => {
                    uniform = UniformMatroid::new(m, k)?;
                    &uniform
                }
            };
            let alphas = AlphaSequence::new(k)?;
            ls_incomplete(
                &mut oracle,
                matroid,
                settings.beta_for_rank(k)?,
                settings.t,
                settings.delta,
                settings.xi,
                &alphas,
                seed,
                settings.sample_override(profile.voters(), m)?,
            )
        }
        AlgorithmId::GreedyInaccurate => greedy_inaccurate(&mut oracle, k, settings.delta),
        complete => unreachable!("{complete:?} is complete-information"),
    }
}

/// A named profile an experiment runs on.
#[derive(Debug, Clone)]
pub struct Dataset {
    /// Identifier used in CSV rows.
    pub id: String,
    /// The ballots.
    pub profile: ApprovalProfile,
}

/// Full factorial experiment description.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// Algorithms to sweep.
    pub algorithms: Vec<AlgorithmId>,
    /// Shared parameters; `p` and `m_budget` are overridden per cell.
    pub settings: RunSettings,
    /// Per-voter budget levels; `None` is the unbudgeted arm.
    pub m_levels: Vec<Option<u64>>,
    /// Flip-probability levels; `0` is the accurate arm.
    pub p_levels: Vec<f64>,
    /// Seeded repetitions per cell.
    pub trials: u64,
    /// Base seed all cell seeds derive from.
    pub base_seed: u64,
}

impl ExperimentConfig {
    fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(Error::arg("experiment needs at least one algorithm"));
        }
        if self.m_levels.is_empty() || self.p_levels.is_empty() {
            return Err(Error::arg("experiment needs at least one M and p level"));
        }
        if self.m_levels.contains(&Some(0)) {
            return Err(Error::arg("M levels must be positive"));
        }
        if self.trials == 0 {
            return Err(Error::arg("trial count must be at least 1"));
        }
        Ok(())
    }
}

/// One trial's outcome.
#[derive(Debug, Clone)]
pub struct ExperimentRecord {
    /// Dataset identifier.
    pub dataset: String,
    /// Algorithm that ran.
    pub algorithm: AlgorithmId,
    /// Committee size.
    pub k: usize,
    /// Per-voter budget level; `None` prints as `full`.
    pub m_budget: Option<u64>,
    /// Flip probability.
    pub p: f64,
    /// Trial index within the cell.
    pub trial: u64,
    /// Derived seed the trial ran with.
    pub seed: u64,
    /// Coverage score on the true ballots.
    pub cc: f64,
    /// Score relative to the complete-information counterpart.
    pub relative: f64,
    /// Oracle lookups consumed.
    pub queries: u64,
    /// Wall time in milliseconds.
    pub ms: u128,
}

/// The fixed CSV header.
pub const CSV_HEADER: &str = "dataset,algorithm,k,M,p,trial,seed,cc,relative,queries,ms";

impl ExperimentRecord {
    /// Formats the record as one CSV row matching [`CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        let m_text = match self.m_budget {
            Some(level) => level.to_string(),
            None => "full".to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{:.6},{:.6},{},{}",
            self.dataset,
            self.algorithm.name(),
            self.k,
            m_text,
            self.p,
            self.trial,
            self.seed,
            self.cc,
            self.relative,
            self.queries,
            self.ms
        )
    }
}

/// Renders records as a CSV table with header.
pub fn write_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for record in records {
        let _ = writeln!(out, "{}", record.csv_row());
    }
    out
}

fn stable_hash(text: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in text.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Seed for one trial: base seed plus a stable hash of the cell key plus
/// the trial index. Adding algorithms or levels leaves other cells' seeds
/// untouched.
pub fn cell_seed(
    base_seed: u64,
    dataset: &str,
    algorithm: AlgorithmId,
    k: usize,
    m_budget: Option<u64>,
    p: f64,
    trial: u64,
) -> u64 {
    let key = match m_budget {
        Some(level) => format!("{dataset}|{}|{k}|{level}|{p}", algorithm.name()),
        None => format!("{dataset}|{}|{k}|full|{p}", algorithm.name()),
    };
    base_seed
        .wrapping_add(stable_hash(&key))
        .wrapping_add(trial)
}

fn cell_applies(algorithm: AlgorithmId, m_budget: Option<u64>) -> bool {
    match algorithm {
        AlgorithmId::GreedyIncomplete | AlgorithmId::LsIncomplete => true,
        _ => m_budget.is_none(),
    }
}

/// Runs the full factorial and returns one record per finished trial plus
/// a note per failed cell; failures do not stop the sweep.
pub fn run_experiment(
    datasets: &[Dataset],
    config: &ExperimentConfig,
) -> Result<(Vec<ExperimentRecord>, Vec<String>)> {
    config.validate()?;
    if datasets.is_empty() {
        return Err(Error::arg("experiment needs at least one dataset"));
    }
    let mut records = Vec::new();
    let mut failures = Vec::new();
    let mut baselines: BTreeMap<(String, AlgorithmId, u64), f64> = BTreeMap::new();
    for dataset in datasets {
        for &algorithm in &config.algorithms {
            for &m_budget in &config.m_levels {
                if !cell_applies(algorithm, m_budget) {
                    continue;
                }
                for &p in &config.p_levels {
                    for trial in 0..config.trials {
                        let seed = cell_seed(
                            config.base_seed,
                            &dataset.id,
                            algorithm,
                            config.settings.k,
                            m_budget,
                            p,
                            trial,
                        );
                        let mut settings = config.settings.clone();
                        settings.p = p;
                        settings.m_budget = m_budget;
                        let started = Instant::now();
                        let run = run_algorithm(algorithm, &dataset.profile, None, &settings, seed);
                        let ms = started.elapsed().as_millis();
                        let result = match run {
                            Ok(result) => result,
                            Err(error) => {
                                failures.push(format!(
                                    "{} {} M={m_budget:?} p={p} trial {trial}: {error}",
                                    dataset.id,
                                    algorithm.name()
                                ));
                                continue;
                            }
                        };
                        let relative = if algorithm.complete_information() && p == 0.0 {
                            1.0
                        } else {
                            let key = (dataset.id.clone(), algorithm.baseline(), seed);
                            let baseline_cc = match baselines.get(&key) {
                                Some(&cc) => cc,
                                None => {
                                    let mut reference = config.settings.clone();
                                    reference.p = 0.0;
                                    reference.m_budget = None;
                                    let cc = run_algorithm(
                                        algorithm.baseline(),
                                        &dataset.profile,
                                        None,
                                        &reference,
                                        seed,
                                    )?
                                    .score;
                                    baselines.insert(key, cc);
                                    cc
                                }
                            };
                            relative_score(result.score, baseline_cc)
                        };
                        records.push(ExperimentRecord {
                            dataset: dataset.id.clone(),
                            algorithm,
                            k: config.settings.k,
                            m_budget,
                            p,
                            trial,
                            seed,
                            cc: result.score,
                            relative,
                            queries: result.queries,
                            ms,
                        });
                    }
                }
            }
        }
    }
    Ok((records, failures))
}

fn relative_score(cc: f64, baseline_cc: f64) -> f64 {
    if baseline_cc == 0.0 {
        if cc == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        cc / baseline_cc
    }
}

/// Mean and standard deviation of one pooled cell.
#[derive(Debug, Clone)]
pub struct CellSummary {
    /// Algorithm of the pooled runs.
    pub algorithm: AlgorithmId,
    /// Budget level of the pooled runs.
    pub m_budget: Option<u64>,
    /// Flip probability of the pooled runs.
    pub p: f64,
    /// Number of pooled records.
    pub runs: u64,
    /// Mean coverage score.
    pub mean_cc: f64,
    /// Sample standard deviation of the coverage score.
    pub sd_cc: f64,
    /// Mean relative score.
    pub mean_relative: f64,
    /// Sample standard deviation of the relative score.
    pub sd_relative: f64,
}

/// Pools records by (algorithm, M, p) across datasets and trials, in
/// deterministic key order.
pub fn summarize(records: &[ExperimentRecord]) -> Vec<CellSummary> {
    let mut groups: BTreeMap<(AlgorithmId, Option<u64>, String), Vec<&ExperimentRecord>> =
        BTreeMap::new();
    for record in records {
        groups
            .entry((record.algorithm, record.m_budget, format!("{}", record.p)))
            .or_default()
            .push(record);
    }
    groups
        .into_values()
        .map(|rows| {
            let ccs: Vec<f64> = rows.iter().map(|r| r.cc).collect();
            let relatives: Vec<f64> = rows.iter().map(|r| r.relative).collect();
            let (mean_cc, sd_cc) = mean_sd(&ccs);
            let (mean_relative, sd_relative) = mean_sd(&relatives);
            CellSummary {
                algorithm: rows[0].algorithm,
                m_budget: rows[0].m_budget,
                p: rows[0].p,
                runs: rows.len() as u64,
                mean_cc,
                sd_cc,
                mean_relative,
                sd_relative,
            }
        })
        .collect()
}

fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let variance = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, variance.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::fixture;

    fn tiny_settings() -> RunSettings {
        RunSettings {
            k: 2,
            t: 3,
            ..RunSettings::default()
        }
    }

    #[test]
    fn algorithm_ids_round_trip_through_names() {
        for id in AlgorithmId::ALL {
            assert_eq!(AlgorithmId::parse(id.name()).unwrap(), id);
        }
        assert!(AlgorithmId::parse("banzhaf").is_err());
    }

    #[test]
    fn run_algorithm_covers_every_identifier() {
        let profile = fixture();
        let mut settings = tiny_settings();
        settings.census = true;
        for id in AlgorithmId::ALL {
            if id == AlgorithmId::LsIncomplete {
                continue; // needs rank at least 3, exercised elsewhere
            }
            let result = run_algorithm(id, &profile, None, &settings, 4)
                .unwrap_or_else(|e| panic!("{}: {e}", id.name()));
            assert_eq!(result.committee.len(), 2, "{}", id.name());
        }
    }

    #[test]
    fn census_restricted_runs_match_their_baselines() {
        let profile = fixture();
        let mut settings = tiny_settings();
        settings.census = true;
        let restricted =
            run_algorithm(AlgorithmId::GreedyIncomplete, &profile, None, &settings, 9).unwrap();
        let baseline = run_algorithm(AlgorithmId::Greedy, &profile, None, &settings, 9).unwrap();
        assert_eq!(restricted.committee.members(), baseline.committee.members());
    }

    #[test]
    fn noisy_complete_information_reads_the_matrix_once() {
        let profile = fixture();
        let mut settings = tiny_settings();
        settings.p = 0.2;
        let result = run_algorithm(AlgorithmId::Greedy, &profile, None, &settings, 3).unwrap();
        assert_eq!(result.queries, 12);
        let again = run_algorithm(AlgorithmId::Greedy, &profile, None, &settings, 3).unwrap();
        assert_eq!(result.committee.members(), again.committee.members());
    }

    #[test]
    fn csv_rows_are_stable() {
        let record = ExperimentRecord {
            dataset: "synthetic-00".into(),
            algorithm: AlgorithmId::GreedyIncomplete,
            k: 8,
            m_budget: Some(5),
            p: 0.1,
            trial: 3,
            seed: 42,
            cc: 0.8125,
            relative: 0.953125,
            queries: 26_400,
            ms: 17,
        };
        assert_eq!(
            record.csv_row(),
            "synthetic-00,greedy-incomplete,8,5,0.1,3,42,0.812500,0.953125,26400,17"
        );
        let full = ExperimentRecord {
            m_budget: None,
            ..record
        };
        assert!(full.csv_row().contains(",full,"));
        let table = write_csv(&[]);
        assert_eq!(table, format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn cell_seeds_are_stable_and_distinct() {
        let a = cell_seed(42, "d0", AlgorithmId::Greedy, 8, None, 0.0, 0);
        assert_eq!(a, cell_seed(42, "d0", AlgorithmId::Greedy, 8, None, 0.0, 0));
        assert_eq!(
            a.wrapping_add(1),
            cell_seed(42, "d0", AlgorithmId::Greedy, 8, None, 0.0, 1)
        );
        assert_ne!(a, cell_seed(42, "d0", AlgorithmId::LsPav, 8, None, 0.0, 0));
        assert_ne!(a, cell_seed(42, "d1", AlgorithmId::Greedy, 8, None, 0.0, 0));
        assert_ne!(
            a,
            cell_seed(42, "d0", AlgorithmId::Greedy, 8, Some(5), 0.0, 0)
        );
    }

    fn experiment_fixture() -> (Vec<Dataset>, ExperimentConfig) {
        let datasets = vec![
            Dataset {
                id: "a".into(),
                profile: fixture(),
            },
            Dataset {
                id: "b".into(),
                profile: ApprovalProfile::new(
                    4,
                    vec![vec![0, 1], vec![1], vec![2, 3], vec![3], vec![0]],
                )
                .unwrap(),
            },
        ];
        let config = ExperimentConfig {
            algorithms: vec![
                AlgorithmId::Greedy,
                AlgorithmId::ApprovalVoting,
                AlgorithmId::GreedyIncomplete,
            ],
            settings: RunSettings {
                k: 2,
                t: 3,
                ..RunSettings::default()
            },
            m_levels: vec![None, Some(2)],
            p_levels: vec![0.0, 0.1],
            trials: 2,
            base_seed: 42,
        };
        (datasets, config)
    }

    #[test]
    fn factorial_covers_applicable_cells_only() {
        let (datasets, config) = experiment_fixture();
        let (records, failures) = run_experiment(&datasets, &config).unwrap();
        assert!(failures.is_empty(), "{failures:?}");
        // Complete-information algorithms skip the M levels: 2 datasets x
        // (2 complete x 1 + 1 restricted x 2) x 2 p-levels x 2 trials.
        assert_eq!(records.len(), 2 * 4 * 2 * 2);
        assert!(records
            .iter()
            .all(|r| r.algorithm != AlgorithmId::Greedy || r.m_budget.is_none()));
        for record in &records {
            if record.algorithm.complete_information() && record.p == 0.0 {
                assert_eq!(record.relative, 1.0);
            }
            assert!(record.cc >= 0.0 && record.cc <= 1.0);
        }
    }

    #[test]
    fn experiment_is_reproducible_modulo_wall_time() {
        let (datasets, config) = experiment_fixture();
        let (first, _) = run_experiment(&datasets, &config).unwrap();
        let (second, _) = run_experiment(&datasets, &config).unwrap();
        assert_eq!(first.len(), second.len());
        for (a, b) in first.iter().zip(&second) {
            let mut b_timed = b.clone();
            b_timed.ms = a.ms;
            assert_eq!(a.csv_row(), b_timed.csv_row());
        }
    }

    #[test]
    fn summaries_pool_by_cell() {
        let (datasets, config) = experiment_fixture();
        let (records, _) = run_experiment(&datasets, &config).unwrap();
        let summaries = summarize(&records);
        for summary in &summaries {
            assert_eq!(summary.runs, 4, "{:?}", summary.algorithm);
            assert!(summary.sd_cc >= 0.0);
        }
        let greedy_rows: Vec<_> = summaries
            .iter()
            .filter(|s| s.algorithm == AlgorithmId::Greedy)
            .collect();
        assert_eq!(greedy_rows.len(), 2);
    }

    #[test]
    fn mean_sd_basics() {
        let (mean, sd) = mean_sd(&[1.0, 1.0, 1.0]);
        assert_eq!((mean, sd), (1.0, 0.0));
        let (mean, sd) = mean_sd(&[1.0, 3.0]);
        assert!((mean - 2.0).abs() < 1e-12);
        assert!((sd - (2.0f64).sqrt()).abs() < 1e-12);
        let (_, sd_single) = mean_sd(&[5.0]);
        assert_eq!(sd_single, 0.0);
    }
}

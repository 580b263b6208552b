//! Command-line harness for committee selection: single runs, batch
//! experiments with CSV and SVG output, sample-size calculators, synthetic
//! election generation, and ingestion of deliberation vote matrices.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use committee_core::algorithms::bounds::{
    beta_from_gamma, ls_iteration_cap, query_budget_greedy, query_budget_ls, query_family_count,
    required_repeats_inaccurate, required_sample_size_greedy, required_sample_size_ls,
};
use committee_core::datagen::{
    default_phi_grid, fit_phi, fit_q, resample_election, ResampleParams,
};
use committee_core::experiment::{
    run_algorithm, run_experiment, summarize, write_csv, AlgorithmId, Dataset, ExperimentConfig,
    ExperimentRecord, RunSettings, CSV_HEADER,
};
use committee_core::matroid::{Matroid, QuotaMatroid, QuotaSpec};
use committee_core::objectives::AlphaSequence;
use committee_core::plot::{bar_chart, line_chart, Bar, BarGroup, LinePoint, LineSeries};
use committee_core::polis::{preprocess, read_votes_file, ParseOptions, VoteCodes};
use committee_core::ApprovalProfile;

#[derive(Parser)]
#[command(
    name = "committees",
    version,
    about = "Select diverse committees from approval ballots under complete, sampled, or noisy ballot access"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm on one profile file.
    Run(RunArgs),
    /// Sweep algorithms over datasets and emit a CSV table.
    Experiment(ExperimentArgs),
    /// Evaluate sample-size and query-budget formulas.
    #[command(subcommand)]
    Calc(CalcCommand),
    /// Generate synthetic elections from the resampling model.
    Generate(GenerateArgs),
    /// Convert vote matrices into approval profiles and fit the resampling model.
    Ingest(IngestArgs),
}

#[derive(Args)]
struct AlgorithmParams {
    /// Query-set size for sampled algorithms.
    #[arg(long, default_value_t = 20)]
    t: usize,
    /// Target approximation fraction for sample-size formulas.
    #[arg(long, default_value_t = 0.85)]
    gamma: f64,
    /// Failure probability for sample-size formulas.
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
    /// Stopping-margin multiplier of the sampled local search.
    #[arg(long, default_value_t = 2.0)]
    xi: f64,
    /// Local-search threshold constant.
    #[arg(long, default_value_t = 1.0)]
    c2: f64,
    /// Explicit local-search threshold, overriding the derived one.
    #[arg(long)]
    beta: Option<f64>,
    /// Near-tie slack of the randomized greedy.
    #[arg(long, default_value_t = 0.0)]
    eps: f64,
    /// Swap-improvement threshold multiplier of the PAV baseline.
    #[arg(long, default_value_t = 1.0)]
    pav_threshold: f64,
}

impl AlgorithmParams {
    fn settings(&self, k: usize) -> RunSettings {
        RunSettings {
            k,
            t: self.t,
            gamma: self.gamma,
            delta: self.delta,
            xi: self.xi,
            c2: self.c2,
            beta: self.beta,
            eps: self.eps,
            pav_threshold: self.pav_threshold,
            ..RunSettings::default()
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Profile file to select from.
    #[arg(long)]
    profile: PathBuf,
    /// Algorithm identifier.
    #[arg(long)]
    algo: String,
    /// Committee size.
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    params: AlgorithmParams,
    /// Response flip probability.
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Per-voter presentation budget for sampled algorithms.
    #[arg(long = "M")]
    m_budget: Option<u64>,
    /// Read every voter once per query set instead of sampling.
    #[arg(long)]
    census: bool,
    /// Seed for all randomized choices.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Quota constraint file with lines "group-name: index-list : lower : upper".
    #[arg(long)]
    matroid_config: Option<PathBuf>,
    /// Append the run as a CSV row to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Profile files; each becomes one dataset named by its file stem.
    #[arg(long)]
    profile: Vec<PathBuf>,
    /// Number of synthetic elections to add as datasets.
    #[arg(long, default_value_t = 0)]
    synthetic: usize,
    /// Approval fraction of the synthetic elections.
    #[arg(long, default_value_t = 0.0891)]
    q: f64,
    /// Approval spread of the synthetic elections.
    #[arg(long, default_value_t = 0.693)]
    phi: f64,
    /// Voters per synthetic election.
    #[arg(long, default_value_t = 1000)]
    n: usize,
    /// Candidates per synthetic election.
    #[arg(long, default_value_t = 400)]
    m: usize,
    /// Comma-separated algorithm identifiers.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "greedy,local-search,approval-voting,ls-pav"
    )]
    algo: Vec<String>,
    /// Committee size.
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    params: AlgorithmParams,
    /// Comma-separated per-voter budget levels; "full" is the unbudgeted arm.
    #[arg(long = "M", value_delimiter = ',', default_value = "full")]
    m_levels: Vec<String>,
    /// Comma-separated response flip probabilities.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    p: Vec<f64>,
    /// Seeded repetitions per cell.
    #[arg(long, default_value_t = 1)]
    trials: u64,
    /// Base seed all cell seeds derive from.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// CSV output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for SVG charts of the results.
    #[arg(long)]
    plot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CalcCommand {
    /// Sample size and total queries of the sampled greedy.
    GreedyBudget(GreedyBudgetArgs),
    /// Threshold, sample size, iteration cap, and total queries of the
    /// sampled local search.
    LsBudget(LsBudgetArgs),
    /// Majority-vote repetitions against a flipping oracle.
    InaccurateRepeats(InaccurateRepeatsArgs),
}

#[derive(Args)]
struct GreedyBudgetArgs {
    /// Number of candidates.
    #[arg(long)]
    m: usize,
    /// Committee size.
    #[arg(long)]
    k: usize,
    /// Query-set size.
    #[arg(long)]
    t: usize,
    /// Target approximation fraction.
    #[arg(long, default_value_t = 0.85)]
    gamma: f64,
    /// Failure probability.
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
}

#[derive(Args)]
struct LsBudgetArgs {
    /// Number of candidates.
    #[arg(long)]
    m: usize,
    /// Committee size.
    #[arg(long)]
    k: usize,
    /// Query-set size.
    #[arg(long)]
    t: usize,
    /// Target approximation fraction the threshold derives from.
    #[arg(long, default_value_t = 0.85)]
    gamma: f64,
    /// Failure probability.
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
    /// Stopping-margin multiplier; must exceed 1.
    #[arg(long, default_value_t = 2.0)]
    xi: f64,
    /// Threshold constant.
    #[arg(long, default_value_t = 1.0)]
    c2: f64,
    /// Explicit threshold, overriding the derived one.
    #[arg(long)]
    beta: Option<f64>,
}

#[derive(Args)]
struct InaccurateRepeatsArgs {
    /// Number of voters.
    #[arg(long)]
    n: usize,
    /// Number of candidates.
    #[arg(long)]
    m: usize,
    /// Response flip probability.
    #[arg(long)]
    p: f64,
    /// Failure probability.
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
}

#[derive(Args)]
struct GenerateArgs {
    /// Approval fraction.
    #[arg(long)]
    q: f64,
    /// Approval spread.
    #[arg(long)]
    phi: f64,
    /// Voters per election.
    #[arg(long)]
    n: usize,
    /// Candidates per election.
    #[arg(long)]
    m: usize,
    /// Number of elections to write.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Base seed; election i uses seed + i.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output directory.
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args)]
struct IngestArgs {
    /// Vote-matrix files; each becomes one dataset named by its file stem.
    #[arg(long, required = true)]
    input: Vec<PathBuf>,
    /// Manifest of retained dataset names; others are skipped with a notice.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Output directory for the cleaned profiles.
    #[arg(long)]
    out_dir: PathBuf,
    /// Whether input files start with a header line.
    #[arg(long)]
    has_header: bool,
    /// Leading non-vote columns to skip in each row.
    #[arg(long, default_value_t = 0)]
    metadata_columns: usize,
    /// Cell code meaning approve.
    #[arg(long, default_value = "1")]
    approve_code: String,
    /// Cell code meaning disapprove.
    #[arg(long, default_value = "-1")]
    disapprove_code: String,
    /// Cell code meaning an explicit pass.
    #[arg(long, default_value = "0")]
    neutral_code: String,
    /// Cell code meaning the participant never voted.
    #[arg(long, default_value = "")]
    missing_code: String,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Calc(args) => cmd_calc(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Ingest(args) => cmd_ingest(args),
    };
    if let Err(error) = outcome {
        eprintln!("error: {error:#}");
        std::process::exit(1);
    }
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string_lossy().into_owned())
}

fn load_quota_matroid(path: &Path, m: usize, k: usize) -> Result<QuotaMatroid> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading quota config {}", path.display()))?;
    let spec = QuotaSpec::parse(&text, m, k)?;
    Ok(QuotaMatroid::new(&spec)?)
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let profile = ApprovalProfile::read_file(&args.profile)
        .with_context(|| format!("reading profile {}", args.profile.display()))?;
    let algorithm = AlgorithmId::parse(&args.algo)?;
    let mut settings = args.params.settings(args.k);
    settings.p = args.p;
    settings.m_budget = args.m_budget;
    settings.census = args.census;

    let quota = match &args.matroid_config {
        Some(path) => Some(load_quota_matroid(path, profile.candidates(), args.k)?),
        None => None,
    };
    let matroid: Option<&dyn Matroid> = quota.as_ref().map(|mat| mat as &dyn Matroid);

    let started = Instant::now();
    let result = run_algorithm(algorithm, &profile, matroid, &settings, args.seed)?;
    let ms = started.elapsed().as_millis();

    println!("algorithm: {}", algorithm.name());
    println!(
        "profile: {} ({} voters, {} candidates)",
        args.profile.display(),
        profile.voters(),
        profile.candidates()
    );
    let members: Vec<String> = result
        .committee
        .members()
        .iter()
        .map(u32::to_string)
        .collect();
    println!("committee: {}", members.join(" "));
    if let Some(mat) = &quota {
        println!(
            "quotas-satisfied: {}",
            mat.satisfies_quotas(&result.committee)
        );
    }
    println!("cc-score: {:.6}", result.score);
    println!("queries: {}", result.queries);
    println!("iterations: {}", result.iterations);
    println!("seed: {}", result.seed);

    if let Some(out) = &args.out {
        let record = ExperimentRecord {
            dataset: file_stem(&args.profile),
            algorithm,
            k: args.k,
            m_budget: args.m_budget,
            p: args.p,
            trial: 0,
            seed: args.seed,
            cc: result.score,
            relative: 1.0,
            queries: result.queries,
            ms,
        };
        let mut table = String::new();
        if !out.exists() {
            table.push_str(CSV_HEADER);
            table.push('\n');
        } else {
            table = fs::read_to_string(out)
                .with_context(|| format!("reading existing CSV {}", out.display()))?;
        }
        table.push_str(&record.csv_row());
        table.push('\n');
        fs::write(out, table).with_context(|| format!("writing CSV {}", out.display()))?;
        println!("csv: {}", out.display());
    }
    Ok(())
}

fn parse_m_levels(tokens: &[String]) -> Result<Vec<Option<u64>>> {
    tokens
        .iter()
        .map(|token| {
            if token == "full" {
                Ok(None)
            } else {
                token.parse::<u64>().map(Some).with_context(|| {
                    format!("invalid M level {token:?}; expected \"full\" or a positive integer")
                })
            }
        })
        .collect()
}

fn experiment_datasets(args: &ExperimentArgs) -> Result<Vec<Dataset>> {
    let mut datasets = Vec::new();
    for path in &args.profile {
        let profile = ApprovalProfile::read_file(path)
            .with_context(|| format!("reading profile {}", path.display()))?;
        datasets.push(Dataset {
            id: file_stem(path),
            profile,
        });
    }
    for i in 0..args.synthetic {
        let params = ResampleParams::new(
            args.q,
            args.phi,
            args.n,
            args.m,
            args.seed.wrapping_add(i as u64),
        )?;
        datasets.push(Dataset {
            id: format!("synthetic-{i:02}"),
            profile: resample_election(&params),
        });
    }
    if datasets.is_empty() {
        bail!("no datasets: pass --profile files or --synthetic with a positive count");
    }
    Ok(datasets)
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

fn score_chart(records: &[ExperimentRecord], p_ref: f64) -> Option<committee_core::Result<String>> {
    let mut by_dataset: BTreeMap<&str, BTreeMap<&str, Vec<f64>>> = BTreeMap::new();
    for record in records {
        if record.m_budget.is_none() && record.p == p_ref {
            by_dataset
                .entry(&record.dataset)
                .or_default()
                .entry(record.algorithm.name())
                .or_default()
                .push(record.cc);
        }
    }
    if by_dataset.is_empty() {
        return None;
    }
    let groups: Vec<BarGroup> = by_dataset
        .iter()
        .map(|(dataset, algorithms)| BarGroup {
            label: (*dataset).to_string(),
            bars: algorithms
                .iter()
                .map(|(name, scores)| {
                    let (mean, sd) = mean_sd(scores);
                    Bar {
                        label: (*name).to_string(),
                        mean,
                        sd,
                    }
                })
                .collect(),
        })
        .collect();
    Some(bar_chart(
        &format!("Coverage by dataset (p={p_ref})"),
        "mean coverage score",
        &groups,
    ))
}

fn trend_chart(records: &[ExperimentRecord]) -> Option<committee_core::Result<String>> {
    let budgeted: Vec<ExperimentRecord> = records
        .iter()
        .filter(|r| r.m_budget.is_some())
        .cloned()
        .collect();
    if budgeted.is_empty() {
        return None;
    }
    let series: Vec<LineSeries> = {
        let mut by_arm: BTreeMap<(&str, String), Vec<&ExperimentRecord>> = BTreeMap::new();
        for record in &budgeted {
            by_arm
                .entry((record.algorithm.name(), format!("{}", record.p)))
                .or_default()
                .push(record);
        }
        by_arm
            .into_iter()
            .map(|((name, p), rows)| {
                let mut by_level: BTreeMap<u64, Vec<f64>> = BTreeMap::new();
                for row in rows {
                    by_level
                        .entry(row.m_budget.expect("budgeted rows only"))
                        .or_default()
                        .push(row.relative);
                }
                LineSeries {
                    label: format!("{name} p={p}"),
                    points: by_level
                        .into_iter()
                        .map(|(level, values)| {
                            let (mean, sd) = mean_sd(&values);
                            LinePoint {
                                x: level as f64,
                                mean,
                                sd,
                            }
                        })
                        .collect(),
                }
            })
            .collect()
    };
    Some(line_chart(
        "Relative score by per-voter budget",
        "per-voter budget M",
        "mean relative score",
        &series,
    ))
}

fn cmd_experiment(args: ExperimentArgs) -> Result<()> {
    let datasets = experiment_datasets(&args)?;
    let algorithms = args
        .algo
        .iter()
        .map(|name| AlgorithmId::parse(name))
        .collect::<committee_core::Result<Vec<_>>>()?;
    let config = ExperimentConfig {
        algorithms,
        settings: args.params.settings(args.k),
        m_levels: parse_m_levels(&args.m_levels)?,
        p_levels: args.p.clone(),
        trials: args.trials,
        base_seed: args.seed,
    };

    let (records, failures) = run_experiment(&datasets, &config)?;
    for failure in &failures {
        eprintln!("cell failed: {failure}");
    }

    let table = write_csv(&records);
    match &args.out {
        Some(path) => {
            fs::write(path, &table).with_context(|| format!("writing CSV {}", path.display()))?;
            eprintln!("csv: {} ({} rows)", path.display(), records.len());
        }
        None => print!("{table}"),
    }

    let mut summary =
        String::from("algorithm            M     p      runs  mean-cc  sd-cc    mean-rel sd-rel\n");
    for cell in summarize(&records) {
        let m_text = match cell.m_budget {
            Some(level) => level.to_string(),
            None => "full".to_string(),
        };
        summary.push_str(&format!(
            "{:<20} {:<5} {:<6} {:<5} {:<8.4} {:<8.4} {:<8.4} {:<8.4}\n",
            cell.algorithm.name(),
            m_text,
            cell.p,
            cell.runs,
            cell.mean_cc,
            cell.sd_cc,
            cell.mean_relative,
            cell.sd_relative,
        ));
    }
    eprint!("{summary}");

    if let Some(dir) = &args.plot {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating plot directory {}", dir.display()))?;
        let p_ref = config.p_levels[0];
        if let Some(chart) = score_chart(&records, p_ref) {
            let path = dir.join("scores.svg");
            fs::write(&path, chart?)
                .with_context(|| format!("writing chart {}", path.display()))?;
            eprintln!("plot: {}", path.display());
        }
        if let Some(chart) = trend_chart(&records) {
            let path = dir.join("trend.svg");
            fs::write(&path, chart?)
                .with_context(|| format!("writing chart {}", path.display()))?;
            eprintln!("plot: {}", path.display());
        }
    }
    Ok(())
}

fn cmd_calc(command: CalcCommand) -> Result<()> {
    match command {
        CalcCommand::GreedyBudget(args) => {
            let (eps, ell) = required_sample_size_greedy(args.gamma, args.delta, args.m, args.k)?;
            let family = query_family_count(args.m, args.k, args.t)?;
            let budget = query_budget_greedy(args.gamma, args.delta, args.m, args.k, args.t)?;
            println!("epsilon: {eps:.10}");
            println!("sample-size: {ell}");
            println!("query-sets-per-step: {family}");
            println!("total-queries: {budget}");
        }
        CalcCommand::LsBudget(args) => {
            let beta = match args.beta {
                Some(beta) => beta,
                None => beta_from_gamma(args.c2, args.gamma, args.k)?,
            };
            let alphas = AlphaSequence::new(args.k)?;
            let alpha_k = alphas.get(args.k);
            let (eps, ell) =
                required_sample_size_ls(beta, args.xi, args.delta, args.m, args.k, alpha_k)?;
            let cap = ls_iteration_cap(args.xi, alpha_k, beta)?;
            let family = query_family_count(args.m, args.k, args.t)?;
            let budget =
                query_budget_ls(beta, args.xi, args.delta, args.m, args.k, args.t, alpha_k)?;
            println!("beta: {beta:.10}");
            println!("margin: {eps:.10}");
            println!("sample-size: {ell}");
            println!("iteration-cap: {cap}");
            println!("query-sets-per-sweep: {family}");
            println!("total-queries: {budget}");
        }
        CalcCommand::InaccurateRepeats(args) => {
            let repeats = required_repeats_inaccurate(args.p, args.delta, args.n, args.m)?;
            let total = repeats * args.n as u64 * args.m as u64;
            println!("repeats: {repeats}");
            println!("total-queries: {total}");
        }
    }
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<()> {
    fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("creating output directory {}", args.out_dir.display()))?;
    let mut fractions = Vec::with_capacity(args.count);
    for i in 0..args.count {
        let params = ResampleParams::new(
            args.q,
            args.phi,
            args.n,
            args.m,
            args.seed.wrapping_add(i as u64),
        )?;
        let profile = resample_election(&params);
        fractions.push(fit_q(&profile));
        let path = args.out_dir.join(format!("election-{i:03}.txt"));
        profile
            .write_file(&path)
            .with_context(|| format!("writing election {}", path.display()))?;
    }
    let (mean, sd) = mean_sd(&fractions);
    println!(
        "wrote {} elections to {} (n={}, m={})",
        args.count,
        args.out_dir.display(),
        args.n,
        args.m
    );
    println!(
        "mean-approval-fraction: {mean:.6} (sd {sd:.6}, target q {})",
        args.q
    );
    Ok(())
}

fn read_manifest(path: &Path) -> Result<BTreeSet<String>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading manifest {}", path.display()))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(str::to_string)
        .collect())
}

fn cmd_ingest(args: IngestArgs) -> Result<()> {
    let manifest = match &args.manifest {
        Some(path) => Some(read_manifest(path)?),
        None => None,
    };
    let options = ParseOptions {
        has_header: args.has_header,
        metadata_columns: args.metadata_columns,
        codes: VoteCodes {
            approve: args.approve_code.clone(),
            disapprove: args.disapprove_code.clone(),
            neutral: args.neutral_code.clone(),
            missing: args.missing_code.clone(),
        },
    };
    fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("creating output directory {}", args.out_dir.display()))?;

    let mut profiles: Vec<(String, ApprovalProfile)> = Vec::new();
    let mut errors = Vec::new();
    for path in &args.input {
        let id = file_stem(path);
        if let Some(manifest) = &manifest {
            if !manifest.contains(&id) {
                println!("skipping {id}: not in manifest");
                continue;
            }
        }
        let outcome = read_votes_file(path, &options)
            .and_then(|raw| preprocess(&raw))
            .map_err(anyhow::Error::from)
            .and_then(|(profile, report)| {
                let out = args.out_dir.join(format!("{id}.profile.txt"));
                profile
                    .write_file(&out)
                    .with_context(|| format!("writing profile {}", out.display()))?;
                Ok((profile, report, out))
            });
        match outcome {
            Ok((profile, report, out)) => {
                println!(
                    "{id}: voters {} -> {}, statements {} -> {} \
                     ({} majority statements, {} no-vote and {} no-approval voters removed, \
                     {} cells filled as disapprove) -> {}",
                    report.original_voters,
                    report.final_voters,
                    report.original_statements,
                    report.final_statements,
                    report.removed_statements,
                    report.removed_no_vote_voters,
                    report.removed_no_approval_voters,
                    report.filled_entries,
                    out.display()
                );
                profiles.push((id, profile));
            }
            Err(error) => {
                eprintln!("{id}: {error:#}");
                errors.push(id);
            }
        }
    }

    if profiles.is_empty() {
        bail!("no datasets ingested");
    }
    let qs: Vec<f64> = profiles.iter().map(|(_, p)| fit_q(p)).collect();
    let (q_agg, _) = mean_sd(&qs);
    let grid = default_phi_grid();
    let mut phis = Vec::with_capacity(profiles.len());
    for (id, profile) in &profiles {
        let phi =
            fit_phi(profile, q_agg, &grid).with_context(|| format!("fitting spread for {id}"))?;
        phis.push(phi);
    }
    let (phi_agg, _) = mean_sd(&phis);
    println!("datasets: {}", profiles.len());
    println!("fitted-q: {q_agg:.4}");
    println!("fitted-phi: {phi_agg:.3}");

    if !errors.is_empty() {
        bail!(
            "{} input file(s) failed: {}",
            errors.len(),
            errors.join(", ")
        );
    }
    Ok(())
}

//! Synthetic approval elections and the machinery for fitting their
//! parameters to real data.
//!
//! The generator perturbs a shared central ballot: each voter copies every
//! central vote independently with probability `1 - phi` and redraws it
//! with probability `phi`, approving with probability `q`. Fitting goes the
//! other way: [`fit_q`] reads the overall approval rate off a profile and
//! [`fit_phi`] grid-searches the spread whose limiting approval-fraction
//! vector sits closest to the observed one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::profile::ApprovalProfile;

fn check_fraction(name: &str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) || value.is_nan() {
        return Err(Error::arg(format!(
            "{name} must lie in [0, 1], got {value}"
        )));
    }
    Ok(())
}

/// Parameters of the resampling generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResampleParams {
    /// Approval probability, also the size of the central ballot as a
    /// fraction of `m`.
    pub q: f64,
    /// Spread: probability that a vote is redrawn instead of copied.
    pub phi: f64,
    /// Number of voters.
    pub n: usize,
    /// Number of candidates.
    pub m: usize,
    /// Seed for the generator's random stream.
    pub seed: u64,
}

impl ResampleParams {
    /// Validates ranges: `q` and `phi` in `[0, 1]`, at least one voter and
    /// one candidate.
    pub fn new(q: f64, phi: f64, n: usize, m: usize, seed: u64) -> Result<Self> {
        check_fraction("q", q)?;
        check_fraction("phi", phi)?;
        if n == 0 || m == 0 {
            return Err(Error::arg("election dimensions must be positive"));
        }
        Ok(ResampleParams { q, phi, n, m, seed })
    }
}

/// Draws one election from the resampling model.
///
/// The central ballot approves the `floor(q * m)` lowest-indexed
/// candidates. Output is bit-reproducible for a fixed seed: `phi = 0`
/// yields `n` copies of the central ballot, `phi = 1` makes every vote an
/// independent coin with approval probability `q`.
pub fn resample_election(params: &ResampleParams) -> ApprovalProfile {
    let central_size = (params.q * params.m as f64).floor() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut ballots = Vec::with_capacity(params.n);
    for _ in 0..params.n {
        let mut ballot = Vec::new();
        for c in 0..params.m {
            let approve = if params.phi > 0.0 && rng.gen_bool(params.phi) {
                params.q > 0.0 && rng.gen_bool(params.q)
            } else {
                c < central_size
            };
            if approve {
                ballot.push(c as u32);
            }
        }
        ballots.push(ballot);
    }
    ApprovalProfile::new(params.m, ballots).expect("generated ballots are in range")
}

/// Per-candidate approval fractions, sorted non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct ApprovalwiseVector(Vec<f64>);

impl ApprovalwiseVector {
    fn new(mut fractions: Vec<f64>) -> Self {
        fractions.sort_by(|a, b| b.partial_cmp(a).expect("fractions are finite"));
        ApprovalwiseVector(fractions)
    }

    /// The sorted fractions.
    pub fn values(&self) -> &[f64] {
        &self.0
    }

    /// Number of candidates the vector describes.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the vector is empty (it never is for a valid profile).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sorted per-candidate approval fractions of a profile.
pub fn approvalwise_vector(profile: &ApprovalProfile) -> ApprovalwiseVector {
    let n = profile.voters() as f64;
    ApprovalwiseVector::new(
        profile
            .approval_counts()
            .into_iter()
            .map(|count| count as f64 / n)
            .collect(),
    )
}

/// The approval-fraction vector that resampled elections approach as the
/// number of voters grows: `floor(q * m)` entries of `(1 - phi) + phi * q`
/// followed by `phi * q`.
pub fn limit_vector(q: f64, phi: f64, m: usize) -> Result<ApprovalwiseVector> {
    check_fraction("q", q)?;
    check_fraction("phi", phi)?;
    if m == 0 {
        return Err(Error::arg("candidate count must be positive"));
    }
    let central_size = (q * m as f64).floor() as usize;
    let high = (1.0 - phi) + phi * q;
    let low = phi * q;
    let mut fractions = vec![high; central_size];
    fractions.resize(m, low);
    Ok(ApprovalwiseVector(fractions))
}

/// Normalized L1 distance `(1/m) * sum |a_j - b_j|` between two sorted
/// fraction vectors of equal length.
pub fn approvalwise_distance(a: &ApprovalwiseVector, b: &ApprovalwiseVector) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::arg(format!(
            "vectors describe {} and {} candidates",
            a.len(),
            b.len()
        )));
    }
    let total: f64 = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).abs())
        .sum();
    Ok(total / a.len() as f64)
}

/// Overall approval rate of a profile: total approvals over `n * m`.
pub fn fit_q(profile: &ApprovalProfile) -> f64 {
    profile.total_approvals() as f64 / (profile.voters() * profile.candidates()) as f64
}

/// The grid value whose limit vector (at the given `q`) lies closest to
/// the profile's approval-fraction vector; ties go to the earliest grid
/// entry, so an ascending grid prefers the smallest spread.
pub fn fit_phi(profile: &ApprovalProfile, q: f64, grid: &[f64]) -> Result<f64> {
    check_fraction("q", q)?;
    if grid.is_empty() {
        return Err(Error::arg("phi grid must be nonempty"));
    }
    let observed = approvalwise_vector(profile);
    let mut best: Option<(f64, f64)> = None;
    for &phi in grid {
        check_fraction("grid phi", phi)?;
        let limit = limit_vector(q, phi, profile.candidates())?;
        let distance = approvalwise_distance(&observed, &limit)?;
        if best.is_none_or(|(d, _)| distance < d) {
            best = Some((distance, phi));
        }
    }
    Ok(best.expect("grid is nonempty").1)
}

/// The standard fitting grid: 0, 1/100, ..., 1.
pub fn default_phi_grid() -> Vec<f64> {
    (0..=100).map(|i| i as f64 / 100.0).collect()
}

//! Auxiliary objectives guiding local search.
//!
//! Plain CC score is a poor guide for local search: a swap that keeps the
//! same voters covered but covers some of them twice looks worthless even
//! though it builds slack for later swaps. The non-oblivious objective
//! `f(W) = (1/n) Σ_i α_{h_i(W)}` weights each voter by how often the
//! committee covers them, with weights `α_0 = 0`, `α_1 = 1 − 1/e`,
//! `α_{j+1} = (j+1)α_j − jα_{j−1} − 1/e`. This module also provides the PAV
//! harmonic score used by the local-search PAV baseline.

use crate::error::{Error, Result};
use crate::profile::{ApprovalProfile, Committee};

/// Weights `α_0..α_K` for the coverage-count objective.
///
/// The recurrence-built sequence from [`AlphaSequence::new`] is strictly
/// increasing with non-increasing differences, every difference lying in
/// `(0, 1 − 1/e]`.
#[derive(Debug, Clone)]
pub struct AlphaSequence {
    values: Vec<f64>,
}

impl AlphaSequence {
    /// Computes `α_0..α_max_index` by the forward recurrence.
    ///
    /// `max_index` must be at least 1 and should be at least the committee
    /// size so every coverage count has a weight.
    pub fn new(max_index: usize) -> Result<Self> {
        if max_index == 0 {
            return Err(Error::arg("alpha sequence needs max index >= 1"));
        }
        let inv_e = (-1.0f64).exp();
        let mut values = vec![0.0; max_index + 1];
        values[1] = 1.0 - inv_e;
        for j in 1..max_index {
            values[j + 1] = (j + 1) as f64 * values[j] - j as f64 * values[j - 1] - inv_e;
        }
        Ok(AlphaSequence { values })
    }

    /// The oblivious weights `α_0 = 0`, `α_j = 1` for `j ≥ 1`, under which
    /// [`aux_score`] equals plain coverage.
    pub fn oblivious(max_index: usize) -> Result<Self> {
        if max_index == 0 {
            return Err(Error::arg("alpha sequence needs max index >= 1"));
        }
        let mut values = vec![1.0; max_index + 1];
        values[0] = 0.0;
        Ok(AlphaSequence { values })
    }

    /// Largest index the sequence covers.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// The weight `α_j`. Panics if `j` exceeds [`AlphaSequence::max_index`].
    pub fn get(&self, j: usize) -> f64 {
        self.values[j]
    }

    /// All weights, `α_0` first.
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// The non-oblivious objective `f(W) = (1/n) Σ_i α_{h_i(W)}`.
///
/// Fails if any voter's coverage count exceeds the sequence's range.
pub fn aux_score(profile: &ApprovalProfile, w: &Committee, alphas: &AlphaSequence) -> Result<f64> {
    let coverage = profile.coverage_vector(w)?;
    let mut sum = 0.0;
    for &h in &coverage {
        if h as usize > alphas.max_index() {
            return Err(Error::arg(format!(
                "coverage count {h} exceeds alpha range {}",
                alphas.max_index()
            )));
        }
        sum += alphas.get(h as usize);
    }
    Ok(sum / profile.voters() as f64)
}

/// Change in [`aux_score`] when `c_in` replaces `c_out` in `w`.
///
/// Each voter's contribution moves by at most `α_1 − α_0` in magnitude.
/// Requires `c_out ∈ W` and `c_in ∉ W`.
pub fn aux_swap_delta(
    profile: &ApprovalProfile,
    w: &Committee,
    c_in: u32,
    c_out: u32,
    alphas: &AlphaSequence,
) -> Result<f64> {
    if c_in == c_out {
        return Err(Error::arg("swap candidates must differ"));
    }
    if !w.contains(c_out) {
        return Err(Error::arg(format!("{c_out} is not a committee member")));
    }
    if w.contains(c_in) {
        return Err(Error::arg(format!("{c_in} is already a committee member")));
    }
    if (c_in as usize) >= profile.candidates() {
        return Err(Error::arg(format!("candidate {c_in} out of range")));
    }
    let coverage = profile.coverage_vector(w)?;
    if w.len() > alphas.max_index() {
        return Err(Error::arg(format!(
            "committee size {} exceeds alpha range {}",
            w.len(),
            alphas.max_index()
        )));
    }
    let table = SwapTable::from_profile(profile, &coverage, c_in, c_out, w.len());
    Ok(table.delta(alphas, profile.voters() as u64))
}

/// PAV score `Σ_i H(h_i(W))` with `H` the harmonic partial sum, `H(0) = 0`.
///
/// Unnormalized, matching the usual swap-threshold convention.
pub fn pav_score(profile: &ApprovalProfile, w: &Committee) -> Result<f64> {
    let coverage = profile.coverage_vector(w)?;
    Ok(coverage.iter().map(|&h| harmonic(h as usize)).sum())
}

fn harmonic(j: usize) -> f64 {
    (1..=j).map(|x| 1.0 / x as f64).sum()
}

/// Voter counts describing an exchange, grouped by coverage count.
///
/// Only voters approving exactly one of the swapped candidates change their
/// coverage: `gains[h]` counts voters at coverage `h` approving the incoming
/// candidate only, `losses[h]` those approving the outgoing candidate only.
/// Both the complete-information local search and its sampled counterpart
/// build this table and reduce it with [`SwapTable::delta`], so equal counts
/// produce bit-identical deltas.
#[derive(Debug, Clone)]
pub(crate) struct SwapTable {
    gains: Vec<u64>,
    losses: Vec<u64>,
}

impl SwapTable {
    pub(crate) fn new(k: usize) -> Self {
        SwapTable {
            gains: vec![0; k + 1],
            losses: vec![0; k + 1],
        }
    }

    /// Tallies one voter at coverage `h` approving only the incoming candidate.
    pub(crate) fn add_gain(&mut self, h: usize) {
        self.gains[h] += 1;
    }

    /// Tallies one voter at coverage `h` approving only the outgoing candidate.
    pub(crate) fn add_loss(&mut self, h: usize) {
        self.losses[h] += 1;
    }

    /// Builds the table from full ballots and a precomputed coverage vector.
    pub(crate) fn from_profile(
        profile: &ApprovalProfile,
        coverage: &[u32],
        c_in: u32,
        c_out: u32,
        k: usize,
    ) -> Self {
        let mut table = SwapTable::new(k);
        for &voter in profile.approvers(c_in) {
            if !profile.approves(voter as usize, c_out) {
                table.add_gain(coverage[voter as usize] as usize);
            }
        }
        for &voter in profile.approvers(c_out) {
            if !profile.approves(voter as usize, c_in) {
                table.add_loss(coverage[voter as usize] as usize);
            }
        }
        table
    }

    /// Reduces the table to the objective change, dividing by `denom` voters.
    ///
    /// Summation order is fixed (gains by ascending coverage, then losses) so
    /// identical tables always reduce to identical floating-point values.
    pub(crate) fn delta(&self, alphas: &AlphaSequence, denom: u64) -> f64 {
        let k = self.gains.len() - 1;
        // A gain at full coverage would require approving the outgoing member
        // and not approving it at once; a loss at zero coverage likewise.
        debug_assert_eq!(self.gains[k], 0);
        debug_assert_eq!(self.losses[0], 0);
        let mut sum = 0.0;
        for h in 0..k {
            if self.gains[h] > 0 {
                sum += self.gains[h] as f64 * (alphas.get(h + 1) - alphas.get(h));
            }
        }
        for h in 1..=k {
            if self.losses[h] > 0 {
                sum += self.losses[h] as f64 * (alphas.get(h - 1) - alphas.get(h));
            }
        }
        sum / denom as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::fixture;

    const INV_E: f64 = 0.36787944117144233;
    const TOL: f64 = 1e-12;

    #[test]
    fn alpha_first_values_match_closed_forms() {
        let a = AlphaSequence::new(3).unwrap();
        assert!((a.get(0)).abs() < TOL);
        assert!((a.get(1) - (1.0 - INV_E)).abs() < TOL);
        assert!((a.get(2) - (2.0 - 3.0 * INV_E)).abs() < TOL);
        assert!((a.get(3) - (4.0 - 8.0 * INV_E)).abs() < TOL);
        assert!((a.get(1) - 0.632120558829).abs() < 1e-9);
        assert!((a.get(2) - 0.896361676486).abs() < 1e-9);
        assert!((a.get(3) - 1.056964470628).abs() < 1e-9);
    }

    #[test]
    fn alpha_recurrence_holds_to_tolerance() {
        let a = AlphaSequence::new(12).unwrap();
        for j in 1..12 {
            let expect = (j + 1) as f64 * a.get(j) - j as f64 * a.get(j - 1) - INV_E;
            assert!(
                (a.get(j + 1) - expect).abs() < TOL,
                "recurrence broken at {j}"
            );
        }
    }

    #[test]
    fn alpha_increasing_with_shrinking_gaps() {
        let a = AlphaSequence::new(12).unwrap();
        for j in 0..12 {
            let diff = a.get(j + 1) - a.get(j);
            assert!(diff > 0.0, "not increasing at {j}");
            assert!(diff <= 1.0 - INV_E + TOL, "difference above 1 - 1/e at {j}");
            if j + 2 <= 12 {
                assert!(
                    a.get(j + 2) - a.get(j + 1) <= diff + TOL,
                    "gaps grow at {j}"
                );
            }
        }
    }

    #[test]
    fn alpha_rejects_zero_length() {
        assert!(AlphaSequence::new(0).is_err());
    }

    #[test]
    fn aux_score_examples() {
        let alphas = AlphaSequence::new(2).unwrap();
        let p = ApprovalProfile::new(3, vec![vec![0, 1], vec![]]).unwrap();
        let w = Committee::new(vec![0, 1], 2).unwrap();
        // Coverage (2, 0): f = α_2 / 2.
        assert!((aux_score(&p, &w, &alphas).unwrap() - 0.448180838243).abs() < 1e-9);
        assert_eq!(aux_score(&p, &Committee::empty(2), &alphas).unwrap(), 0.0);
        let single = ApprovalProfile::new(2, vec![vec![0], vec![0]]).unwrap();
        let w0 = Committee::new(vec![0], 1).unwrap();
        assert!((aux_score(&single, &w0, &alphas).unwrap() - alphas.get(1)).abs() < TOL);
    }

    #[test]
    fn aux_score_rejects_out_of_range_coverage() {
        let alphas = AlphaSequence::new(1).unwrap();
        let p = ApprovalProfile::new(2, vec![vec![0, 1], vec![]]).unwrap();
        let w = Committee::new(vec![0, 1], 2).unwrap();
        assert!(aux_score(&p, &w, &alphas).is_err());
    }

    #[test]
    fn swap_delta_examples() {
        let alphas = AlphaSequence::new(2).unwrap();
        // Symmetric instance: swapping 0 for 1 relabels the covered voter.
        let p = ApprovalProfile::new(2, vec![vec![0], vec![1]]).unwrap();
        let w = Committee::new(vec![0], 1).unwrap();
        assert_eq!(aux_swap_delta(&p, &w, 1, 0, &alphas).unwrap(), 0.0);
        // Both candidates approved by nobody.
        let q = ApprovalProfile::new(3, vec![vec![1], vec![1]]).unwrap();
        let w0 = Committee::new(vec![0], 1).unwrap();
        assert_eq!(aux_swap_delta(&q, &w0, 2, 0, &alphas).unwrap(), 0.0);
    }

    #[test]
    fn swap_delta_rejects_bad_memberships() {
        let alphas = AlphaSequence::new(2).unwrap();
        let p = fixture();
        let w = Committee::new(vec![0], 2).unwrap();
        assert!(aux_swap_delta(&p, &w, 0, 0, &alphas).is_err());
        assert!(aux_swap_delta(&p, &w, 1, 2, &alphas).is_err());
        let w2 = Committee::new(vec![0, 1], 2).unwrap();
        assert!(aux_swap_delta(&p, &w2, 0, 1, &alphas).is_err());
    }

    #[test]
    fn swap_delta_is_antisymmetric() {
        let alphas = AlphaSequence::new(2).unwrap();
        let p = fixture();
        let w = Committee::new(vec![0, 1], 2).unwrap();
        let forward = aux_swap_delta(&p, &w, 2, 1, &alphas).unwrap();
        let mut w2 = w.clone();
        w2.swap(2, 1).unwrap();
        let back = aux_swap_delta(&p, &w2, 1, 2, &alphas).unwrap();
        assert!((forward + back).abs() < TOL);
    }

    #[test]
    fn unit_alphas_reduce_aux_to_cc() {
        // With α_0 = 0 and α_j = 1 for j >= 1 the objective is plain CC.
        let alphas = AlphaSequence {
            values: vec![0.0, 1.0, 1.0],
        };
        let p = fixture();
        let w = Committee::new(vec![0, 1], 2).unwrap();
        assert!((aux_score(&p, &w, &alphas).unwrap() - p.cc_score(&w).unwrap()).abs() < TOL);
    }

    #[test]
    fn pav_examples() {
        let p = fixture();
        let w = Committee::new(vec![0, 1], 2).unwrap();
        assert!((pav_score(&p, &w).unwrap() - 3.5).abs() < TOL);
        assert_eq!(pav_score(&p, &Committee::empty(2)).unwrap(), 0.0);
        let two = ApprovalProfile::new(2, vec![vec![0, 1]]).unwrap();
        assert!((pav_score(&two, &w).unwrap() - 1.5).abs() < TOL);
    }
}

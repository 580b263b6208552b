//! Approval ballots, committees, and the Chamberlin-Courant objective.
//!
//! An [`ApprovalProfile`] stores the ballots of `n` voters over `m`
//! candidates. The Chamberlin-Courant (CC) score of a committee `W` is the
//! fraction of voters approving at least one member of `W`; it coincides with
//! the unit-weight maximum-coverage objective when each candidate is read as
//! the set of voters approving them. Scores are counted in integers and
//! divided by `n` only at reporting boundaries so that algorithm comparisons
//! never depend on floating-point rounding.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Immutable approval ballots of `n` voters over candidates `0..m`.
///
/// Ballots are held three ways: as per-voter sorted index lists (iteration),
/// as a dense bit matrix (constant-time membership tests), and as per-candidate
/// approver lists (fast marginal-count scans). The profile never changes after
/// construction and is safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApprovalProfile {
    n: usize,
    m: usize,
    approvals: Vec<Vec<u32>>,
    approvers: Vec<Vec<u32>>,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl ApprovalProfile {
    /// Builds a profile from per-voter approval sets over candidates `0..m`.
    ///
    /// Each ballot must list distinct candidate indices below `m`; ballots are
    /// sorted internally. Requires at least one voter and one candidate.
    pub fn new(m: usize, ballots: Vec<Vec<u32>>) -> Result<Self> {
        let n = ballots.len();
        if n == 0 {
            return Err(Error::arg("a profile needs at least one voter"));
        }
        if m == 0 {
            return Err(Error::arg("a profile needs at least one candidate"));
        }
        let words_per_row = m.div_ceil(64);
        let mut bits = vec![0u64; n * words_per_row];
        let mut approvals = Vec::with_capacity(n);
        let mut approvers = vec![Vec::new(); m];
        for (voter, mut ballot) in ballots.into_iter().enumerate() {
            ballot.sort_unstable();
            for pair in ballot.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::arg(format!(
                        "voter {voter} approves candidate {} twice",
                        pair[0]
                    )));
                }
            }
            for &c in &ballot {
                if c as usize >= m {
                    return Err(Error::arg(format!(
                        "voter {voter} approves candidate {c}, but there are only {m} candidates"
                    )));
                }
                bits[voter * words_per_row + c as usize / 64] |= 1u64 << (c % 64);
                approvers[c as usize].push(voter as u32);
            }
            approvals.push(ballot);
        }
        Ok(ApprovalProfile {
            n,
            m,
            approvals,
            approvers,
            words_per_row,
            bits,
        })
    }

    /// Number of voters.
    pub fn voters(&self) -> usize {
        self.n
    }

    /// Number of candidates.
    pub fn candidates(&self) -> usize {
        self.m
    }

    /// Whether `voter` approves `candidate`. Constant time.
    pub fn approves(&self, voter: usize, candidate: u32) -> bool {
        debug_assert!(voter < self.n && (candidate as usize) < self.m);
        let word = self.bits[voter * self.words_per_row + candidate as usize / 64];
        word >> (candidate % 64) & 1 == 1
    }

    /// The sorted approval set of one voter.
    pub fn ballot(&self, voter: usize) -> &[u32] {
        &self.approvals[voter]
    }

    /// The sorted voters approving one candidate.
    pub fn approvers(&self, candidate: u32) -> &[u32] {
        &self.approvers[candidate as usize]
    }

    /// Per-candidate approval counts; column sums of the ballot matrix.
    pub fn approval_counts(&self) -> Vec<usize> {
        self.approvers.iter().map(Vec::len).collect()
    }

    /// Total number of approvals across all ballots.
    pub fn total_approvals(&self) -> usize {
        self.approvals.iter().map(Vec::len).sum()
    }

    /// Number of voters covered by `w`: `|{i : A(i) ∩ W ≠ ∅}|`.
    pub fn covered_count(&self, w: &Committee) -> Result<usize> {
        w.validate_against(self)?;
        Ok((0..self.n)
            .filter(|&i| w.members().iter().any(|&c| self.approves(i, c)))
            .count())
    }

    /// Chamberlin-Courant score of `w`: covered voters divided by `n`.
    pub fn cc_score(&self, w: &Committee) -> Result<f64> {
        Ok(self.covered_count(w)? as f64 / self.n as f64)
    }

    /// Number of voters newly covered when `c` joins `w`.
    ///
    /// Fails if `c` is already a member or out of range.
    pub fn marginal_gain_count(&self, w: &Committee, c: u32) -> Result<usize> {
        w.validate_against(self)?;
        if (c as usize) >= self.m {
            return Err(Error::arg(format!("candidate {c} out of range")));
        }
        if w.contains(c) {
            return Err(Error::arg(format!(
                "candidate {c} is already a committee member"
            )));
        }
        Ok(self
            .approvers(c)
            .iter()
            .filter(|&&i| !w.members().iter().any(|&x| self.approves(i as usize, x)))
            .count())
    }

    /// Increase in CC score from adding `c` to `w`.
    pub fn marginal_gain(&self, w: &Committee, c: u32) -> Result<f64> {
        Ok(self.marginal_gain_count(w, c)? as f64 / self.n as f64)
    }

    /// Per-voter representative counts `h_i(W) = |A(i) ∩ W|`.
    pub fn coverage_vector(&self, w: &Committee) -> Result<Vec<u32>> {
        w.validate_against(self)?;
        Ok((0..self.n)
            .map(|i| w.members().iter().filter(|&&c| self.approves(i, c)).count() as u32)
            .collect())
    }

    /// Parses the canonical text format: a `"n m"` header line followed by
    /// exactly `n` lines of space-separated approved candidate indices (an
    /// empty line is an empty ballot).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "no data rows".into(),
        })?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: "expected header \"n m\"".into(),
            })?;
        let m: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: "expected header \"n m\"".into(),
            })?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: 1,
                message: "trailing tokens after \"n m\"".into(),
            });
        }
        let mut ballots = Vec::with_capacity(n);
        for (idx, line) in lines.by_ref().take(n).enumerate() {
            let mut ballot = Vec::new();
            for tok in line.split_whitespace() {
                let c: u32 = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 2,
                    message: format!("bad candidate index {tok:?}"),
                })?;
                ballot.push(c);
            }
            ballots.push(ballot);
        }
        if ballots.len() < n {
            return Err(Error::Parse {
                line: ballots.len() + 2,
                message: format!("expected {n} ballot lines, found {}", ballots.len()),
            });
        }
        for (extra, line) in lines.enumerate() {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: n + 2 + extra,
                    message: "unexpected content after last ballot".into(),
                });
            }
        }
        ApprovalProfile::new(m, ballots).map_err(|e| Error::Parse {
            line: 1,
            message: e.to_string(),
        })
    }

    /// Renders the canonical text format; inverse of [`ApprovalProfile::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for ballot in &self.approvals {
            let mut first = true;
            for c in ballot {
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{c}");
                first = false;
            }
            out.push('\n');
        }
        out
    }

    /// Reads a profile file in the canonical text format.
    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        ApprovalProfile::parse(&text)
    }

    /// Writes the canonical text format to `path`.
    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut file = fs::File::create(path)?;
        file.write_all(self.to_text().as_bytes())?;
        Ok(())
    }

    /// Writes the canonical text format to an arbitrary writer.
    pub fn write_to(&self, mut w: impl io::Write) -> io::Result<()> {
        w.write_all(self.to_text().as_bytes())
    }
}

/// A committee: distinct candidate indices with a fixed capacity `k`.
///
/// Members are kept sorted ascending. A committee may hold fewer than `k`
/// members while it is being built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Committee {
    members: Vec<u32>,
    capacity: usize,
}

impl Committee {
    /// Builds a committee from distinct member indices and a capacity.
    pub fn new(mut members: Vec<u32>, capacity: usize) -> Result<Self> {
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidCommittee(format!(
                    "duplicate member {}",
                    pair[0]
                )));
            }
        }
        if members.len() > capacity {
            return Err(Error::InvalidCommittee(format!(
                "{} members exceed capacity {capacity}",
                members.len()
            )));
        }
        Ok(Committee { members, capacity })
    }

    /// An empty committee with room for `capacity` members.
    pub fn empty(capacity: usize) -> Self {
        Committee {
            members: Vec::with_capacity(capacity),
            capacity,
        }
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    /// Maximum number of members.
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Current number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Whether the committee has no members.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `c` is a member.
    pub fn contains(&self, c: u32) -> bool {
        self.members.binary_search(&c).is_ok()
    }

    /// Adds a member, keeping the list sorted.
    pub fn add(&mut self, c: u32) -> Result<()> {
        if self.members.len() == self.capacity {
            return Err(Error::InvalidCommittee(format!(
                "cannot add {c}: committee already holds {} members",
                self.capacity
            )));
        }
        match self.members.binary_search(&c) {
            Ok(_) => Err(Error::InvalidCommittee(format!("duplicate member {c}"))),
            Err(pos) => {
                self.members.insert(pos, c);
                Ok(())
            }
        }
    }

    /// Replaces member `c_out` by non-member `c_in`, keeping the list sorted.
    pub fn swap(&mut self, c_in: u32, c_out: u32) -> Result<()> {
        if !self.contains(c_out) {
            return Err(Error::InvalidCommittee(format!("{c_out} is not a member")));
        }
        if self.contains(c_in) {
            return Err(Error::InvalidCommittee(format!(
                "{c_in} is already a member"
            )));
        }
        self.members.retain(|&c| c != c_out);
        let pos = self.members.binary_search(&c_in).unwrap_err();
        self.members.insert(pos, c_in);
        Ok(())
    }

    /// Checks the committee against a profile: capacity and every member must
    /// fit within the candidate range.
    pub fn validate_against(&self, profile: &ApprovalProfile) -> Result<()> {
        if self.capacity > profile.candidates() {
            return Err(Error::InvalidCommittee(format!(
                "capacity {} exceeds candidate count {}",
                self.capacity,
                profile.candidates()
            )));
        }
        if let Some(&c) = self
            .members
            .iter()
            .find(|&&c| c as usize >= profile.candidates())
        {
            return Err(Error::InvalidCommittee(format!(
                "member {c} out of range for {} candidates",
                profile.candidates()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) use tests::fixture;

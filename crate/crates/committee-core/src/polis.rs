//! Ingestion of participation vote matrices and the cleaning pipeline that
//! turns them into approval profiles.
//!
//! Raw matrices record one of four states per (participant, statement)
//! cell. Cleaning removes statements approved by more than half of the
//! voters, removes voters who never voted or never approved anything, and
//! maps the remaining neutral and missing cells to disapprove. Removals can
//! cascade (dropping a statement can strand a voter and vice versa), so the
//! two removal steps repeat until stable; this makes the pipeline
//! idempotent.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::profile::ApprovalProfile;

/// One cell of a raw vote matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vote {
    /// The participant approves the statement.
    Approve,
    /// The participant disapproves the statement.
    Disapprove,
    /// The participant saw the statement and passed.
    Neutral,
    /// The participant never voted on the statement.
    Missing,
}

/// Text codes for the four vote states as they appear in export files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoteCodes {
    /// Code for approval.
    pub approve: String,
    /// Code for disapproval.
    pub disapprove: String,
    /// Code for an explicit pass.
    pub neutral: String,
    /// Code for a cell the participant never voted on.
    pub missing: String,
}

impl Default for VoteCodes {
    fn default() -> Self {
        VoteCodes {
            approve: "1".into(),
            disapprove: "-1".into(),
            neutral: "0".into(),
            missing: String::new(),
        }
    }
}

impl VoteCodes {
    fn decode(&self, cell: &str) -> Option<Vote> {
        let cell = cell.trim();
        if cell == self.approve {
            Some(Vote::Approve)
        } else if cell == self.disapprove {
            Some(Vote::Disapprove)
        } else if cell == self.neutral {
            Some(Vote::Neutral)
        } else if cell == self.missing {
            Some(Vote::Missing)
        } else {
            None
        }
    }

    fn encode(&self, vote: Vote) -> &str {
        match vote {
            Vote::Approve => &self.approve,
            Vote::Disapprove => &self.disapprove,
            Vote::Neutral => &self.neutral,
            Vote::Missing => &self.missing,
        }
    }
}

/// Layout of a delimited vote-matrix file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParseOptions {
    /// Whether the first line names the columns.
    pub has_header: bool,
    /// Number of leading non-vote columns (participant id, tallies, ...).
    pub metadata_columns: usize,
    /// Vote-state codes.
    pub codes: VoteCodes,
}

/// A rectangular participants-by-statements vote matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawVoteMatrix {
    participant_ids: Vec<String>,
    statement_ids: Vec<String>,
    votes: Vec<Vec<Vote>>,
}

impl RawVoteMatrix {
    /// Builds a matrix from rows of votes, labeling participants and
    /// statements by their indices.
    pub fn new(votes: Vec<Vec<Vote>>) -> Result<Self> {
        if votes.is_empty() {
            return Err(Error::arg("matrix needs at least one participant"));
        }
        let width = votes[0].len();
        if width == 0 {
            return Err(Error::arg("matrix needs at least one statement"));
        }
        if let Some(bad) = votes.iter().position(|row| row.len() != width) {
            return Err(Error::arg(format!(
                "row {bad} has {} statements, expected {width}",
                votes[bad].len()
            )));
        }
        Ok(RawVoteMatrix {
            participant_ids: (0..votes.len()).map(|i| i.to_string()).collect(),
            statement_ids: (0..width).map(|j| j.to_string()).collect(),
            votes,
        })
    }

    /// Number of participants (rows).
    pub fn participants(&self) -> usize {
        self.votes.len()
    }

    /// Number of statements (columns).
    pub fn statements(&self) -> usize {
        self.votes[0].len()
    }

    /// The vote in one cell.
    pub fn vote(&self, participant: usize, statement: usize) -> Vote {
        self.votes[participant][statement]
    }

    /// External participant labels, one per row.
    pub fn participant_ids(&self) -> &[String] {
        &self.participant_ids
    }

    /// External statement labels, one per column.
    pub fn statement_ids(&self) -> &[String] {
        &self.statement_ids
    }
}

/// Parses a delimited vote matrix.
///
/// Every data line must decode to the same number of vote columns; the
/// error for a malformed or unknown cell names its line and column.
pub fn parse_votes(text: &str, options: &ParseOptions) -> Result<RawVoteMatrix> {
    let mut lines: Vec<(usize, &str)> = text.lines().enumerate().collect();
    while lines.last().is_some_and(|(_, l)| l.trim().is_empty()) {
        lines.pop();
    }
    let mut statement_ids = Vec::new();
    if options.has_header {
        if lines.is_empty() {
            return Err(Error::Parse {
                line: 1,
                message: "no data rows".into(),
            });
        }
        let (_, header) = lines.remove(0);
        statement_ids = header
            .split(',')
            .skip(options.metadata_columns)
            .map(|s| s.trim().to_string())
            .collect();
    }
    if lines.is_empty() {
        return Err(Error::Parse {
            line: if options.has_header { 2 } else { 1 },
            message: "no data rows".into(),
        });
    }

    let mut participant_ids = Vec::with_capacity(lines.len());
    let mut votes: Vec<Vec<Vote>> = Vec::with_capacity(lines.len());
    let mut width = None;
    for (index, line) in lines {
        let line_number = index + 1;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() <= options.metadata_columns {
            return Err(Error::Parse {
                line: line_number,
                message: format!(
                    "expected more than {} columns, found {}",
                    options.metadata_columns,
                    fields.len()
                ),
            });
        }
        let row_width = fields.len() - options.metadata_columns;
        match width {
            None => width = Some(row_width),
            Some(w) if w != row_width => {
                return Err(Error::Parse {
                    line: line_number,
                    message: format!("row has {row_width} vote columns, expected {w}"),
                });
            }
            _ => {}
        }
        let mut row = Vec::with_capacity(row_width);
        for (offset, cell) in fields[options.metadata_columns..].iter().enumerate() {
            match options.codes.decode(cell) {
                Some(vote) => row.push(vote),
                None => {
                    return Err(Error::Parse {
                        line: line_number,
                        message: format!(
                            "unknown vote code {:?} in column {}",
                            cell.trim(),
                            options.metadata_columns + offset + 1
                        ),
                    });
                }
            }
        }
        participant_ids.push(
            fields
                .first()
                .filter(|_| options.metadata_columns > 0)
                .map(|s| s.trim().to_string())
                .unwrap_or_else(|| votes.len().to_string()),
        );
        votes.push(row);
    }

    let width = width.expect("at least one data row");
    if statement_ids.len() != width {
        statement_ids = (0..width).map(|j| j.to_string()).collect();
    }
    Ok(RawVoteMatrix {
        participant_ids,
        statement_ids,
        votes,
    })
}

/// Reads and parses a vote-matrix file.
pub fn read_votes_file(path: impl AsRef<Path>, options: &ParseOptions) -> Result<RawVoteMatrix> {
    parse_votes(&fs::read_to_string(path)?, options)
}

/// Serializes a matrix with the given codes, one comma-separated line per
/// participant. Parsing the output with default options restores the votes.
pub fn write_votes(matrix: &RawVoteMatrix, codes: &VoteCodes) -> String {
    let mut out = String::new();
    for row in &matrix.votes {
        for (j, &vote) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", codes.encode(vote));
        }
        out.push('\n');
    }
    out
}

/// Tallies of everything the cleaning pipeline did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreprocessReport {
    /// Participants in the raw matrix.
    pub original_voters: usize,
    /// Statements in the raw matrix.
    pub original_statements: usize,
    /// Voters in the cleaned profile.
    pub final_voters: usize,
    /// Statements in the cleaned profile.
    pub final_statements: usize,
    /// Statements removed for being approved by more than half the voters.
    pub removed_statements: usize,
    /// Voters removed for never voting on any retained statement.
    pub removed_no_vote_voters: usize,
    /// Voters removed for approving no retained statement.
    pub removed_no_approval_voters: usize,
    /// Neutral or missing cells mapped to disapprove in the output.
    pub filled_entries: usize,
}

/// Cleans a raw matrix into an approval profile.
///
/// Repeats two removal steps until neither applies: statements approved by
/// strictly more than half of the remaining voters are dropped, then voters
/// with no votes or no approvals among the remaining statements are
/// dropped. Remaining neutral and missing cells count as disapprovals.
/// Fails if every voter is removed.
pub fn preprocess(raw: &RawVoteMatrix) -> Result<(ApprovalProfile, PreprocessReport)> {
    let n = raw.participants();
    let m = raw.statements();
    let mut voter_active = vec![true; n];
    let mut statement_active = vec![true; m];
    let mut removed_statements = 0;
    let mut removed_no_vote = 0;
    let mut removed_no_approval = 0;

    loop {
        let mut changed = false;
        let active_voters = voter_active.iter().filter(|&&a| a).count();
        if active_voters == 0 {
            return Err(Error::EmptyProfile(
                "every participant was removed during cleaning".into(),
            ));
        }
        for (j, statement_on) in statement_active.iter_mut().enumerate() {
            if !*statement_on {
                continue;
            }
            let approvals = voter_active
                .iter()
                .zip(&raw.votes)
                .filter(|&(&active, row)| active && row[j] == Vote::Approve)
                .count();
            if 2 * approvals > active_voters {
                *statement_on = false;
                removed_statements += 1;
                changed = true;
            }
        }
        for (voter_on, row) in voter_active.iter_mut().zip(&raw.votes) {
            if !*voter_on {
                continue;
            }
            let mut voted = false;
            let mut approved = false;
            for (&statement_on, vote) in statement_active.iter().zip(row) {
                if !statement_on {
                    continue;
                }
                match vote {
                    Vote::Approve => {
                        voted = true;
                        approved = true;
                    }
                    Vote::Disapprove | Vote::Neutral => voted = true,
                    Vote::Missing => {}
                }
            }
            if !voted {
                *voter_on = false;
                removed_no_vote += 1;
                changed = true;
            } else if !approved {
                *voter_on = false;
                removed_no_approval += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let kept_statements: Vec<usize> = (0..m).filter(|&j| statement_active[j]).collect();
    let mut filled = 0;
    let mut ballots = Vec::new();
    for (&active, row) in voter_active.iter().zip(&raw.votes) {
        if !active {
            continue;
        }
        let mut ballot = Vec::new();
        for (new_j, &j) in kept_statements.iter().enumerate() {
            match row[j] {
                Vote::Approve => ballot.push(new_j as u32),
                Vote::Disapprove => {}
                Vote::Neutral | Vote::Missing => filled += 1,
            }
        }
        ballots.push(ballot);
    }
    let final_voters = ballots.len();
    if kept_statements.is_empty() {
        return Err(Error::EmptyProfile(
            "every statement was removed during cleaning".into(),
        ));
    }
    let profile = ApprovalProfile::new(kept_statements.len(), ballots)?;
    let report = PreprocessReport {
        original_voters: n,
        original_statements: m,
        final_voters,
        final_statements: kept_statements.len(),
        removed_statements,
        removed_no_vote_voters: removed_no_vote,
        removed_no_approval_voters: removed_no_approval,
        filled_entries: filled,
    };
    Ok((profile, report))
}

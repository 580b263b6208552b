//! Committee selection from approval ballots.
//!
//! The library selects a committee of `k` candidates from approval ballots so
//! that as many voters as possible approve of at least one committee member
//! (the Chamberlin-Courant objective, equivalently unit-weight maximum
//! coverage). Selection runs under three ballot-access regimes:
//!
//! * complete information: the full approval matrix is available;
//! * incomplete information: ballots are observed only through size-`t`
//!   query sets presented to sampled voters, with explicit query accounting;
//! * inaccurate information: every ballot lookup is flipped independently
//!   with probability `p`, countered by majority-vote repetition.
//!
//! Committees may additionally be constrained to the bases of a matroid
//! (uniform, or a quota matroid over candidate groups). Local search over
//! matroid exchanges is guided by a non-oblivious auxiliary objective that
//! rewards covering voters more than once.
//!
//! Supporting modules generate synthetic elections from a resampling model,
//! ingest deliberation vote matrices, and drive seeded batch experiments
//! with CSV and SVG output. Every algorithm is deterministic given its seed.

#![warn(missing_docs)]

pub mod algorithms;
pub mod datagen;
mod error;
pub mod experiment;
pub mod matroid;
pub mod objectives;
pub mod oracle;
pub mod plot;
pub mod polis;
pub mod profile;

pub use error::{Error, Result};
pub use profile::{ApprovalProfile, Committee};

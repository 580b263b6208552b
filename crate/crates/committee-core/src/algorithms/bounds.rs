//! Closed-form sample sizes, repetition counts, and query budgets.
//!
//! Each function mirrors one guarantee: how many voters a sampled estimate
//! needs for the greedy gain test, how many a swap estimate needs for local
//! search, how often a noisy bit must be re-read before a majority vote is
//! trustworthy, and how many raw lookups a full run consumes. All logarithms
//! are natural.

use std::f64::consts::E;

use crate::error::{Error, Result};

fn check_unit_interval(name: &str, value: f64) -> Result<()> {
    if !(value > 0.0 && value < 1.0) {
        return Err(Error::arg(format!(
            "{name} must lie strictly between 0 and 1, got {value}"
        )));
    }
    Ok(())
}

/// Number of query sets of size `t` that cover all candidates around a
/// committee of size `k`: `ceil((m - k) / (t - k))`.
///
/// Requires `k < t <= m`.
pub fn query_family_count(m: usize, k: usize, t: usize) -> Result<usize> {
    if !(k < t && t <= m) {
        return Err(Error::arg(format!(
            "query size t={t} must satisfy k < t <= m with k={k}, m={m}"
        )));
    }
    Ok((m - k).div_ceil(t - k))
}

/// Estimation accuracy and per-query voter sample size for sampled greedy.
///
/// Returns `(eps, ell)` where `eps = (1 - gamma) * e / (gamma * (e - 1))`
/// and `ell = ceil((2 / eps^2) * ln(2 m k / delta))`, clamped to at least 1.
/// `gamma` is the target fraction of greedy's guarantee and `delta` the
/// allowed failure probability.
pub fn required_sample_size_greedy(
    gamma: f64,
    delta: f64,
    m: usize,
    k: usize,
) -> Result<(f64, u64)> {
    check_unit_interval("gamma", gamma)?;
    check_unit_interval("delta", delta)?;
    if k == 0 || m < k {
        return Err(Error::arg(format!(
            "committee size k={k} must satisfy 1 <= k <= m with m={m}"
        )));
    }
    let eps = (1.0 - gamma) * E / (gamma * (E - 1.0));
    let ell = (2.0 / (eps * eps)) * (2.0 * m as f64 * k as f64 / delta).ln();
    Ok((eps, (ell.ceil() as u64).max(1)))
}

/// Total lookups consumed by sampled greedy: `k * t * F * ell` with
/// `F = ceil((m - k) / (t - k))`.
pub fn query_budget_greedy(gamma: f64, delta: f64, m: usize, k: usize, t: usize) -> Result<u64> {
    let family = query_family_count(m, k, t)? as u64;
    let (_, ell) = required_sample_size_greedy(gamma, delta, m, k)?;
    Ok(k as u64 * t as u64 * family * ell)
}

/// Improvement threshold that turns a target approximation fraction `gamma`
/// into a swap cutoff: `beta = c2 * (1 - gamma) / (gamma * k * ln k)`.
///
/// Requires `k >= 2` so the logarithm is positive.
pub fn beta_from_gamma(c2: f64, gamma: f64, k: usize) -> Result<f64> {
    check_unit_interval("gamma", gamma)?;
    if c2 <= 0.0 {
        return Err(Error::arg(format!("c2 must be positive, got {c2}")));
    }
    if k < 2 {
        return Err(Error::arg(format!(
            "committee size k={k} must be at least 2 for a beta cutoff"
        )));
    }
    Ok(c2 * (1.0 - gamma) / (gamma * k as f64 * (k as f64).ln()))
}

/// Estimation accuracy and voter sample size for sampled local search.
///
/// Returns `(eps, ell)` with `eps = ((xi - 1) / (2 xi)) * beta` and
/// `ell = ceil(((2 - 2/e)^2 / (2 eps^2)) * ln(2 (m - k) k xi alpha_k / (delta beta)))`,
/// clamped to at least 1. `xi > 1` leaves a margin between the stopping rule
/// and the cutoff; `alpha_k` is the largest objective weight.
pub fn required_sample_size_ls(
    beta: f64,
    xi: f64,
    delta: f64,
    m: usize,
    k: usize,
    alpha_k: f64,
) -> Result<(f64, u64)> {
    check_unit_interval("delta", delta)?;
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::arg(format!("beta must be positive, got {beta}")));
    }
    if xi <= 1.0 {
        return Err(Error::arg(format!("xi must exceed 1, got {xi}")));
    }
    if k == 0 || m <= k {
        return Err(Error::arg(format!(
            "sampled local search needs m > k >= 1, got m={m}, k={k}"
        )));
    }
    if alpha_k <= 0.0 {
        return Err(Error::arg(format!(
            "alpha_k must be positive, got {alpha_k}"
        )));
    }
    let eps = (xi - 1.0) / (2.0 * xi) * beta;
    let range = 2.0 - 2.0 / E;
    let ell = (range * range) / (2.0 * eps * eps)
        * (2.0 * (m - k) as f64 * k as f64 * xi * alpha_k / (delta * beta)).ln();
    Ok((eps, (ell.ceil() as u64).max(1)))
}

/// Upper bound on improving swaps: `ceil(xi * alpha_k / beta)`.
///
/// Each accepted swap raises the auxiliary objective by at least `beta / xi`
/// and the objective never exceeds `alpha_k`, so the search stops within
/// this many iterations.
pub fn ls_iteration_cap(xi: f64, alpha_k: f64, beta: f64) -> Result<u64> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::arg(format!("beta must be positive, got {beta}")));
    }
    if xi < 1.0 {
        return Err(Error::arg(format!("xi must be at least 1, got {xi}")));
    }
    if alpha_k <= 0.0 {
        return Err(Error::arg(format!(
            "alpha_k must be positive, got {alpha_k}"
        )));
    }
    Ok(((xi * alpha_k / beta).ceil() as u64).max(1))
}

/// Total lookups consumed by sampled local search at the iteration cap:
/// `cap * t * F * ell`.
pub fn query_budget_ls(
    beta: f64,
    xi: f64,
    delta: f64,
    m: usize,
    k: usize,
    t: usize,
    alpha_k: f64,
) -> Result<u64> {
    let family = query_family_count(m, k, t)? as u64;
    let (_, ell) = required_sample_size_ls(beta, xi, delta, m, k, alpha_k)?;
    let cap = ls_iteration_cap(xi, alpha_k, beta)?;
    Ok(cap * t as u64 * family * ell)
}

/// Presentations per (voter, candidate) pair needed before a majority vote
/// decodes a `p`-flipped bit with overall failure probability `delta`:
/// `ceil(2 ln(n m / delta) / ln(1 / (4 p (1 - p))))`, clamped to at least 1.
pub fn required_repeats_inaccurate(p: f64, delta: f64, n: usize, m: usize) -> Result<u64> {
    if !(p > 0.0 && p < 0.5) {
        return Err(Error::arg(format!(
            "flip probability must lie strictly between 0 and 1/2, got {p}"
        )));
    }
    check_unit_interval("delta", delta)?;
    if n == 0 || m == 0 {
        return Err(Error::arg("profile dimensions must be positive"));
    }
    let repeats = 2.0 * (n as f64 * m as f64 / delta).ln() / (1.0 / (4.0 * p * (1.0 - p))).ln();
    Ok((repeats.ceil() as u64).max(1))
}

/// Voter sample size that spends a per-voter presentation budget `m_level`
/// evenly across one greedy run: `max(1, floor(m_level * n / (k * F)))`.
pub fn m_budget_sample_size(m_level: u64, n: usize, m: usize, k: usize, t: usize) -> Result<u64> {
    if m_level == 0 {
        return Err(Error::arg("presentation budget must be positive"));
    }
    if n == 0 {
        return Err(Error::arg("profile dimensions must be positive"));
    }
    let family = query_family_count(m, k, t)? as u64;
    Ok((m_level * n as u64 / (k as u64 * family)).max(1))
}

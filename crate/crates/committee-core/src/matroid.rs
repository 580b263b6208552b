//! Independence systems constraining feasible committees.
//!
//! A matroid over the candidate universe is given by three properties: the
//! empty set is independent, subsets of independent sets are independent,
//! and a smaller independent set can always borrow an element from a larger
//! one. All maximal independent sets (bases) share one cardinality, the rank.
//! Committees are constrained to bases: the uniform matroid yields plain
//! size-`k` committees, while a quota matroid additionally bounds how many
//! members may come from each declared candidate group.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::profile::Committee;

/// An independence system over candidates `0..universe()`.
///
/// Implementations must satisfy the matroid axioms; [`check_matroid_axioms`]
/// verifies them exhaustively for small universes. `independent` may assume
/// its input holds distinct in-range indices in any order; use the checked
/// free function [`is_independent`] at validation boundaries.
pub trait Matroid {
    /// Number of candidates.
    fn universe(&self) -> usize;

    /// Common size of all bases.
    fn rank(&self) -> usize;

    /// Whether the given candidate set is independent.
    fn independent(&self, set: &[u32]) -> bool;
}

/// Checked independence test: validates that `set` holds distinct indices
/// inside the universe before delegating to the matroid.
pub fn is_independent(mat: &dyn Matroid, set: &[u32]) -> Result<bool> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::arg(format!("duplicate candidate {}", pair[0])));
        }
    }
    if let Some(&c) = sorted.iter().find(|&&c| c as usize >= mat.universe()) {
        return Err(Error::arg(format!(
            "candidate {c} outside universe 0..{}",
            mat.universe()
        )));
    }
    Ok(mat.independent(set))
}

/// The uniform matroid: a set is independent exactly when it has at most `k`
/// elements.
#[derive(Debug, Clone)]
pub struct UniformMatroid {
    m: usize,
    k: usize,
}

impl UniformMatroid {
    /// Builds the rank-`k` uniform matroid over `m` candidates, `1 <= k <= m`.
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::arg("committee size k must be at least 1"));
        }
        if k > m {
            return Err(Error::arg(format!(
                "committee size {k} exceeds {m} candidates"
            )));
        }
        Ok(UniformMatroid { m, k })
    }
}

impl Matroid for UniformMatroid {
    fn universe(&self) -> usize {
        self.m
    }

    fn rank(&self) -> usize {
        self.k
    }

    fn independent(&self, set: &[u32]) -> bool {
        set.len() <= self.k
    }
}

/// One candidate group with its quota bounds.
#[derive(Debug, Clone)]
pub struct QuotaGroup {
    /// Label used in config files and error messages.
    pub name: String,
    /// Distinct member candidate indices.
    pub members: Vec<u32>,
    /// Minimum committee members drawn from this group.
    pub lower: usize,
    /// Maximum committee members drawn from this group.
    pub upper: usize,
}

/// A partition of candidates into groups with per-group quota bounds and a
/// committee size `k`.
///
/// Candidates left out of every group form an implicit unconstrained group.
#[derive(Debug, Clone)]
pub struct QuotaSpec {
    /// Candidate universe size.
    pub m: usize,
    /// Committee size; the rank of the resulting matroid.
    pub k: usize,
    /// Disjoint candidate groups.
    pub groups: Vec<QuotaGroup>,
}

impl QuotaSpec {
    /// Parses the quota config format: one group per line,
    /// `name: index-list : lower : upper`, with `#` comments and blank lines
    /// ignored. Indices may be separated by commas or spaces.
    pub fn parse(text: &str, m: usize, k: usize) -> Result<Self> {
        let mut groups = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split(':').collect();
            if parts.len() != 4 {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "expected \"name: index-list : lower : upper\"".into(),
                });
            }
            let name = parts[0].trim().to_string();
            let mut members = Vec::new();
            for tok in parts[1].split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                members.push(tok.parse::<u32>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("bad candidate index {tok:?}"),
                })?);
            }
            let lower = parts[2].trim().parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("bad lower quota {:?}", parts[2].trim()),
            })?;
            let upper = parts[3].trim().parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("bad upper quota {:?}", parts[3].trim()),
            })?;
            groups.push(QuotaGroup {
                name,
                members,
                lower,
                upper,
            });
        }
        Ok(QuotaSpec { m, k, groups })
    }
}

/// Matroid whose bases are the size-`k` committees meeting every group's
/// lower and upper quota.
#[derive(Debug, Clone)]
pub struct QuotaMatroid {
    m: usize,
    k: usize,
    /// Group index per candidate; `groups.len()` marks the implicit group.
    group_of: Vec<usize>,
    names: Vec<String>,
    lowers: Vec<usize>,
    uppers: Vec<usize>,
}

impl QuotaMatroid {
    /// Validates a [`QuotaSpec`] and builds the matroid.
    ///
    /// Fails with the violated constraint named when groups overlap, quotas
    /// are inconsistent, or no size-`k` committee can satisfy all bounds.
    pub fn new(spec: &QuotaSpec) -> Result<Self> {
        let QuotaSpec { m, k, groups } = spec;
        let (m, k) = (*m, *k);
        if m == 0 {
            return Err(Error::arg("universe must hold at least one candidate"));
        }
        if k == 0 {
            return Err(Error::arg("committee size k must be at least 1"));
        }
        let mut group_of = vec![groups.len(); m];
        let mut names = Vec::new();
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        for (g, group) in groups.iter().enumerate() {
            for &c in &group.members {
                if c as usize >= m {
                    return Err(Error::arg(format!(
                        "group {:?} lists candidate {c} outside universe 0..{m}",
                        group.name
                    )));
                }
                if group_of[c as usize] != groups.len() {
                    return Err(Error::arg(format!(
                        "candidate {c} belongs to both {:?} and {:?}",
                        names[group_of[c as usize]], group.name
                    )));
                }
                group_of[c as usize] = g;
            }
            if group.lower > group.upper {
                return Err(Error::arg(format!(
                    "group {:?} has lower quota {} above upper quota {}",
                    group.name, group.lower, group.upper
                )));
            }
            if group.upper > group.members.len() {
                return Err(Error::arg(format!(
                    "group {:?} has upper quota {} above its size {}",
                    group.name,
                    group.upper,
                    group.members.len()
                )));
            }
            names.push(group.name.clone());
            lowers.push(group.lower);
            uppers.push(group.upper);
        }
        let implicit = group_of.iter().filter(|&&g| g == groups.len()).count();
        names.push("(ungrouped)".into());
        lowers.push(0);
        uppers.push(k);
        let lower_sum: usize = lowers.iter().sum();
        if lower_sum > k {
            return Err(Error::arg(format!(
                "lower quotas sum to {lower_sum}, above committee size {k}"
            )));
        }
        let capacity: usize = uppers
            .iter()
            .zip(groups.iter().map(|g| g.members.len()).chain([implicit]))
            .map(|(&u, size)| u.min(size))
            .sum();
        if capacity < k {
            return Err(Error::arg(format!(
                "upper quotas cap the committee at {capacity} members, below size {k}"
            )));
        }
        Ok(QuotaMatroid {
            m,
            k,
            group_of,
            names,
            lowers,
            uppers,
        })
    }

    /// Group label for a candidate, for reporting.
    pub fn group_name(&self, candidate: u32) -> &str {
        &self.names[self.group_of[candidate as usize]]
    }

    /// Whether a full committee meets every group's lower and upper quota.
    pub fn satisfies_quotas(&self, w: &Committee) -> bool {
        let counts = self.group_counts(w.members());
        counts
            .iter()
            .zip(&self.lowers)
            .zip(&self.uppers)
            .all(|((&c, &lo), &hi)| c >= lo && c <= hi)
    }

    fn group_counts(&self, set: &[u32]) -> Vec<usize> {
        let mut counts = vec![0usize; self.names.len()];
        for &c in set {
            counts[self.group_of[c as usize]] += 1;
        }
        counts
    }
}

impl Matroid for QuotaMatroid {
    fn universe(&self) -> usize {
        self.m
    }

    fn rank(&self) -> usize {
        self.k
    }

    /// Independence as extendability: `set` is independent when some size-`k`
    /// superset meets all quota bounds. That holds exactly when no group
    /// exceeds its upper quota and topping every group up to its lower quota
    /// still fits within `k`.
    fn independent(&self, set: &[u32]) -> bool {
        let counts = self.group_counts(set);
        let mut needed = 0usize;
        for ((&count, &lo), &hi) in counts.iter().zip(&self.lowers).zip(&self.uppers) {
            if count > hi {
                return false;
            }
            needed += count.max(lo);
        }
        needed <= self.k
    }
}

/// Enumerates the exchange pairs `(c_in, c_out)` that keep a basis a basis:
/// `c_out` leaves `w`, `c_in` joins, and the result stays independent.
/// Pairs are returned in ascending `(c_in, c_out)` order.
pub fn valid_exchanges(mat: &dyn Matroid, w: &Committee) -> Result<Vec<(u32, u32)>> {
    if w.len() != mat.rank() || !is_independent(mat, w.members())? {
        return Err(Error::arg("committee is not a basis of the matroid"));
    }
    let mut pairs = Vec::new();
    let mut scratch = w.members().to_vec();
    for c_in in 0..mat.universe() as u32 {
        if w.contains(c_in) {
            continue;
        }
        for (slot, &c_out) in w.members().iter().enumerate() {
            scratch.copy_from_slice(w.members());
            scratch[slot] = c_in;
            if mat.independent(&scratch) {
                pairs.push((c_in, c_out));
            }
        }
    }
    Ok(pairs)
}

/// Builds a basis by repeatedly adding a uniformly random candidate that
/// keeps the set independent. Deterministic given the generator state.
pub fn random_basis<R: Rng>(mat: &dyn Matroid, rng: &mut R) -> Result<Committee> {
    if mat.rank() == 0 {
        return Err(Error::arg("matroid has rank 0"));
    }
    let mut set: Vec<u32> = Vec::with_capacity(mat.rank());
    let mut scratch = Vec::with_capacity(mat.rank());
    while set.len() < mat.rank() {
        let mut feasible = Vec::new();
        for c in 0..mat.universe() as u32 {
            if set.contains(&c) {
                continue;
            }
            scratch.clear();
            scratch.extend_from_slice(&set);
            scratch.push(c);
            if mat.independent(&scratch) {
                feasible.push(c);
            }
        }
        if feasible.is_empty() {
            return Err(Error::arg(
                "no candidate extends the independent set; exchange property violated",
            ));
        }
        set.push(feasible[rng.gen_range(0..feasible.len())]);
    }
    Committee::new(set, mat.rank())
}

/// [`random_basis`] seeded from a single integer.
pub fn random_basis_seeded(mat: &dyn Matroid, seed: u64) -> Result<Committee> {
    random_basis(mat, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// First axiom violation found by [`check_matroid_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// The empty set is dependent.
    EmptyDependent,
    /// An independent set has a dependent subset.
    DownwardClosure {
        /// The independent set.
        set: Vec<u32>,
        /// Removing this element produced a dependent set.
        removed: u32,
    },
    /// No element of the larger set extends the smaller one.
    Exchange {
        /// The smaller independent set.
        smaller: Vec<u32>,
        /// The larger independent set offering no usable element.
        larger: Vec<u32>,
    },
    /// Two maximal independent sets differ in size.
    UnequalBases {
        /// A maximal independent set.
        first: Vec<u32>,
        /// A maximal independent set of different size.
        second: Vec<u32>,
    },
    /// Maximal independent sets do not match the declared rank.
    RankMismatch {
        /// The declared rank.
        declared: usize,
        /// The observed basis size.
        observed: usize,
    },
}

/// Outcome of the exhaustive axiom check.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    /// Universe size that was checked.
    pub universe: usize,
    /// Number of subsets enumerated (`2^universe`).
    pub subsets_checked: u64,
    /// First violation found, if any.
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    /// Whether all axioms held.
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

fn mask_to_set(mask: u32) -> Vec<u32> {
    (0..32).filter(|&b| mask >> b & 1 == 1).collect()
}

/// Exhaustively verifies the matroid axioms over every subset pair, plus the
/// uniform basis cardinality, reporting the first counterexample.
///
/// Refuses universes above 16 candidates; the check enumerates `2^m` subsets.
pub fn check_matroid_axioms(mat: &dyn Matroid) -> Result<AxiomReport> {
    let m = mat.universe();
    if m > 16 {
        return Err(Error::TooLarge(format!(
            "axiom check enumerates 2^{m} subsets; universes above 16 are refused"
        )));
    }
    let total: u32 = 1 << m;
    let mut indep = vec![false; total as usize];
    for mask in 0..total {
        indep[mask as usize] = mat.independent(&mask_to_set(mask));
    }
    let report = |violation| AxiomReport {
        universe: m,
        subsets_checked: total as u64,
        violation: Some(violation),
    };

    if !indep[0] {
        return Ok(report(AxiomViolation::EmptyDependent));
    }
    for mask in 0..total {
        if !indep[mask as usize] {
            continue;
        }
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if !indep[(mask ^ bit) as usize] {
                return Ok(report(AxiomViolation::DownwardClosure {
                    set: mask_to_set(mask),
                    removed: bit.trailing_zeros(),
                }));
            }
        }
    }
    // The exchange axiom only needs checking for |larger| = |smaller| + 1;
    // the general case follows by induction through downward closure.
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    for mask in 0..total {
        if indep[mask as usize] {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    for size in 0..m {
        for &small in &by_size[size] {
            for &large in &by_size[size + 1] {
                let mut diff = large & !small;
                let mut found = false;
                while diff != 0 {
                    let bit = diff & diff.wrapping_neg();
                    diff ^= bit;
                    if indep[(small | bit) as usize] {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Ok(report(AxiomViolation::Exchange {
                        smaller: mask_to_set(small),
                        larger: mask_to_set(large),
                    }));
                }
            }
        }
    }
    let mut basis_example: Option<u32> = None;
    for mask in 0..total {
        if !indep[mask as usize] {
            continue;
        }
        let maximal = (0..m as u32).all(|b| mask >> b & 1 == 1 || !indep[(mask | 1 << b) as usize]);
        if !maximal {
            continue;
        }
        match basis_example {
            None => basis_example = Some(mask),
            Some(first) if first.count_ones() != mask.count_ones() => {
                return Ok(report(AxiomViolation::UnequalBases {
                    first: mask_to_set(first),
                    second: mask_to_set(mask),
                }));
            }
            Some(_) => {}
        }
    }
    if let Some(basis) = basis_example {
        if basis.count_ones() as usize != mat.rank() {
            return Ok(report(AxiomViolation::RankMismatch {
                declared: mat.rank(),
                observed: basis.count_ones() as usize,
            }));
        }
    }
    Ok(AxiomReport {
        universe: m,
        subsets_checked: total as u64,
        violation: None,
    })
}

#[cfg(test)]
pub(crate) use tests::two_group_spec;

#[cfg(test)]
mod tests {
    use super::*;

    /// The two-group example: C1 = {0,1,2}, C2 = {3,4}, k = 3,
    /// lower quotas (1,1), upper quotas (2,2).
    pub(crate) fn two_group_spec() -> QuotaSpec {
        QuotaSpec {
            m: 5,
            k: 3,
            groups: vec![
                QuotaGroup {
                    name: "first".into(),
                    members: vec![0, 1, 2],
                    lower: 1,
                    upper: 2,
                },
                QuotaGroup {
                    name: "second".into(),
                    members: vec![3, 4],
                    lower: 1,
                    upper: 2,
                },
            ],
        }
    }

    #[test]
    fn uniform_independence_is_cardinality() {
        let mat = UniformMatroid::new(5, 2).unwrap();
        assert!(mat.independent(&[]));
        assert!(mat.independent(&[3]));
        assert!(mat.independent(&[0, 1]));
        assert!(!mat.independent(&[0, 1, 2]));
        assert_eq!(mat.rank(), 2);
        assert!(UniformMatroid::new(3, 4).is_err());
        assert!(UniformMatroid::new(3, 0).is_err());
    }

    #[test]
    fn checked_independence_validates_input() {
        let mat = UniformMatroid::new(5, 2).unwrap();
        assert!(is_independent(&mat, &[0, 0]).is_err());
        assert!(is_independent(&mat, &[9]).is_err());
        assert!(is_independent(&mat, &[4, 1]).unwrap());
    }

    #[test]
    fn quota_example_memberships() {
        let mat = QuotaMatroid::new(&two_group_spec()).unwrap();
        assert!(mat.independent(&[]));
        assert!(mat.independent(&[0, 1, 3]));
        assert_eq!(mat.rank(), 3);
        // Three members of the first group can never respect its upper quota.
        assert!(!mat.independent(&[0, 1, 2]));
        let basis = Committee::new(vec![0, 1, 3], 3).unwrap();
        assert!(mat.satisfies_quotas(&basis));
    }

    #[test]
    fn quota_independence_matches_exhaustive_extension() {
        let mat = QuotaMatroid::new(&two_group_spec()).unwrap();
        for mask in 0u32..1 << 5 {
            let set = mask_to_set(mask);
            let extendable = (0u32..1 << 5).any(|sup| {
                sup & mask == mask
                    && sup.count_ones() == 3
                    && mat.satisfies_quotas(&Committee::new(mask_to_set(sup), 3).unwrap())
            });
            assert_eq!(mat.independent(&set), extendable, "mismatch on {set:?}");
        }
    }

    #[test]
    fn quota_spec_validation_names_the_constraint() {
        let mut overlapping = two_group_spec();
        overlapping.groups[1].members = vec![2, 3];
        let err = QuotaMatroid::new(&overlapping).unwrap_err().to_string();
        assert!(err.contains("candidate 2"), "got {err}");

        let mut heavy = two_group_spec();
        heavy.groups[0].lower = 2;
        heavy.groups[1].lower = 2;
        let err = QuotaMatroid::new(&heavy).unwrap_err().to_string();
        assert!(err.contains("lower quotas sum"), "got {err}");

        let mut tight = two_group_spec();
        tight.k = 5;
        let err = QuotaMatroid::new(&tight).unwrap_err().to_string();
        assert!(err.contains("cap the committee"), "got {err}");

        let mut inverted = two_group_spec();
        inverted.groups[0].lower = 3;
        inverted.groups[0].upper = 2;
        assert!(QuotaMatroid::new(&inverted).is_err());

        let mut oversized = two_group_spec();
        oversized.groups[1].upper = 3;
        let err = QuotaMatroid::new(&oversized).unwrap_err().to_string();
        assert!(err.contains("above its size"), "got {err}");
    }

    #[test]
    fn single_unconstrained_group_reduces_to_uniform() {
        let spec = QuotaSpec {
            m: 6,
            k: 3,
            groups: vec![QuotaGroup {
                name: "all".into(),
                members: (0..6).collect(),
                lower: 0,
                upper: 3,
            }],
        };
        let quota = QuotaMatroid::new(&spec).unwrap();
        let uniform = UniformMatroid::new(6, 3).unwrap();
        for mask in 0u32..1 << 6 {
            let set = mask_to_set(mask);
            assert_eq!(quota.independent(&set), uniform.independent(&set));
        }
    }

    #[test]
    fn uniform_exchanges_are_all_pairs() {
        let mat = UniformMatroid::new(5, 2).unwrap();
        let w = Committee::new(vec![1, 3], 2).unwrap();
        let pairs = valid_exchanges(&mat, &w).unwrap();
        assert_eq!(pairs.len(), 2 * 3);
        assert_eq!(pairs[0], (0, 1));
        assert!(pairs.windows(2).all(|p| p[0] < p[1]), "not sorted");
    }

    #[test]
    fn full_universe_has_no_exchanges() {
        let mat = UniformMatroid::new(3, 3).unwrap();
        let w = Committee::new(vec![0, 1, 2], 3).unwrap();
        assert!(valid_exchanges(&mat, &w).unwrap().is_empty());
    }

    #[test]
    fn exchanges_respect_lower_quotas() {
        let mat = QuotaMatroid::new(&two_group_spec()).unwrap();
        let w = Committee::new(vec![0, 1, 3], 3).unwrap();
        let pairs = valid_exchanges(&mat, &w).unwrap();
        // The second group sits at its lower quota: its only member may only
        // be replaced from within the group.
        assert!(!pairs.contains(&(2, 3)));
        assert!(pairs.contains(&(4, 3)));
        assert!(pairs.contains(&(2, 0)));
        for &(c_in, c_out) in &pairs {
            let mut swapped = w.clone();
            swapped.swap(c_in, c_out).unwrap();
            assert!(mat.satisfies_quotas(&swapped));
        }
    }

    #[test]
    fn exchanges_reject_non_basis() {
        let mat = UniformMatroid::new(5, 3).unwrap();
        let w = Committee::new(vec![0], 3).unwrap();
        assert!(valid_exchanges(&mat, &w).is_err());
    }

    #[test]
    fn random_basis_is_deterministic_and_feasible() {
        let mat = QuotaMatroid::new(&two_group_spec()).unwrap();
        let a = random_basis_seeded(&mat, 7).unwrap();
        let b = random_basis_seeded(&mat, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert!(mat.satisfies_quotas(&a));

        let unique = UniformMatroid::new(3, 3).unwrap();
        assert_eq!(
            random_basis_seeded(&unique, 99).unwrap().members(),
            &[0, 1, 2]
        );
    }

    #[test]
    fn tight_lower_quotas_force_exact_counts() {
        let spec = QuotaSpec {
            m: 6,
            k: 3,
            groups: vec![
                QuotaGroup {
                    name: "a".into(),
                    members: vec![0, 1],
                    lower: 1,
                    upper: 1,
                },
                QuotaGroup {
                    name: "b".into(),
                    members: vec![2, 3],
                    lower: 1,
                    upper: 1,
                },
                QuotaGroup {
                    name: "c".into(),
                    members: vec![4, 5],
                    lower: 1,
                    upper: 1,
                },
            ],
        };
        let mat = QuotaMatroid::new(&spec).unwrap();
        for seed in 0..20 {
            let basis = random_basis_seeded(&mat, seed).unwrap();
            assert!(mat.satisfies_quotas(&basis));
        }
    }

    #[test]
    fn axiom_check_passes_for_real_matroids() {
        assert!(check_matroid_axioms(&UniformMatroid::new(6, 3).unwrap())
            .unwrap()
            .passed());
        assert!(
            check_matroid_axioms(&QuotaMatroid::new(&two_group_spec()).unwrap())
                .unwrap()
                .passed()
        );
    }

    struct OnlyPairs;
    impl Matroid for OnlyPairs {
        fn universe(&self) -> usize {
            4
        }
        fn rank(&self) -> usize {
            2
        }
        fn independent(&self, set: &[u32]) -> bool {
            set.len() == 2
        }
    }

    struct HoleAtZero;
    impl Matroid for HoleAtZero {
        fn universe(&self) -> usize {
            3
        }
        fn rank(&self) -> usize {
            2
        }
        fn independent(&self, set: &[u32]) -> bool {
            set.len() <= 2 && !(set.len() == 1 && set[0] == 0)
        }
    }

    #[test]
    fn axiom_check_reports_counterexamples() {
        let report = check_matroid_axioms(&OnlyPairs).unwrap();
        assert_eq!(report.violation, Some(AxiomViolation::EmptyDependent));

        let report = check_matroid_axioms(&HoleAtZero).unwrap();
        match report.violation {
            Some(AxiomViolation::DownwardClosure { removed, .. }) => assert_ne!(removed, 0),
            other => panic!("expected downward-closure violation, got {other:?}"),
        }
    }

    #[test]
    fn axiom_check_refuses_large_universes() {
        let mat = UniformMatroid::new(17, 3).unwrap();
        assert!(matches!(
            check_matroid_axioms(&mat),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn every_independent_set_extends_to_a_basis() {
        let mat = QuotaMatroid::new(&two_group_spec()).unwrap();
        for mask in 0u32..1 << 5 {
            let set = mask_to_set(mask);
            if !mat.independent(&set) {
                continue;
            }
            let mut grown = set.clone();
            while grown.len() < mat.rank() {
                let next = (0..5u32).find(|c| {
                    if grown.contains(c) {
                        return false;
                    }
                    let mut trial = grown.clone();
                    trial.push(*c);
                    mat.independent(&trial)
                });
                grown.push(next.expect("independent set failed to extend"));
            }
            assert!(mat.independent(&grown));
        }
    }

    #[test]
    fn quota_config_parses_and_validates() {
        let text = "# groups\nnorth: 0, 1, 2 : 1 : 2\nsouth: 3 4 : 1 : 2\n";
        let spec = QuotaSpec::parse(text, 5, 3).unwrap();
        assert_eq!(spec.groups.len(), 2);
        assert_eq!(spec.groups[0].members, vec![0, 1, 2]);
        assert_eq!(spec.groups[1].name, "south");
        assert!(QuotaMatroid::new(&spec).is_ok());
        assert!(QuotaSpec::parse("broken line", 5, 3).is_err());
        assert!(QuotaSpec::parse("g: x : 0 : 1", 5, 3).is_err());
    }
}

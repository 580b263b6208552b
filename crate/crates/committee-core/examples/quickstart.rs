//! Selects a two-member committee from a four-voter profile with the
//! greedy rule, then refines a random basis with the local search.

use committee_core::algorithms::{greedy, local_search_beta};
use committee_core::matroid::UniformMatroid;
use committee_core::objectives::AlphaSequence;
use committee_core::ApprovalProfile;

fn main() -> Result<(), committee_core::Error> {
    let profile = ApprovalProfile::parse("4 3\n0\n0 2\n1\n2\n")?;

    let run = greedy(&profile, 2)?;
    assert_eq!(run.committee.members(), &[0, 1]);
    println!(
        "greedy picked {:?} covering {:.2}",
        run.committee.members(),
        run.score
    );

    let matroid = UniformMatroid::new(3, 2)?;
    let alphas = AlphaSequence::new(2)?;
    let refined = local_search_beta(&profile, &matroid, 0.01, &alphas, 42)?;
    assert!(refined.score >= 0.75);
    println!("local search covering {:.2}", refined.score);

    Ok(())
}

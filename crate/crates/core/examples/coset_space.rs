//! Left cosets, the projection `q`, the left action, and representatives.

use halg::catalog;
use halg::{CosetSpace, Subgroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> halg::Result<()> {
    let s3 = catalog::group("S3")?;
    let space = CosetSpace::new(Subgroup::from_names(&s3, &["(0 1)"])?);
    println!("S3/<(0 1)> has {} cosets of size {}", space.count(), space.h_size());
    for c in space.cosets() {
        let members: Vec<&str> = space.members(c).iter().map(|&x| s3.element_name(x)).collect();
        println!("  coset {c} = {members:?}, representative {}", s3.element_name(space.rep(c)));
    }

    let x = s3.find("(0 1 2)")?;
    let moved: Vec<usize> = space.cosets().map(|c| space.act(x, c)).collect();
    println!("(0 1 2) permutes the cosets as {moved:?}");

    // A different choice of representatives leaves the partition and action alone.
    let alt = space.with_random_representatives(&mut ChaCha8Rng::seed_from_u64(5));
    let reps: Vec<&str> = alt.reps().iter().map(|&r| s3.element_name(r)).collect();
    println!("random representatives {reps:?}; same space: {}", space.same_space(&alt));
    assert!(space.cosets().all(|c| alt.act(x, c) == space.act(x, c)));

    let a3 = CosetSpace::new(Subgroup::from_names(&s3, &["(0 1 2)"])?);
    println!("S3/A3 normal: {}, S3/<(0 1)> normal: {}", a3.is_normal(), space.is_normal());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("coset_space");
}

//! `L¹(G/H)` is a two-sided ideal of `M(G/H)`: the pointwise formulas for
//! `φ*ν` and `ν*φ` reproduce the measure convolutions.

use std::sync::Arc;

use halg::{catalog, random};
use halg::{CosetSpace, Method, MeasureQ, PointMasses, QuotientAlgebra, RhoSystem, Subgroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> halg::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let d4 = catalog::group("D4")?;
    let space = Arc::new(CosetSpace::new(Subgroup::from_names(&d4, &["(1 3)"])?));
    let sys = RhoSystem::new(&space, random::rho_values(&mut rng, space.count()))?;
    let alg = QuotientAlgebra::new(&space, Method::Direct);

    let phi = random::function_q(&mut rng, &space);
    let nu = random::measure_q(&mut rng, &space);
    let mu_phi = sys.density_measure(&phi)?;

    let right = sys.ideal_right(&phi, &nu)?;
    let left = sys.ideal_left(&nu, &phi)?;
    println!("φ*ν pointwise vs μ_φ*ν: {:.1e}", sys.density_measure(&right)?.max_distance(&alg.convolve(&mu_phi, &nu)?));
    println!("ν*φ pointwise vs ν*μ_φ: {:.1e}", sys.density_measure(&left)?.max_distance(&alg.convolve(&nu, &mu_phi)?));

    let e = MeasureQ::dirac_at(&space, d4.identity());
    println!("φ*δ_eH = φ: {}", sys.ideal_right(&phi, &e)?.max_distance(&phi) < 1e-12);
    println!("δ_eH*φ = φ: {}", sys.ideal_left(&e, &phi)?.max_distance(&phi) < 1e-12);

    // Fresh representatives give the same functions.
    let alt = Arc::new(space.with_random_representatives(&mut rng));
    let sys2 = sys.rebind(&alt)?;
    let again = sys2.ideal_right(&phi.rebind(&alt)?, &nu.rebind(&alt)?)?;
    println!("representative change moves φ*ν by {:.1e}", again.max_distance(&right.rebind(&alt)?));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ideal_actions");
}

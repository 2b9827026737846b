//! The involution `ν*(cH) = conj ν(c⁻¹H)` on a normal quotient, and the
//! obstruction certificate on a non-normal one.

use std::sync::Arc;

use halg::{catalog, random};
use halg::{CosetSpace, Method, PointMasses, QuotientAlgebra, Subgroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> halg::Result<()> {
    let q8 = catalog::group("Q8")?;
    let space = Arc::new(CosetSpace::new(Subgroup::from_names(&q8, &["-1"])?));
    let alg = QuotientAlgebra::new(&space, Method::Direct);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let nu = random::measure_q(&mut rng, &space);
    let star = alg.involution(&nu)?;
    println!("Q8/{{±1}}: ‖ν*‖ = {:.6}, ‖ν‖ = {:.6}", star.tv_norm(), nu.tv_norm());
    let r = alg.involution_check(&mut rng, 100, 1e-9)?;
    println!("  laws verified on {} trials, max error {:.1e}", r.trials, r.max_error.unwrap_or(0.0));

    let s4 = catalog::group("S4")?;
    let space = Arc::new(CosetSpace::new(Subgroup::from_names(&s4, &["(0 1)"])?));
    let alg = QuotientAlgebra::new(&space, Method::Direct);
    println!("S4/<(0 1)>: involution = {}", alg.involution(&random::measure_q(&mut rng, &space)).unwrap_err());
    let r = alg.involution_check(&mut rng, 100, 1e-9)?;
    println!(
        "  obstructed: {} (right identity {}, identity residual {:.3})",
        r.obstructed, r.identity.has_right_identity, r.identity.residual
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("involution");
}

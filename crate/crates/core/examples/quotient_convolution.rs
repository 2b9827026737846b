//! The convolution on `M(G/H)` by the direct coincidence count and through
//! `M(G)`, and the Dirac products it produces.

use std::sync::Arc;

use halg::{catalog, random};
use halg::{CosetSpace, Method, MeasureQ, PointMasses, QuotientAlgebra, Subgroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> halg::Result<()> {
    let s3 = catalog::group("S3")?;
    let space = Arc::new(CosetSpace::new(Subgroup::from_names(&s3, &["(0 1)"])?));
    let direct = QuotientAlgebra::new(&space, Method::Direct);
    let embed = direct.with_method(Method::Embed);

    // δ_{xH} * δ_{yH} averages δ_{xξyH} over ξ ∈ H.
    let x = s3.find("(0 2)")?;
    let d = direct.dirac_convolve(x, x);
    let w: Vec<f64> = d.weights().iter().map(|w| w.re).collect();
    println!("δ_(0 2)H * δ_(0 2)H = {w:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let nu = random::measure_q(&mut rng, &space);
    let omega = random::measure_q(&mut rng, &space);
    let a = direct.convolve(&nu, &omega)?;
    let b = embed.convolve(&nu, &omega)?;
    println!("direct vs embed: max difference {:.1e}", a.max_distance(&b));
    println!(
        "‖ν*ω‖ = {:.4} ≤ ‖ν‖‖ω‖ = {:.4}",
        a.tv_norm(),
        nu.tv_norm() * omega.tv_norm()
    );

    // δ_{eH} is a right identity, but not a left one here.
    let e = MeasureQ::dirac_at(&space, s3.identity());
    println!("ν*δ_eH = ν: {}", direct.convolve(&nu, &e)?.max_distance(&nu) < 1e-12);
    println!("δ_eH*ν = ν: {}", direct.convolve(&e, &nu)?.max_distance(&nu) < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quotient_convolution");
}

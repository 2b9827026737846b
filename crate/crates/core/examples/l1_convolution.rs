//! Convolution in `L¹(G/H)` and its compatibility with `M(G/H)` and `L¹(G)`.

use std::sync::Arc;

use halg::lebesgue::convolve_on_group;
use halg::{catalog, random};
use halg::{CosetSpace, Method, PointMasses, QuotientAlgebra, RhoSystem, Subgroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> halg::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let s4 = catalog::group("S4")?;
    let space = Arc::new(CosetSpace::new(Subgroup::from_names(&s4, &["(0 1)", "(0 1 2)"])?));
    let sys = RhoSystem::new(&space, random::rho_values(&mut rng, space.count()))?;
    let alg = QuotientAlgebra::new(&space, Method::Direct);

    let phi = random::function_q(&mut rng, &space);
    let psi = random::function_q(&mut rng, &space);
    let conv = sys.convolve(&phi, &psi)?;

    let by_translates = sys.convolve_by_translates(&phi, &psi)?;
    println!("T(φ_ρ*ψ_ρ) vs Σ φ_ρ(y)𝓛_yψ: {:.1e}", conv.max_distance(&by_translates));

    let measure = alg.convolve(&sys.density_measure(&phi)?, &sys.density_measure(&psi)?)?;
    println!("μ_(φ*ψ) vs μ_φ*μ_ψ: {:.1e}", sys.density_measure(&conv)?.max_distance(&measure));

    let upstairs = convolve_on_group(&s4, &sys.lift(&phi)?, &sys.lift(&psi)?);
    let lifted = sys.lift(&conv)?;
    let gap = upstairs.iter().zip(&lifted).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("φ_ρ*ψ_ρ vs (φ*ψ)_ρ: {gap:.1e}");
    println!(
        "‖φ*ψ‖₁ = {:.4} ≤ ‖φ‖₁‖ψ‖₁ = {:.4}",
        sys.l1_norm(&conv),
        sys.l1_norm(&phi) * sys.l1_norm(&psi)
    );

    for gens in [&["(0 1)(2 3)", "(0 2)(1 3)"][..], &["(0 1)"][..]] {
        let space = Arc::new(CosetSpace::new(Subgroup::from_names(&s4, gens)?));
        let sys = RhoSystem::new(&space, random::rho_values(&mut rng, space.count()))?;
        let r = sys.left_identity_search(1e-9);
        println!(
            "S4/{}: normal {}, left identity in L¹ {} (residual {:.2e})",
            space.subgroup().label(),
            r.is_normal,
            r.has_left_identity,
            r.residual
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("l1_convolution");
}

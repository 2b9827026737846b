//! A rho-function, the measure `μ` it induces, Weil's formula, `T_ρ`, the
//! lift `φ ↦ φ_ρ`, and the translations of `L¹(G/H)`.

use std::sync::Arc;

use halg::lebesgue::l1_norm_on_group;
use halg::{catalog, random};
use halg::{Complex64, CosetSpace, RhoSystem, Subgroup, TranslationMode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> halg::Result<()> {
    let s3 = catalog::group("S3")?;
    let space = Arc::new(CosetSpace::new(Subgroup::from_names(&s3, &["(0 1)"])?));
    let sys = RhoSystem::new(&space, vec![1.0, 2.5, 0.4])?;
    println!("rho per coset {:?}, mu {:?}", sys.rho_on_cosets(), sys.mu());
    let x = s3.find("(0 1 2)")?;
    let cocycle: Vec<f64> = space.cosets().map(|c| sys.cocycle(x, c)).collect();
    println!("λ((0 1 2), ·) = {cocycle:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = random::complex_vec(&mut rng, s3.order());
    let (lhs, rhs) = sys.weil_sides(&f)?;
    println!("Weil: Σ fρ = {lhs:.6}, Σ μ·avg f = {rhs:.6}");

    let tf = sys.t_rho(&f)?;
    let total: Complex64 = f.iter().sum();
    println!("∫ T_ρf dμ = {:.6}, Σ f = {total:.6}", sys.integral(&tf));
    println!("‖T_ρf‖₁ = {:.4} ≤ ‖f‖₁ = {:.4}", sys.l1_norm(&tf), l1_norm_on_group(&f));

    let phi = random::function_q(&mut rng, &space);
    let lifted = sys.lift(&phi)?;
    println!("‖φ_ρ‖₁ = {:.6}, ‖φ‖₁ = {:.6}", l1_norm_on_group(&lifted), sys.l1_norm(&phi));
    println!("T_ρ φ_ρ = φ: {}", sys.t_rho(&lifted)?.max_distance(&phi) < 1e-12);

    let y = s3.find("(1 2)")?;
    let lxy = sys.translate_left(s3.mul(x, y), &phi)?;
    let lx_ly = sys.translate_left(x, &sys.translate_left(y, &phi)?)?;
    println!("𝓛_x𝓛_y = 𝓛_xy: {}", lxy.max_distance(&lx_ly) < 1e-12);
    let (l1, linf) = (
        sys.translate_right(x, &phi, TranslationMode::L1)?,
        sys.translate_right(x, &phi, TranslationMode::Linf)?,
    );
    println!("𝓡_x in L¹ vs L^∞ differ by {:.3}", l1.max_distance(&linf));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("rho_functions");
}

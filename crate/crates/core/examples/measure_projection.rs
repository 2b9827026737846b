//! Pushing measures down to `G/H`, lifting them back into `M(G:H)`, and the
//! `M(G)`-module action.

use std::sync::Arc;

use halg::catalog;
use halg::measure::module_action;
use halg::{Complex64, CosetSpace, MeasureG, MeasureQ, PointMasses, Subgroup};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn run_example() -> halg::Result<()> {
    let z4 = catalog::group("Z4")?;
    let h = Subgroup::from_names(&z4, &["2"])?;
    let space = Arc::new(CosetSpace::new(h.clone()));

    let m = MeasureG::new(&z4, vec![c(1.0), c(0.0), c(2.0), c(0.0)])?;
    let nu = m.project(&space)?;
    println!("project (1,0,2,0) = {:?}", nu.weights().iter().map(|w| w.re).collect::<Vec<_>>());

    let nu = MeasureQ::new(&space, vec![Complex64::new(0.0, 2.0), c(4.0)])?;
    let section = nu.section();
    let shown: Vec<String> = section.weights().iter().map(|w| w.to_string()).collect();
    println!("section (2i, 4) = {shown:?}");
    println!(
        "‖ν‖ = {}, ‖section ν‖ = {}, right-invariant: {}",
        nu.tv_norm(),
        section.tv_norm(),
        section.is_right_invariant(&h, 1e-12)?
    );
    assert!(section.project(&space)?.max_distance(&nu) < 1e-12);

    // The projection only contracts: cancellation inside a coset is lost.
    let m = MeasureG::new(&z4, vec![c(1.0), c(0.0), c(-1.0), c(0.0)])?;
    println!("‖m‖ = {}, ‖project m‖ = {}", m.tv_norm(), m.project(&space)?.tv_norm());

    // project(m₁*m₂) = m₁ ⋆ project(m₂).
    let m1 = MeasureG::dirac(&z4, 1);
    let m2 = MeasureG::new(&z4, vec![c(0.5), c(0.25), c(0.0), c(0.25)])?;
    let lhs = m1.convolve(&m2)?.project(&space)?;
    let rhs = module_action(&m1, &m2.project(&space)?)?;
    println!("module action agrees: {}", lhs.max_distance(&rhs) < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("measure_projection");
}

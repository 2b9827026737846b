//! A two-sided identity in `M(G/H)` exists exactly when `H` is normal.

use std::sync::Arc;

use halg::catalog;
use halg::{CosetSpace, Method, QuotientAlgebra, Subgroup};

pub fn run_example() -> halg::Result<()> {
    let cases: [(&str, &[&str]); 5] = [
        ("Z6", &["3"]),
        ("S3", &["(0 1 2)"]),
        ("S3", &["(0 1)"]),
        ("D4", &["(1 3)"]),
        ("S4", &["(0 1)", "(0 1 2)"]),
    ];
    println!("{:<6} {:<18} {:>6} {:>8} {:>12} {:>10}", "G", "H", "normal", "identity", "residual", "left δ_eH");
    for (group, gens) in cases {
        let g = catalog::group(group)?;
        let space = Arc::new(CosetSpace::new(Subgroup::from_names(&g, gens)?));
        let r = QuotientAlgebra::new(&space, Method::Direct).identity_report(1e-9);
        assert!(r.has_right_identity);
        assert_eq!(r.has_identity, r.is_normal);
        println!(
            "{:<6} {:<18} {:>6} {:>8} {:>12.2e} {:>10.3}",
            group,
            space.subgroup().label(),
            r.is_normal,
            r.has_identity,
            r.residual,
            r.left_defect_of_unit
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("identity_dichotomy");
}

//! Run the verification suite on one pair, then on the whole catalog.

use halg::verify::{self, CaseSpec};

pub fn run_example() -> halg::Result<()> {
    let case = verify::run_case(&CaseSpec::new("S3", &["(0 1)"]).trials(20).seed(7))?;
    println!(
        "{} {}: normal {}, identity {}, involution {}",
        case.group, case.subgroup, case.is_normal, case.has_identity, case.involution
    );
    for check in case.checks.iter().take(5) {
        println!("  {:<28} {:?} max error {:.1e}", check.id, check.status, check.max_error);
    }
    println!("  ... {} checks in total", case.checks.len());

    let report = verify::run_catalog(1e-9, 7, 10)?;
    let non_normal = report.cases.iter().filter(|c| !c.is_normal).count();
    println!(
        "catalog: {} cases ({} non-normal), {} passed, {} failed",
        report.cases.len(),
        non_normal,
        report.summary.pass,
        report.summary.fail
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify_catalog");
}

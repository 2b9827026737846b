//! Each runnable example doubles as a smoke test.

#[allow(dead_code)]
#[path = "../examples/group_catalog.rs"]
mod group_catalog;

#[test]
fn group_catalog_runs() {
    group_catalog::run_example().expect("group_catalog example should run");
}

#[allow(dead_code)]
#[path = "../examples/coset_space.rs"]
mod coset_space;

#[test]
fn coset_space_runs() {
    coset_space::run_example().expect("coset_space example should run");
}

#[allow(dead_code)]
#[path = "../examples/measure_projection.rs"]
mod measure_projection;

#[test]
fn measure_projection_runs() {
    measure_projection::run_example().expect("measure_projection example should run");
}

#[allow(dead_code)]
#[path = "../examples/quotient_convolution.rs"]
mod quotient_convolution;

#[test]
fn quotient_convolution_runs() {
    quotient_convolution::run_example().expect("quotient_convolution example should run");
}

#[allow(dead_code)]
#[path = "../examples/identity_dichotomy.rs"]
mod identity_dichotomy;

#[test]
fn identity_dichotomy_runs() {
    identity_dichotomy::run_example().expect("identity_dichotomy example should run");
}

#[allow(dead_code)]
#[path = "../examples/involution.rs"]
mod involution;

#[test]
fn involution_runs() {
    involution::run_example().expect("involution example should run");
}

#[allow(dead_code)]
#[path = "../examples/rho_functions.rs"]
mod rho_functions;

#[test]
fn rho_functions_runs() {
    rho_functions::run_example().expect("rho_functions example should run");
}

#[allow(dead_code)]
#[path = "../examples/l1_convolution.rs"]
mod l1_convolution;

#[test]
fn l1_convolution_runs() {
    l1_convolution::run_example().expect("l1_convolution example should run");
}

#[allow(dead_code)]
#[path = "../examples/ideal_actions.rs"]
mod ideal_actions;

#[test]
fn ideal_actions_runs() {
    ideal_actions::run_example().expect("ideal_actions example should run");
}

#[allow(dead_code)]
#[path = "../examples/verify_catalog.rs"]
mod verify_catalog;

#[test]
fn verify_catalog_runs() {
    verify_catalog::run_example().expect("verify_catalog example should run");
}

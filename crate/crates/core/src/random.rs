//! Random inputs for property checks.

use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use crate::coset::CosetSpace;
use crate::group::FiniteGroup;
use crate::lebesgue::QuotientFunction;
use crate::measure::{MeasureG, MeasureQ, ZERO};

/// Real and imaginary parts uniform on `[-1, 1]`.
pub fn complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

pub fn complex_vec<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Complex64> {
    (0..len).map(|_| complex(rng)).collect()
}

/// Each entry is zero with probability 1/2, otherwise uniform as in [`complex`].
pub fn sparse_vec<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| if rng.gen_bool(0.5) { complex(rng) } else { ZERO })
        .collect()
}

pub fn measure_g<R: Rng + ?Sized>(rng: &mut R, group: &Arc<FiniteGroup>) -> MeasureG {
    MeasureG::new(group, complex_vec(rng, group.order())).expect("length matches")
}

pub fn measure_q<R: Rng + ?Sized>(rng: &mut R, space: &Arc<CosetSpace>) -> MeasureQ {
    MeasureQ::new(space, complex_vec(rng, space.count())).expect("length matches")
}

pub fn function_q<R: Rng + ?Sized>(rng: &mut R, space: &Arc<CosetSpace>) -> QuotientFunction {
    QuotientFunction::new(space, complex_vec(rng, space.count())).expect("length matches")
}

/// Per-coset rho values drawn log-uniformly from `[0.1, 10]`.
pub fn rho_values<R: Rng + ?Sized>(rng: &mut R, cosets: usize) -> Vec<f64> {
    (0..cosets)
        .map(|_| 10f64.powf(rng.gen_range(-1.0..=1.0)))
        .collect()
}

//! Rho-functions, the quasi-invariant measure they induce, and `L¹(G/H)`.
//!
//! With counting measure on `G`, normalized Haar measure on `H` and both
//! modular functions identically 1, a rho-function is constant on left
//! cosets and Weil's formula forces `μ(cH) = |H|·ρ(c)`.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::least_squares;
use crate::coset::{Coset, CosetSpace};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::measure::{max_abs_diff, MeasureQ, PointMasses, ONE, ZERO};

/// `Δ_G`, identically 1 on a finite group.
const MODULAR_G: f64 = 1.0;

/// A function on `G/H`. The same carrier serves `L¹`, `L^∞` and `C_0`; only
/// the norm differs.
#[derive(Debug, Clone)]
pub struct QuotientFunction {
    space: Arc<CosetSpace>,
    values: Vec<Complex64>,
}

impl QuotientFunction {
    pub fn new(space: &Arc<CosetSpace>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != space.count() {
            return Err(Error::LengthMismatch {
                expected: space.count(),
                got: values.len(),
            });
        }
        Ok(QuotientFunction {
            space: Arc::clone(space),
            values,
        })
    }

    pub fn constant(space: &Arc<CosetSpace>, value: Complex64) -> Self {
        QuotientFunction {
            space: Arc::clone(space),
            values: vec![value; space.count()],
        }
    }

    pub fn indicator(space: &Arc<CosetSpace>, c: Coset) -> Self {
        let mut values = vec![ZERO; space.count()];
        values[c] = ONE;
        QuotientFunction {
            space: Arc::clone(space),
            values,
        }
    }

    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_distance(&self, other: &QuotientFunction) -> f64 {
        max_abs_diff(&self.values, &other.values)
    }

    /// The same function on an equivalent space.
    pub fn rebind(&self, space: &Arc<CosetSpace>) -> Result<Self> {
        if !self.space.same_space(space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(QuotientFunction {
            space: Arc::clone(space),
            values: self.values.clone(),
        })
    }

    fn from_fn(space: &Arc<CosetSpace>, f: impl FnMut(Coset) -> Complex64) -> Self {
        QuotientFunction {
            space: Arc::clone(space),
            values: space.cosets().map(f).collect(),
        }
    }
}

/// `(f*g)(x) = Σ_y f(y) g(y⁻¹x)` for functions on `G` against counting measure.
pub fn convolve_on_group(group: &FiniteGroup, f: &[Complex64], g: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![ZERO; group.order()];
    for (y, &fy) in f.iter().enumerate() {
        if fy == ZERO {
            continue;
        }
        for (z, &gz) in g.iter().enumerate() {
            out[group.mul(y, z)] += fy * gz;
        }
    }
    out
}

/// `‖f‖₁` on `G` with counting measure.
pub fn l1_norm_on_group(f: &[Complex64]) -> f64 {
    f.iter().map(|v| v.norm()).sum()
}

/// `T_∞f(xH) = ∫_H f(xξ) dλ_H(ξ)`.
pub fn t_infinity(space: &Arc<CosetSpace>, f: &[Complex64]) -> QuotientFunction {
    let g = space.group();
    let h = space.subgroup();
    let scale = 1.0 / h.size() as f64;
    QuotientFunction::from_fn(space, |c| {
        let x = space.rep(c);
        h.members().iter().map(|&xi| f[g.mul(x, xi)]).sum::<Complex64>() * scale
    })
}

/// `_{xH}φ(yH) = ∫_H φ(xξyH) dλ_H(ξ)`.
pub fn left_translate_fn(x: Element, phi: &QuotientFunction) -> QuotientFunction {
    let space = &phi.space;
    let g = space.group();
    let h = space.subgroup();
    let scale = 1.0 / h.size() as f64;
    QuotientFunction::from_fn(space, |c| {
        let y = space.rep(c);
        h.members()
            .iter()
            .map(|&xi| phi.values[space.q(g.mul(g.mul(x, xi), y))])
            .sum::<Complex64>()
            * scale
    })
}

/// `φ_{xH}(yH) = ∫_H φ(yξxH) dλ_H(ξ)`.
pub fn right_translate_fn(x: Element, phi: &QuotientFunction) -> QuotientFunction {
    let space = &phi.space;
    let g = space.group();
    let h = space.subgroup();
    let scale = 1.0 / h.size() as f64;
    QuotientFunction::from_fn(space, |c| {
        let y = space.rep(c);
        h.members()
            .iter()
            .map(|&xi| phi.values[space.q(g.mul(g.mul(y, xi), x))])
            .sum::<Complex64>()
            * scale
    })
}

/// Which space a right translation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationMode {
    /// `𝓡_xφ = T(R_x φ_ρ)`.
    L1,
    /// `𝓡_xφ(yH) = ∫_H φ(yξxH) dλ_H(ξ)`.
    Linf,
}

/// A rho-function on `G` together with the strongly quasi-invariant measure
/// `μ` it induces on `G/H`.
#[derive(Debug, Clone)]
pub struct RhoSystem {
    space: Arc<CosetSpace>,
    rho: Vec<f64>,
    mu: Vec<f64>,
}

impl RhoSystem {
    /// `rho_on_cosets[c]` is the (constant) value of ρ on coset `c`.
    pub fn new(space: &Arc<CosetSpace>, rho_on_cosets: Vec<f64>) -> Result<Self> {
        if rho_on_cosets.len() != space.count() {
            return Err(Error::LengthMismatch {
                expected: space.count(),
                got: rho_on_cosets.len(),
            });
        }
        if let Some((coset, &value)) = rho_on_cosets
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
        {
            return Err(Error::NonPositiveRho { coset, value });
        }
        let h = space.h_size() as f64;
        let mu = rho_on_cosets.iter().map(|r| h * r).collect();
        Ok(RhoSystem {
            space: Arc::clone(space),
            rho: rho_on_cosets,
            mu,
        })
    }

    /// `ρ ≡ 1`, giving the `G`-invariant measure `μ ≡ |H|`.
    pub fn uniform(space: &Arc<CosetSpace>) -> Self {
        Self::new(space, vec![1.0; space.count()]).expect("constant rho is positive")
    }

    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    /// The same ρ over an equivalent space.
    pub fn rebind(&self, space: &Arc<CosetSpace>) -> Result<Self> {
        if !self.space.same_space(space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(RhoSystem {
            space: Arc::clone(space),
            rho: self.rho.clone(),
            mu: self.mu.clone(),
        })
    }

    pub fn rho_on_cosets(&self) -> &[f64] {
        &self.rho
    }

    #[inline]
    pub fn rho(&self, x: Element) -> f64 {
        self.rho[self.space.q(x)]
    }

    /// ρ as a function on `G`.
    pub fn rho_function(&self) -> Vec<Complex64> {
        self.space
            .group()
            .elements()
            .map(|x| Complex64::new(self.rho(x), 0.0))
            .collect()
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    /// `μ` as a measure on `G/H`.
    pub fn mu_measure(&self) -> MeasureQ {
        let w = self.mu.iter().map(|&m| Complex64::new(m, 0.0)).collect();
        MeasureQ::new(&self.space, w).expect("length matches")
    }

    /// `λ(x, yH) = ρ(xy)/ρ(y)`, the density of `μ_x` against `μ`.
    #[inline]
    pub fn cocycle(&self, x: Element, c: Coset) -> f64 {
        let y = self.space.rep(c);
        self.rho(self.space.group().mul(x, y)) / self.rho(y)
    }

    fn check(&self, phi: &QuotientFunction) -> Result<()> {
        if self.space.same_space(&phi.space) {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    fn check_group_fn(&self, f: &[Complex64]) -> Result<()> {
        if f.len() == self.space.group().order() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.space.group().order(),
                got: f.len(),
            })
        }
    }

    /// Both sides of Weil's formula for `f`:
    /// `Σ_g f(g)ρ(g)` and `Σ_c μ(c) ∫_H f(x_c ξ) dλ_H(ξ)`.
    pub fn weil_sides(&self, f: &[Complex64]) -> Result<(Complex64, Complex64)> {
        self.check_group_fn(f)?;
        let lhs = f
            .iter()
            .enumerate()
            .map(|(x, &v)| v * self.rho(x))
            .sum::<Complex64>();
        let inner = t_infinity(&self.space, f);
        let rhs = inner
            .values
            .iter()
            .zip(&self.mu)
            .map(|(v, &m)| v * m)
            .sum::<Complex64>();
        Ok((lhs, rhs))
    }

    /// `T_ρf(xH) = ∫_H f(xξ)/ρ(xξ) dλ_H(ξ)`.
    pub fn t_rho(&self, f: &[Complex64]) -> Result<QuotientFunction> {
        self.check_group_fn(f)?;
        let space = &self.space;
        let g = space.group();
        let h = space.subgroup();
        let scale = 1.0 / h.size() as f64;
        Ok(QuotientFunction::from_fn(space, |c| {
            let x = space.rep(c);
            h.members()
                .iter()
                .map(|&xi| {
                    let z = g.mul(x, xi);
                    f[z] / self.rho(z)
                })
                .sum::<Complex64>()
                * scale
        }))
    }

    /// `φ_ρ(x) = φ(xH)·ρ(x)`.
    pub fn lift(&self, phi: &QuotientFunction) -> Result<Vec<Complex64>> {
        self.check(phi)?;
        Ok(self
            .space
            .group()
            .elements()
            .map(|x| phi.values[self.space.q(x)] * self.rho(x))
            .collect())
    }

    /// `‖φ‖₁ = Σ_c |φ(c)| μ(c)`.
    pub fn l1_norm(&self, phi: &QuotientFunction) -> f64 {
        phi.values.iter().zip(&self.mu).map(|(v, m)| v.norm() * m).sum()
    }

    /// `∫ φψ dμ` (bilinear, no conjugation).
    pub fn pairing(&self, phi: &QuotientFunction, psi: &QuotientFunction) -> Complex64 {
        phi.values
            .iter()
            .zip(&psi.values)
            .zip(&self.mu)
            .map(|((a, b), &m)| a * b * m)
            .sum()
    }

    /// `∫ φ dμ`.
    pub fn integral(&self, phi: &QuotientFunction) -> Complex64 {
        phi.values.iter().zip(&self.mu).map(|(a, &m)| a * m).sum()
    }

    /// `μ_φ`, the measure with density `φ` against `μ`.
    pub fn density_measure(&self, phi: &QuotientFunction) -> Result<MeasureQ> {
        self.check(phi)?;
        let w = phi.values.iter().zip(&self.mu).map(|(v, &m)| v * m).collect();
        MeasureQ::new(&self.space, w)
    }

    /// `dν/dμ`; every measure on a finite space has one since `μ > 0`.
    pub fn density_of(&self, nu: &MeasureQ) -> Result<QuotientFunction> {
        nu.check_space(&self.space)?;
        let v = nu.weights().iter().zip(&self.mu).map(|(w, &m)| w / m).collect();
        QuotientFunction::new(&self.space, v)
    }

    /// `𝓛_xφ(yH) = λ(x⁻¹, yH) φ(x⁻¹yH)`.
    pub fn translate_left(&self, x: Element, phi: &QuotientFunction) -> Result<QuotientFunction> {
        self.check(phi)?;
        let space = &self.space;
        let xi = space.group().inv(x);
        Ok(QuotientFunction::from_fn(space, |c| {
            phi.values[space.act(xi, c)] * self.cocycle(xi, c)
        }))
    }

    pub fn translate_right(
        &self,
        x: Element,
        phi: &QuotientFunction,
        mode: TranslationMode,
    ) -> Result<QuotientFunction> {
        self.check(phi)?;
        let space = &self.space;
        let g = space.group();
        let h = space.subgroup();
        let scale = 1.0 / h.size() as f64;
        Ok(QuotientFunction::from_fn(space, |c| {
            let y = space.rep(c);
            h.members()
                .iter()
                .map(|&xi| {
                    let z = g.mul(g.mul(y, xi), x);
                    let v = phi.values[space.q(z)];
                    match mode {
                        TranslationMode::L1 => v * (self.rho(z) / self.rho(y)),
                        TranslationMode::Linf => v,
                    }
                })
                .sum::<Complex64>()
                * scale
        }))
    }

    /// `φ*ψ = T(φ_ρ * ψ_ρ)`.
    pub fn convolve(&self, phi: &QuotientFunction, psi: &QuotientFunction) -> Result<QuotientFunction> {
        let f = self.lift(phi)?;
        let g = self.lift(psi)?;
        self.t_rho(&convolve_on_group(self.space.group(), &f, &g))
    }

    /// `φ*ψ = ∫_G φ_ρ(y) 𝓛_yψ dλ_G(y)`, summed as a vector integral.
    pub fn convolve_by_translates(
        &self,
        phi: &QuotientFunction,
        psi: &QuotientFunction,
    ) -> Result<QuotientFunction> {
        let f = self.lift(phi)?;
        self.check(psi)?;
        let mut out = vec![ZERO; self.space.count()];
        for (y, &fy) in f.iter().enumerate() {
            if fy == ZERO {
                continue;
            }
            let t = self.translate_left(y, psi)?;
            for (o, v) in out.iter_mut().zip(&t.values) {
                *o += fy * v;
            }
        }
        QuotientFunction::new(&self.space, out)
    }

    /// `(φ*ν)(xH) = ∫ Δ_G(y⁻¹) ∫_H φ(xξy⁻¹H) ρ(xξy⁻¹)/ρ(x) dλ_H(ξ) dν(yH)`.
    pub fn ideal_right(&self, phi: &QuotientFunction, nu: &MeasureQ) -> Result<QuotientFunction> {
        self.check(phi)?;
        nu.check_space(&self.space)?;
        let space = &self.space;
        let g = space.group();
        let h = space.subgroup();
        let scale = 1.0 / h.size() as f64;
        Ok(QuotientFunction::from_fn(space, |c| {
            let x = space.rep(c);
            let mut total = ZERO;
            for (d, &nd) in nu.weights().iter().enumerate() {
                if nd == ZERO {
                    continue;
                }
                let y_inv = g.inv(space.rep(d));
                let inner: Complex64 = h
                    .members()
                    .iter()
                    .map(|&xi| {
                        let z = g.mul(g.mul(x, xi), y_inv);
                        phi.values[space.q(z)] * (self.rho(z) / self.rho(x))
                    })
                    .sum();
                total += nd * MODULAR_G * inner * scale;
            }
            total
        }))
    }

    /// `(ν*φ)(xH) = ∫ ∫_H φ(ξy⁻¹xH) λ(ξy⁻¹, xH) dλ_H(ξ) dν(yH)`.
    pub fn ideal_left(&self, nu: &MeasureQ, phi: &QuotientFunction) -> Result<QuotientFunction> {
        self.check(phi)?;
        nu.check_space(&self.space)?;
        let space = &self.space;
        let g = space.group();
        let h = space.subgroup();
        let scale = 1.0 / h.size() as f64;
        Ok(QuotientFunction::from_fn(space, |c| {
            let mut total = ZERO;
            for (d, &nd) in nu.weights().iter().enumerate() {
                if nd == ZERO {
                    continue;
                }
                let y_inv = g.inv(space.rep(d));
                let inner: Complex64 = h
                    .members()
                    .iter()
                    .map(|&xi| {
                        let z = g.mul(xi, y_inv);
                        phi.values[space.act(z, c)] * self.cocycle(z, c)
                    })
                    .sum();
                total += nd * inner * scale;
            }
            total
        }))
    }

    /// Least-squares search for `η` with `η*φ = φ` on every basis function.
    pub fn left_identity_search(&self, tol: f64) -> L1IdentityReport {
        let k = self.space.count();
        let basis: Vec<QuotientFunction> = self
            .space
            .cosets()
            .map(|c| QuotientFunction::indicator(&self.space, c))
            .collect();
        let mut a = DMatrix::<f64>::zeros(k * k, k);
        let mut rhs = DVector::<f64>::zeros(k * k);
        for (u, eu) in basis.iter().enumerate() {
            for (b, eb) in basis.iter().enumerate() {
                let prod = self.convolve(eu, eb).expect("same system");
                for (c, v) in prod.values.iter().enumerate() {
                    a[(b * k + c, u)] = v.re;
                }
            }
        }
        for b in 0..k {
            rhs[b * k + b] = 1.0;
        }
        let (candidate, residual) = least_squares(&a, &rhs);
        let has_left_identity = residual <= tol;
        let identity = has_left_identity.then(|| {
            let v = candidate.iter().map(|&x| Complex64::new(x, 0.0)).collect();
            QuotientFunction::new(&self.space, v).expect("length matches")
        });
        L1IdentityReport {
            has_left_identity,
            identity,
            residual,
            is_normal: self.space.is_normal(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct L1IdentityReport {
    pub has_left_identity: bool,
    pub identity: Option<QuotientFunction>,
    /// Max-modulus residual of the least-squares candidate.
    pub residual: f64,
    pub is_normal: bool,
}

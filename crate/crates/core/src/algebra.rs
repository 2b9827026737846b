//! The convolution algebra `M(G/H)`.
//!
//! `(ν*ω)(φ) = ∫∫∫ φ(xξyH) dλ_H(ξ) dν(xH) dω(yH)`. Two evaluation paths are
//! provided: `Direct` sums over coset pairs and `ξ ∈ H` with exact integer
//! coincidence counts, `Embed` lifts both factors into `M(G:H)`, convolves in
//! `M(G)` and projects back.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::coset::CosetSpace;
use crate::error::{Error, Result};
use crate::group::Element;
use crate::measure::{MeasureQ, PointMasses, ZERO};
use crate::random;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Embed,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Method::Direct),
            "embed" => Ok(Method::Embed),
            other => Err(Error::Format(format!("unknown method `{other}`"))),
        }
    }
}

/// `M(G/H)` with a chosen convolution path.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    space: Arc<CosetSpace>,
    method: Method,
}

impl QuotientAlgebra {
    pub fn new(space: &Arc<CosetSpace>, method: Method) -> Self {
        QuotientAlgebra {
            space: Arc::clone(space),
            method,
        }
    }

    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn with_method(&self, method: Method) -> Self {
        QuotientAlgebra {
            space: Arc::clone(&self.space),
            method,
        }
    }

    pub fn convolve(&self, nu: &MeasureQ, omega: &MeasureQ) -> Result<MeasureQ> {
        nu.check_space(&self.space)?;
        omega.check_space(&self.space)?;
        match self.method {
            Method::Direct => Ok(self.convolve_direct(nu, omega)),
            Method::Embed => nu.section().convolve(&omega.section())?.project(&self.space),
        }
    }

    fn convolve_direct(&self, nu: &MeasureQ, omega: &MeasureQ) -> MeasureQ {
        let space = &self.space;
        let g = space.group();
        let h = space.subgroup();
        let h_size = h.size() as f64;
        let mut out = vec![ZERO; space.count()];
        let mut counts = vec![0usize; space.count()];
        for (a, &na) in nu.weights().iter().enumerate() {
            if na == ZERO {
                continue;
            }
            for (b, &ob) in omega.weights().iter().enumerate() {
                if ob == ZERO {
                    continue;
                }
                counts.fill(0);
                let (x, y) = (space.rep(a), space.rep(b));
                for &xi in h.members() {
                    counts[space.q(g.mul(g.mul(x, xi), y))] += 1;
                }
                let nw = na * ob;
                for (c, &n) in counts.iter().enumerate() {
                    if n > 0 {
                        out[c] += nw * (n as f64 / h_size);
                    }
                }
            }
        }
        MeasureQ::new(space, out).expect("length matches")
    }

    /// `δ_{xH} * δ_{yH} = ∫_H δ_{xξyH} dλ_H(ξ)`.
    pub fn dirac_convolve(&self, x: Element, y: Element) -> MeasureQ {
        let space = &self.space;
        let g = space.group();
        let h = space.subgroup();
        let mut counts = vec![0usize; space.count()];
        for &xi in h.members() {
            counts[space.q(g.mul(g.mul(x, xi), y))] += 1;
        }
        let h_size = h.size() as f64;
        let weights = counts
            .into_iter()
            .map(|n| Complex64::new(n as f64 / h_size, 0.0))
            .collect();
        MeasureQ::new(space, weights).expect("length matches")
    }

    /// `T[a][b][c] = (δ_a * δ_b)({c})`, flattened.
    fn structure_constants(&self) -> Vec<f64> {
        let k = self.space.count();
        let mut t = vec![0.0; k * k * k];
        for a in 0..k {
            for b in 0..k {
                let d = self.dirac_convolve(self.space.rep(a), self.space.rep(b));
                for (c, w) in d.weights().iter().enumerate() {
                    t[(a * k + b) * k + c] = w.re;
                }
            }
        }
        t
    }

    /// Searches for a two-sided identity by least squares over the equations
    /// `ε*δ_b = δ_b` and `δ_b*ε = δ_b` for every coset `b`.
    pub fn identity_report(&self, tol: f64) -> IdentityReport {
        let space = &self.space;
        let k = space.count();
        let t = self.structure_constants();
        let at = |a: usize, b: usize, c: usize| t[(a * k + b) * k + c];

        // Right identity: ν * δ_{eH} = ν on every basis Dirac.
        let e = space.q(space.group().identity());
        let mut right_residual = 0.0f64;
        for a in 0..k {
            for c in 0..k {
                let target = if a == c { 1.0 } else { 0.0 };
                right_residual = right_residual.max((at(a, e, c) - target).abs());
            }
        }

        // Left-identity defect of δ_{eH}: max_b ‖δ_{eH}*δ_b − δ_b‖.
        let left_defect = (0..k)
            .map(|b| {
                (0..k)
                    .map(|c| (at(e, b, c) - if b == c { 1.0 } else { 0.0 }).abs())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max);

        let rows = 2 * k * k;
        let mut a_mat = DMatrix::<f64>::zeros(rows, k);
        let mut rhs = DVector::<f64>::zeros(rows);
        for b in 0..k {
            for c in 0..k {
                let r1 = b * k + c;
                let r2 = k * k + b * k + c;
                for u in 0..k {
                    a_mat[(r1, u)] = at(u, b, c);
                    a_mat[(r2, u)] = at(b, u, c);
                }
                if b == c {
                    rhs[r1] = 1.0;
                    rhs[r2] = 1.0;
                }
            }
        }
        let (candidate, residual) = least_squares(&a_mat, &rhs);
        let has_identity = residual <= tol;
        let identity = has_identity.then(|| {
            let w = candidate
                .iter()
                .map(|&v| Complex64::new(v, 0.0))
                .collect();
            MeasureQ::new(space, w).expect("length matches")
        });
        IdentityReport {
            has_right_identity: right_residual <= tol,
            right_identity_residual: right_residual,
            has_identity,
            identity,
            is_normal: space.is_normal(),
            residual,
            left_defect_of_unit: left_defect,
        }
    }

    /// `ν*(cH) = conj(ν((cH)⁻¹))`, defined only when `H` is normal.
    pub fn involution(&self, nu: &MeasureQ) -> Result<MeasureQ> {
        nu.check_space(&self.space)?;
        if !self.space.is_normal() {
            return Err(Error::NotNormal);
        }
        let space = &self.space;
        let g = space.group();
        let weights = space
            .cosets()
            .map(|c| nu.weights()[space.q(g.inv(space.rep(c)))].conj())
            .collect();
        MeasureQ::new(space, weights)
    }

    /// Verifies the involution laws on random samples when `H` is normal, or
    /// certifies the obstruction (right identity without a two-sided one)
    /// when it is not.
    pub fn involution_check<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        trials: usize,
        tol: f64,
    ) -> Result<InvolutionReport> {
        let identity = self.identity_report(tol);
        if !self.space.is_normal() {
            return Ok(InvolutionReport {
                is_normal: false,
                verified: false,
                max_error: None,
                trials: 0,
                obstructed: identity.has_right_identity && !identity.has_identity,
                identity,
            });
        }
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let nu = random::measure_q(rng, &self.space);
            let omega = random::measure_q(rng, &self.space);
            let lhs = self.involution(&self.convolve(&nu, &omega)?)?;
            let rhs = self.convolve(&self.involution(&omega)?, &self.involution(&nu)?)?;
            worst = worst.max(lhs.max_distance(&rhs));
            let nn = self.involution(&self.involution(&nu)?)?;
            worst = worst.max(nn.max_distance(&nu));
            worst = worst.max((self.involution(&nu)?.tv_norm() - nu.tv_norm()).abs());
        }
        Ok(InvolutionReport {
            is_normal: true,
            verified: worst <= tol,
            max_error: Some(worst),
            trials,
            obstructed: false,
            identity,
        })
    }
}

/// Minimum-norm least-squares solution and the max-modulus residual.
pub(crate) fn least_squares(a: &DMatrix<f64>, b: &DVector<f64>) -> (Vec<f64>, f64) {
    let svd = a.clone().svd(true, true);
    let x = svd
        .solve(b, 1e-12)
        .expect("both singular-vector sets were computed");
    let r = a * &x - b;
    let residual = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    (x.iter().copied().collect(), residual)
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub has_right_identity: bool,
    pub right_identity_residual: f64,
    pub has_identity: bool,
    pub identity: Option<MeasureQ>,
    pub is_normal: bool,
    /// Max-modulus residual of the least-squares identity candidate.
    pub residual: f64,
    /// `max_b ‖δ_{eH}*δ_b − δ_b‖`; zero exactly when `H` is normal.
    pub left_defect_of_unit: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvolutionReport {
    pub is_normal: bool,
    pub verified: bool,
    pub max_error: Option<f64>,
    pub trials: usize,
    /// No involution can exist: a right identity exists but no identity does.
    pub obstructed: bool,
    #[serde(skip)]
    pub identity: IdentityReport,
}

//! Complex measures on `G` and on `G/H`.
//!
//! On a finite space a measure is its vector of point masses and the
//! total-variation norm is the sum of their moduli. `G` carries counting
//! measure and `H` its normalized Haar measure (mass `1/|H|` per point), so
//! the pushforward `project` and its isometric section `section` are plain
//! sums and averages over cosets.

use std::sync::Arc;

use num_complex::Complex64;

use crate::coset::{Coset, CosetSpace};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::subgroup::Subgroup;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Project-wide tolerance for floating-point zero tests.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Common access to measures on either space.
pub trait PointMasses {
    fn weights(&self) -> &[Complex64];

    fn tv_norm(&self) -> f64 {
        self.weights().iter().map(|w| w.norm()).sum()
    }

    /// Largest componentwise modulus of the difference.
    fn max_distance(&self, other: &Self) -> f64 {
        max_abs_diff(self.weights(), other.weights())
    }
}

pub(crate) fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// A complex measure on `G`: `weights[g] = m({g})`.
#[derive(Debug, Clone)]
pub struct MeasureG {
    group: Arc<FiniteGroup>,
    weights: Vec<Complex64>,
}

/// A complex measure on `G/H`: `weights[c] = ν({c-th coset})`.
#[derive(Debug, Clone)]
pub struct MeasureQ {
    space: Arc<CosetSpace>,
    weights: Vec<Complex64>,
}

impl PointMasses for MeasureG {
    fn weights(&self) -> &[Complex64] {
        &self.weights
    }
}

impl PointMasses for MeasureQ {
    fn weights(&self) -> &[Complex64] {
        &self.weights
    }
}

impl MeasureG {
    pub fn new(group: &Arc<FiniteGroup>, weights: Vec<Complex64>) -> Result<Self> {
        if weights.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: weights.len(),
            });
        }
        Ok(MeasureG {
            group: Arc::clone(group),
            weights,
        })
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        MeasureG {
            group: Arc::clone(group),
            weights: vec![ZERO; group.order()],
        }
    }

    /// Unit point mass `δ_x`.
    pub fn dirac(group: &Arc<FiniteGroup>, x: Element) -> Self {
        let mut m = Self::zero(group);
        m.weights[x] = ONE;
        m
    }

    /// Counting measure `λ_G`.
    pub fn counting(group: &Arc<FiniteGroup>) -> Self {
        MeasureG {
            group: Arc::clone(group),
            weights: vec![ONE; group.order()],
        }
    }

    /// Normalized Haar measure of `H`, viewed as a measure on `G`.
    pub fn uniform_on(subgroup: &Subgroup) -> Self {
        let mut m = Self::zero(subgroup.group());
        let w = Complex64::new(1.0 / subgroup.size() as f64, 0.0);
        for &h in subgroup.members() {
            m.weights[h] = w;
        }
        m
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn into_weights(self) -> Vec<Complex64> {
        self.weights
    }

    fn check_group(&self, group: &FiniteGroup) -> Result<()> {
        if std::ptr::eq(&*self.group, group) || *self.group == *group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Convolution in `M(G)`: `(m*n)(g) = Σ_x m(x) n(x⁻¹g)`.
    pub fn convolve(&self, other: &MeasureG) -> Result<MeasureG> {
        self.check_group(&other.group)?;
        let g = &self.group;
        let mut out = vec![ZERO; g.order()];
        for (x, &mx) in self.weights.iter().enumerate() {
            if mx == ZERO {
                continue;
            }
            for (y, &ny) in other.weights.iter().enumerate() {
                out[g.mul(x, y)] += mx * ny;
            }
        }
        Ok(MeasureG {
            group: Arc::clone(g),
            weights: out,
        })
    }

    /// Pushforward along `q`: `project(m)(E) = m(q⁻¹(E))`.
    pub fn project(&self, space: &Arc<CosetSpace>) -> Result<MeasureQ> {
        self.check_group(space.group())?;
        let mut out = vec![ZERO; space.count()];
        for (x, &w) in self.weights.iter().enumerate() {
            out[space.q(x)] += w;
        }
        Ok(MeasureQ {
            space: Arc::clone(space),
            weights: out,
        })
    }

    /// Whether `m(Ah) = m(A)` for all `h ∈ H`, i.e. `m ∈ M(G:H)`.
    pub fn is_right_invariant(&self, subgroup: &Subgroup, tol: f64) -> Result<bool> {
        Ok(self.right_invariance_defect(subgroup)? <= tol)
    }

    /// `max_{g,h} |m(gh) - m(g)|`.
    pub fn right_invariance_defect(&self, subgroup: &Subgroup) -> Result<f64> {
        self.check_group(subgroup.group())?;
        let g = &self.group;
        let mut worst = 0.0f64;
        for x in g.elements() {
            for &h in subgroup.members() {
                worst = worst.max((self.weights[g.mul(x, h)] - self.weights[x]).norm());
            }
        }
        Ok(worst)
    }
}

impl MeasureQ {
    pub fn new(space: &Arc<CosetSpace>, weights: Vec<Complex64>) -> Result<Self> {
        if weights.len() != space.count() {
            return Err(Error::LengthMismatch {
                expected: space.count(),
                got: weights.len(),
            });
        }
        Ok(MeasureQ {
            space: Arc::clone(space),
            weights,
        })
    }

    pub fn zero(space: &Arc<CosetSpace>) -> Self {
        MeasureQ {
            space: Arc::clone(space),
            weights: vec![ZERO; space.count()],
        }
    }

    /// Unit mass at the coset with index `c`.
    pub fn dirac(space: &Arc<CosetSpace>, c: Coset) -> Self {
        let mut m = Self::zero(space);
        m.weights[c] = ONE;
        m
    }

    /// `δ_{xH}`.
    pub fn dirac_at(space: &Arc<CosetSpace>, x: Element) -> Self {
        Self::dirac(space, space.q(x))
    }

    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    pub fn into_weights(self) -> Vec<Complex64> {
        self.weights
    }

    pub(crate) fn check_space(&self, space: &CosetSpace) -> Result<()> {
        if self.space.same_space(space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// The same measure attached to an equivalent space (typically one with
    /// different representatives).
    pub fn rebind(&self, space: &Arc<CosetSpace>) -> Result<MeasureQ> {
        self.check_space(space)?;
        Ok(MeasureQ {
            space: Arc::clone(space),
            weights: self.weights.clone(),
        })
    }

    /// The measure `m_ν ∈ M(G:H)` with `∫ f dm_ν = ∫ T_∞f dν`:
    /// each coset's mass is spread evenly over its elements.
    pub fn section(&self) -> MeasureG {
        let space = &self.space;
        let scale = 1.0 / space.h_size() as f64;
        let weights = space
            .group()
            .elements()
            .map(|x| self.weights[space.q(x)] * scale)
            .collect();
        MeasureG {
            group: Arc::clone(space.group()),
            weights,
        }
    }

    /// `m ⋆ ν`: `(m⋆ν)(φ) = ∫∫ φ(yxH) dm(y) dν(xH)`.
    pub fn acted_on_by(&self, m: &MeasureG) -> Result<MeasureQ> {
        m.check_group(self.space.group())?;
        let space = &self.space;
        let mut out = vec![ZERO; space.count()];
        for (d, &nd) in self.weights.iter().enumerate() {
            if nd == ZERO {
                continue;
            }
            for (y, &my) in m.weights.iter().enumerate() {
                out[space.act(y, d)] += my * nd;
            }
        }
        Ok(MeasureQ {
            space: Arc::clone(space),
            weights: out,
        })
    }
}

/// `m ⋆ ν`, the left `M(G)`-module action on `M(G/H)`.
pub fn module_action(m: &MeasureG, nu: &MeasureQ) -> Result<MeasureQ> {
    nu.acted_on_by(m)
}

/// A measure of either kind, as read from a measure file.
#[derive(Debug, Clone)]
pub enum AnyMeasure {
    G(MeasureG),
    Q(MeasureQ),
}

/// `a ≪ b` on a finite space: `a` vanishes wherever `b` does.
pub fn is_absolutely_continuous<M: PointMasses>(a: &M, b: &M, tol: f64) -> Result<bool> {
    if a.weights().len() != b.weights().len() {
        return Err(Error::LengthMismatch {
            expected: b.weights().len(),
            got: a.weights().len(),
        });
    }
    Ok(a
        .weights()
        .iter()
        .zip(b.weights())
        .all(|(x, y)| y.norm() > tol || x.norm() <= tol))
}

impl AnyMeasure {
    pub fn is_absolutely_continuous(&self, other: &AnyMeasure, tol: f64) -> Result<bool> {
        match (self, other) {
            (AnyMeasure::G(a), AnyMeasure::G(b)) => {
                a.check_group(&b.group)?;
                is_absolutely_continuous(a, b, tol)
            }
            (AnyMeasure::Q(a), AnyMeasure::Q(b)) => {
                a.check_space(&b.space)?;
                is_absolutely_continuous(a, b, tol)
            }
            _ => Err(Error::KindMismatch),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn z4_mod_2() -> Arc<CosetSpace> {
        let g = catalog::group("Z4").unwrap();
        Arc::new(CosetSpace::new(Subgroup::new(&g, [0, 2]).unwrap()))
    }

    fn s3_space() -> Arc<CosetSpace> {
        let g = catalog::group("S3").unwrap();
        Arc::new(CosetSpace::new(Subgroup::from_names(&g, &["(0 1)"]).unwrap()))
    }

    #[test]
    fn norms() {
        let g = catalog::group("Z3").unwrap();
        assert_eq!(MeasureG::dirac(&g, 2).tv_norm(), 1.0);
        let m = MeasureG::new(&g, vec![c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(m.tv_norm(), 3.0);
        assert!(MeasureG::new(&g, vec![ONE]).is_err());
    }

    #[test]
    fn projection_examples() {
        let s = z4_mod_2();
        let g = s.group().clone();
        let m = MeasureG::new(&g, vec![c(1.0, 0.0), ZERO, c(2.0, 0.0), ZERO]).unwrap();
        assert_eq!(m.project(&s).unwrap().weights(), &[c(3.0, 0.0), ZERO]);
        for x in g.elements() {
            let p = MeasureG::dirac(&g, x).project(&s).unwrap();
            assert_eq!(p.weights(), MeasureQ::dirac_at(&s, x).weights());
        }
        let t = Arc::new(CosetSpace::new(Subgroup::trivial(&g)));
        let m = MeasureG::new(&g, vec![c(1.0, 2.0), c(3.0, -1.0), ZERO, c(0.5, 0.0)]).unwrap();
        assert_eq!(m.project(&t).unwrap().weights(), m.weights());
    }

    #[test]
    fn section_examples() {
        let s = z4_mod_2();
        let nu = MeasureQ::new(&s, vec![c(0.0, 2.0), c(4.0, 0.0)]).unwrap();
        let m = nu.section();
        assert_eq!(m.weights(), &[c(0.0, 1.0), c(2.0, 0.0), c(0.0, 1.0), c(2.0, 0.0)]);
        assert_eq!(m.tv_norm(), nu.tv_norm());
        assert_eq!(m.project(&s).unwrap().weights(), nu.weights());

        let s3 = s3_space();
        let u = MeasureQ::dirac(&s3, 0).section();
        assert_eq!(u.weights(), MeasureG::uniform_on(s3.subgroup()).weights());
    }

    #[test]
    fn right_invariance() {
        let s = s3_space();
        let g = s.group().clone();
        let nu = MeasureQ::new(&s, vec![c(1.0, 1.0), c(-2.0, 0.0), c(0.0, 3.0)]).unwrap();
        assert!(nu.section().is_right_invariant(s.subgroup(), 1e-12).unwrap());
        assert!(!MeasureG::dirac(&g, 3).is_right_invariant(s.subgroup(), 1e-9).unwrap());
        let trivial = Subgroup::trivial(&g);
        assert!(MeasureG::dirac(&g, 3).is_right_invariant(&trivial, 0.0).unwrap());
    }

    #[test]
    fn convolution_examples() {
        let g = catalog::group("S3").unwrap();
        for x in g.elements() {
            for y in g.elements() {
                let xy = MeasureG::dirac(&g, x).convolve(&MeasureG::dirac(&g, y)).unwrap();
                assert_eq!(xy.weights(), MeasureG::dirac(&g, g.mul(x, y)).weights());
            }
        }
        let e = MeasureG::dirac(&g, g.identity());
        let m = MeasureG::new(&g, (0..6).map(|i| c(i as f64, 1.0 - i as f64)).collect()).unwrap();
        assert_eq!(e.convolve(&m).unwrap().weights(), m.weights());
        assert_eq!(m.convolve(&e).unwrap().weights(), m.weights());

        // Idempotence of normalized Haar measure on H, against a double sum.
        let h = Subgroup::from_names(&g, &["(0 1)"]).unwrap();
        let u = MeasureG::uniform_on(&h);
        let mut oracle = vec![ZERO; 6];
        for a in g.elements() {
            for b in g.elements() {
                oracle[g.mul(a, b)] += u.weights()[a] * u.weights()[b];
            }
        }
        let uu = u.convolve(&u).unwrap();
        assert_eq!(uu.weights(), oracle.as_slice());
        assert!(uu.max_distance(&u) < 1e-15);

        let z = catalog::group("Z6").unwrap();
        assert!(matches!(
            MeasureG::zero(&z).convolve(&e),
            Err(Error::GroupMismatch)
        ));
    }

    #[test]
    fn module_action_examples() {
        let s = s3_space();
        let g = s.group().clone();
        let nu = MeasureQ::new(&s, vec![c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 0.5)]).unwrap();
        let e = MeasureG::dirac(&g, g.identity());
        assert_eq!(module_action(&e, &nu).unwrap().weights(), nu.weights());
        for x in g.elements() {
            for y in g.elements() {
                let lhs = module_action(&MeasureG::dirac(&g, x), &MeasureQ::dirac_at(&s, y)).unwrap();
                assert_eq!(lhs.weights(), MeasureQ::dirac_at(&s, g.mul(x, y)).weights());
            }
        }
    }

    #[test]
    fn absolute_continuity() {
        let s = s3_space();
        let g = s.group().clone();
        let a = MeasureQ::dirac(&s, 0);
        let b = MeasureQ::dirac(&s, 1);
        assert!(is_absolutely_continuous(&a, &a, 1e-9).unwrap());
        assert!(!is_absolutely_continuous(&a, &b, 1e-9).unwrap());
        let d = MeasureG::dirac(&g, 4);
        assert!(is_absolutely_continuous(&d, &MeasureG::counting(&g), 1e-9).unwrap());
        let err = AnyMeasure::G(d).is_absolutely_continuous(&AnyMeasure::Q(a), 1e-9);
        assert!(matches!(err, Err(Error::KindMismatch)));
    }
}

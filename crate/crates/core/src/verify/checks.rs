use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::Tracker;
use crate::algebra::{IdentityReport, QuotientAlgebra};
use crate::coset::CosetSpace;
use crate::error::Result;
use crate::lebesgue::{
    convolve_on_group, l1_norm_on_group, left_translate_fn, right_translate_fn, t_infinity,
    L1IdentityReport, QuotientFunction, RhoSystem, TranslationMode,
};
use crate::measure::{is_absolutely_continuous, max_abs_diff, module_action, MeasureG, MeasureQ, PointMasses, ONE, ZERO};
use crate::random;

/// Tolerance for identities that hold up to rounding only.
pub const EXACT: f64 = 1e-12;

/// A least-squares residual below this does not certify an obstruction.
pub const OBSTRUCTION_MARGIN: f64 = 1e-3;

pub(crate) struct Ctx {
    pub space: Arc<CosetSpace>,
    pub direct: QuotientAlgebra,
    pub embed: QuotientAlgebra,
    pub sys: RhoSystem,
    pub identity: IdentityReport,
    pub l1_identity: L1IdentityReport,
    pub trials: usize,
    pub tol: f64,
}

impl Ctx {
    fn exact(&self) -> Tracker {
        Tracker::new(self.tol.min(EXACT))
    }

    fn loose(&self) -> Tracker {
        Tracker::new(self.tol)
    }

    fn nu(&self, rng: &mut ChaCha8Rng) -> MeasureQ {
        random::measure_q(rng, &self.space)
    }

    fn m(&self, rng: &mut ChaCha8Rng) -> MeasureG {
        random::measure_g(rng, self.space.group())
    }

    fn phi(&self, rng: &mut ChaCha8Rng) -> QuotientFunction {
        random::function_q(rng, &self.space)
    }

    fn element(&self, rng: &mut ChaCha8Rng) -> usize {
        rng.gen_range(0..self.space.group().order())
    }

    /// The same space and ρ with a random representative in every coset.
    fn shuffled(&self, rng: &mut ChaCha8Rng) -> (Arc<CosetSpace>, RhoSystem) {
        let alt = Arc::new(self.space.with_random_representatives(rng));
        let sys = self.sys.rebind(&alt).expect("same partition");
        (alt, sys)
    }
}

pub(crate) type CheckFn = fn(&Ctx, &mut ChaCha8Rng) -> Result<Tracker>;

/// The fixed check list, in report order.
pub(crate) const CHECKS: &[(&str, CheckFn)] = &[
    ("group-action-laws", group_action_laws),
    ("coset-partition", coset_partition),
    ("normality-brute-force", normality_brute_force),
    ("project-section-inverse", project_section_inverse),
    ("section-isometry", section_isometry),
    ("projection-contraction", projection_contraction),
    ("invariance-equivalence", invariance_equivalence),
    ("invariant-left-ideal", invariant_left_ideal),
    ("module-action", module_action_compat),
    ("absolute-continuity", absolute_continuity),
    ("group-convolution-associativity", group_associativity),
    ("convolution-dual-path", dual_path),
    ("convolution-associativity", associativity),
    ("convolution-submultiplicative", submultiplicative),
    ("right-identity", right_identity),
    ("dirac-formula", dirac_formula),
    ("embedding-homomorphism", embedding_homomorphism),
    ("identity-iff-normal", identity_iff_normal),
    ("unit-left-defect", unit_left_defect),
    ("involution", involution),
    ("weil-formula", weil_formula),
    ("t-integral-identity", t_integral_identity),
    ("t-lift-identity", t_lift_identity),
    ("lift-isometry", lift_isometry),
    ("t-contraction", t_contraction),
    ("t-infinity-duality", t_infinity_duality),
    ("left-translation-homomorphism", left_translation_homomorphism),
    ("left-translation-isometry", left_translation_isometry),
    ("left-translation-transfer", left_translation_transfer),
    ("right-translation-adjoint", right_translation_adjoint),
    ("translated-functions-pairing", translated_functions_pairing),
    ("lift-section", lift_section),
    ("l1-embedding-homomorphism", l1_embedding_homomorphism),
    ("l1-vector-integral", l1_vector_integral),
    ("l1-left-ideal", l1_left_ideal),
    ("l1-algebra-laws", l1_algebra_laws),
    ("right-ideal-formula", right_ideal_formula),
    ("left-ideal-formula", left_ideal_formula),
    ("l1-left-identity-iff-normal", l1_left_identity_iff_normal),
    ("rep-independence-dual-path", rep_independence_dual_path),
    ("rep-independence-l1", rep_independence_l1),
    ("rep-independence-ideal", rep_independence_ideal),
    ("rep-independence-translated-functions", rep_independence_translated_functions),
];

fn group_action_laws(cx: &Ctx, _: &mut ChaCha8Rng) -> Result<Tracker> {
    let s = &cx.space;
    let g = s.group();
    let mut t = cx.exact();
    let mut violations = 0usize;
    for c in s.cosets() {
        if s.act(g.identity(), c) != c {
            violations += 1;
        }
        for x in g.elements() {
            for y in g.elements() {
                if s.act(x, s.act(y, c)) != s.act(g.mul(x, y), c) {
                    violations += 1;
                }
            }
        }
    }
    t.record_bool(violations == 0, || json!({ "violations": violations }));
    t.observe(violations as f64);
    Ok(t)
}

fn coset_partition(cx: &Ctx, _: &mut ChaCha8Rng) -> Result<Tracker> {
    let s = &cx.space;
    let g = s.group();
    let h = s.subgroup();
    let mut hits = vec![0usize; g.order()];
    for c in s.cosets() {
        for &x in s.members(c) {
            hits[x] += 1;
        }
    }
    let mut ok = hits.iter().all(|&n| n == 1);
    for x in g.elements() {
        for y in g.elements() {
            let same = h.contains(g.mul(g.inv(x), y));
            ok &= same == (s.q(x) == s.q(y));
        }
    }
    let mut t = cx.exact();
    t.record_bool(ok, || json!({ "cosets": s.count() }));
    Ok(t)
}

fn normality_brute_force(cx: &Ctx, _: &mut ChaCha8Rng) -> Result<Tracker> {
    let g = cx.space.group();
    let h = cx.space.subgroup();
    let conjugation_closed = g
        .elements()
        .all(|x| h.members().iter().all(|&m| h.contains(g.mul(g.mul(x, m), g.inv(x)))));
    let mut t = cx.exact();
    t.record_bool(conjugation_closed == h.is_normal(), || {
        json!({ "is_normal": h.is_normal(), "conjugation_closed": conjugation_closed })
    });
    Ok(t)
}

fn project_section_inverse(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let nu = cx.nu(rng);
        let back = nu.section().project(&cx.space)?;
        t.record(back.max_distance(&nu), || json!({ "nu": nu }));
    }
    Ok(t)
}

fn section_isometry(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let nu = cx.nu(rng);
        t.record((nu.section().tv_norm() - nu.tv_norm()).abs(), || json!({ "nu": nu }));
    }
    Ok(t)
}

/// `‖project m‖ ≤ ‖m‖`, with equality at the section, so the quotient norm
/// is a minimum.
fn projection_contraction(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let m = cx.m(rng);
        let p = m.project(&cx.space)?;
        t.record_le(p.tv_norm(), m.tv_norm(), || json!({ "m": m }));
        t.record_le(p.section().tv_norm(), m.tv_norm(), || json!({ "m": m }));
    }
    Ok(t)
}

/// `m` is right-H-invariant exactly when `m = section(project m)`.
fn invariance_equivalence(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    let h = cx.space.subgroup();
    for _ in 0..cx.trials {
        for m in [cx.m(rng), cx.nu(rng).section()] {
            let invariant = m.is_right_invariant(h, cx.tol)?;
            let fixed = m.project(&cx.space)?.section().max_distance(&m) <= cx.tol;
            t.record_bool(invariant == fixed, || json!({ "m": m }));
        }
    }
    Ok(t)
}

/// `M(G:H)` is closed under convolution and under left multiplication by `M(G)`.
fn invariant_left_ideal(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    let h = cx.space.subgroup();
    for _ in 0..cx.trials {
        let m = cx.m(rng);
        let a = cx.nu(rng).section();
        let b = cx.nu(rng).section();
        let ma = m.convolve(&a)?;
        let ab = a.convolve(&b)?;
        t.record(ma.right_invariance_defect(h)?, || json!({ "m": m, "a": a }));
        t.record(ab.right_invariance_defect(h)?, || json!({ "a": a, "b": b }));
    }
    Ok(t)
}

/// `project(m₁*m₂) = m₁ ⋆ project(m₂)`.
fn module_action_compat(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let m1 = cx.m(rng);
        let m2 = cx.m(rng);
        let lhs = m1.convolve(&m2)?.project(&cx.space)?;
        let rhs = module_action(&m1, &m2.project(&cx.space)?)?;
        t.record(lhs.max_distance(&rhs), || json!({ "m1": m1, "m2": m2 }));
    }
    Ok(t)
}

/// Projection preserves `m ≪ n`.
fn absolute_continuity(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    let g = cx.space.group();
    for _ in 0..cx.trials {
        let nw = random::sparse_vec(rng, g.order());
        let mw = nw
            .iter()
            .map(|w| if *w == ZERO { ZERO } else { random::complex(rng) })
            .collect();
        let n = MeasureG::new(g, nw)?;
        let m = MeasureG::new(g, mw)?;
        let upstairs = is_absolutely_continuous(&m, &n, cx.tol)?;
        let downstairs = is_absolutely_continuous(&m.project(&cx.space)?, &n.project(&cx.space)?, cx.tol)?;
        t.record_bool(upstairs && downstairs, || json!({ "m": m, "n": n }));
    }
    Ok(t)
}

fn group_associativity(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (a, b, c) = (cx.m(rng), cx.m(rng), cx.m(rng));
        let lhs = a.convolve(&b)?.convolve(&c)?;
        let rhs = a.convolve(&b.convolve(&c)?)?;
        t.record(lhs.max_distance(&rhs), || json!({ "a": a, "b": b, "c": c }));
    }
    Ok(t)
}

fn dual_path(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (nu, omega) = (cx.nu(rng), cx.nu(rng));
        let d = cx.direct.convolve(&nu, &omega)?;
        let e = cx.embed.convolve(&nu, &omega)?;
        t.record(d.max_distance(&e), || json!({ "nu": nu, "omega": omega }));
    }
    Ok(t)
}

fn associativity(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    let a = &cx.direct;
    for _ in 0..cx.trials {
        let (x, y, z) = (cx.nu(rng), cx.nu(rng), cx.nu(rng));
        let lhs = a.convolve(&a.convolve(&x, &y)?, &z)?;
        let rhs = a.convolve(&x, &a.convolve(&y, &z)?)?;
        t.record(lhs.max_distance(&rhs), || json!({ "nu": x, "omega": y, "eta": z }));
    }
    Ok(t)
}

fn submultiplicative(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (nu, omega) = (cx.nu(rng), cx.nu(rng));
        let p = cx.direct.convolve(&nu, &omega)?;
        t.record_le(p.tv_norm(), nu.tv_norm() * omega.tv_norm(), || json!({ "nu": nu, "omega": omega }));
    }
    Ok(t)
}

fn right_identity(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    let e = MeasureQ::dirac_at(&cx.space, cx.space.group().identity());
    t.record(cx.identity.right_identity_residual, || json!({ "basis": true }));
    for _ in 0..cx.trials {
        let nu = cx.nu(rng);
        for alg in [&cx.direct, &cx.embed] {
            t.record(alg.convolve(&nu, &e)?.max_distance(&nu), || json!({ "nu": nu }));
        }
    }
    Ok(t)
}

/// `δ_{xH}*δ_{yH}` is the `ξ`-average of `δ_{xξyH}`, and one-sided Dirac
/// products act through the translated functions.
fn dirac_formula(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let s = &cx.space;
    let g = s.group();
    let h = s.subgroup();
    let mut t = cx.loose();
    for x in g.elements() {
        for y in g.elements() {
            let mut want = vec![ZERO; s.count()];
            for &xi in h.members() {
                want[s.q(g.mul(g.mul(x, xi), y))] += 1.0 / h.size() as f64;
            }
            let got = cx.direct.dirac_convolve(x, y);
            t.record(max_abs_diff(got.weights(), &want), || json!({ "x": g.element_name(x), "y": g.element_name(y) }));
            if h.is_normal() {
                let collapsed = MeasureQ::dirac_at(s, g.mul(x, y));
                t.record(got.max_distance(&collapsed), || json!({ "x": g.element_name(x), "y": g.element_name(y) }));
            }
        }
    }
    let pair = |m: &MeasureQ, f: &QuotientFunction| -> Complex64 {
        m.weights().iter().zip(f.values()).map(|(a, b)| a * b).sum()
    };
    for _ in 0..cx.trials {
        let x = cx.element(rng);
        let nu = cx.nu(rng);
        let phi = cx.phi(rng);
        let dx = MeasureQ::dirac_at(s, x);
        let right = pair(&cx.direct.convolve(&nu, &dx)?, &phi);
        let right_want = pair(&nu, &right_translate_fn(x, &phi));
        let left = pair(&cx.direct.convolve(&dx, &nu)?, &phi);
        let left_want = pair(&nu, &left_translate_fn(x, &phi));
        let w = || json!({ "x": g.element_name(x), "nu": nu, "phi": phi });
        t.record((right - right_want).norm(), w);
        t.record((left - left_want).norm(), w);
    }
    Ok(t)
}

/// `section(ν*ω) = section(ν) * section(ω)`.
fn embedding_homomorphism(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (nu, omega) = (cx.nu(rng), cx.nu(rng));
        let lhs = cx.direct.convolve(&nu, &omega)?.section();
        let rhs = nu.section().convolve(&omega.section())?;
        t.record(lhs.max_distance(&rhs), || json!({ "nu": nu, "omega": omega }));
    }
    Ok(t)
}

fn identity_iff_normal(cx: &Ctx, _: &mut ChaCha8Rng) -> Result<Tracker> {
    let r = &cx.identity;
    let mut t = cx.exact();
    t.record_bool(r.has_identity == cx.space.is_normal() && r.has_right_identity, || json!({ "report": r }));
    t.observe(r.residual);
    Ok(t)
}

/// `δ_{eH}` is a left identity on all Dirac measures exactly when `H` is normal.
fn unit_left_defect(cx: &Ctx, _: &mut ChaCha8Rng) -> Result<Tracker> {
    let d = cx.identity.left_defect_of_unit;
    let mut t = cx.exact();
    t.record_bool((d <= cx.tol) == cx.space.is_normal(), || json!({ "left_defect_of_unit": d }));
    t.observe(d);
    Ok(t)
}

fn involution(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let r = cx.direct.involution_check(rng, cx.trials, cx.tol)?;
    let mut t = cx.loose();
    if r.is_normal {
        t.record(r.max_error.unwrap_or(f64::INFINITY), || json!({ "report": r }));
    } else {
        let certified = r.obstructed && r.identity.residual > OBSTRUCTION_MARGIN;
        t.record_bool(certified, || json!({ "report": r }));
        t.observe(r.identity.residual);
    }
    Ok(t)
}

fn weil_formula(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let n = cx.space.group().order();
    let mut t = cx.exact();
    for x in 0..n {
        let mut f = vec![ZERO; n];
        f[x] = ONE;
        let (l, r) = cx.sys.weil_sides(&f)?;
        t.record((l - r).norm(), || json!({ "basis": x }));
    }
    for _ in 0..cx.trials {
        let f = random::complex_vec(rng, n);
        let (l, r) = cx.sys.weil_sides(&f)?;
        t.record((l - r).norm() / (1.0 + l.norm()), || json!({ "f": f }));
    }
    Ok(t)
}

/// `∫ T_ρf dμ = Σ_g f(g)`.
fn t_integral_identity(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let n = cx.space.group().order();
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let f = random::complex_vec(rng, n);
        let lhs = cx.sys.integral(&cx.sys.t_rho(&f)?);
        let rhs: Complex64 = f.iter().sum();
        t.record((lhs - rhs).norm(), || json!({ "f": f }));
    }
    Ok(t)
}

fn t_lift_identity(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let phi = cx.phi(rng);
        let back = cx.sys.t_rho(&cx.sys.lift(&phi)?)?;
        t.record(back.max_distance(&phi), || json!({ "phi": phi }));
    }
    Ok(t)
}

fn lift_isometry(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let phi = cx.phi(rng);
        let lifted = l1_norm_on_group(&cx.sys.lift(&phi)?);
        t.record((lifted - cx.sys.l1_norm(&phi)).abs(), || json!({ "phi": phi }));
    }
    Ok(t)
}

fn t_contraction(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let n = cx.space.group().order();
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let f = random::complex_vec(rng, n);
        let tf = cx.sys.t_rho(&f)?;
        t.record_le(cx.sys.l1_norm(&tf), l1_norm_on_group(&f), || json!({ "f": f }));
    }
    Ok(t)
}

/// `∫ f d section(ν) = ∫ T_∞f dν`, and `T_∞` does not increase the sup norm.
fn t_infinity_duality(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let n = cx.space.group().order();
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let f = random::complex_vec(rng, n);
        let nu = cx.nu(rng);
        let tf = t_infinity(&cx.space, &f);
        let lhs: Complex64 = nu.section().weights().iter().zip(&f).map(|(a, b)| a * b).sum();
        let rhs: Complex64 = tf.values().iter().zip(nu.weights()).map(|(a, b)| a * b).sum();
        let sup = f.iter().map(|v| v.norm()).fold(0.0, f64::max);
        t.record((lhs - rhs).norm(), || json!({ "f": f, "nu": nu }));
        t.record_le(tf.sup_norm(), sup, || json!({ "f": f }));
    }
    Ok(t)
}

fn left_translation_homomorphism(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let g = cx.space.group();
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let (x, y) = (cx.element(rng), cx.element(rng));
        let phi = cx.phi(rng);
        let lhs = cx.sys.translate_left(x, &cx.sys.translate_left(y, &phi)?)?;
        let rhs = cx.sys.translate_left(g.mul(x, y), &phi)?;
        t.record(lhs.max_distance(&rhs), || json!({ "x": g.element_name(x), "y": g.element_name(y), "phi": phi }));
    }
    Ok(t)
}

fn left_translation_isometry(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let g = cx.space.group();
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let x = cx.element(rng);
        let phi = cx.phi(rng);
        let lx = cx.sys.translate_left(x, &phi)?;
        t.record((cx.sys.l1_norm(&lx) - cx.sys.l1_norm(&phi)).abs(), || json!({ "x": g.element_name(x), "phi": phi }));
    }
    Ok(t)
}

/// `𝓛_xφ = T_ρ(L_x φ_ρ)` with `L_xf(g) = f(x⁻¹g)`.
fn left_translation_transfer(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let g = cx.space.group();
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let x = cx.element(rng);
        let phi = cx.phi(rng);
        let f = cx.sys.lift(&phi)?;
        let xi = g.inv(x);
        let shifted: Vec<Complex64> = g.elements().map(|z| f[g.mul(xi, z)]).collect();
        let want = cx.sys.t_rho(&shifted)?;
        let got = cx.sys.translate_left(x, &phi)?;
        t.record(got.max_distance(&want), || json!({ "x": g.element_name(x), "phi": phi }));
    }
    Ok(t)
}

/// `⟨𝓡_xφ, ψ⟩_μ = ⟨φ, 𝓡_{x⁻¹}ψ⟩_μ` with the `L¹` form on the left and the
/// `L^∞` form on the right.
fn right_translation_adjoint(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let g = cx.space.group();
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let x = cx.element(rng);
        let (phi, psi) = (cx.phi(rng), cx.phi(rng));
        let lhs = cx.sys.pairing(&cx.sys.translate_right(x, &phi, TranslationMode::L1)?, &psi);
        let rhs = cx.sys.pairing(&phi, &cx.sys.translate_right(g.inv(x), &psi, TranslationMode::Linf)?);
        t.record((lhs - rhs).norm() / (1.0 + lhs.norm()), || json!({ "x": g.element_name(x), "phi": phi, "psi": psi }));
    }
    Ok(t)
}

/// `(δ_{xH}*δ_{yH})(φ) = _{xH}φ(yH) = φ_{yH}(xH)`.
fn translated_functions_pairing(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let s = &cx.space;
    let g = s.group();
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (x, y) = (cx.element(rng), cx.element(rng));
        let phi = cx.phi(rng);
        let d = cx.direct.dirac_convolve(x, y);
        let paired: Complex64 = d.weights().iter().zip(phi.values()).map(|(a, b)| a * b).sum();
        let left = left_translate_fn(x, &phi).values()[s.q(y)];
        let right = right_translate_fn(y, &phi).values()[s.q(x)];
        let w = || json!({ "x": g.element_name(x), "y": g.element_name(y), "phi": phi });
        t.record((paired - left).norm(), w);
        t.record((paired - right).norm(), w);
    }
    Ok(t)
}

/// `section(μ_φ) = λ_{φ_ρ}`, a right-H-invariant measure.
fn lift_section(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let phi = cx.phi(rng);
        let lifted = MeasureG::new(cx.space.group(), cx.sys.lift(&phi)?)?;
        let section = cx.sys.density_measure(&phi)?.section();
        t.record(section.max_distance(&lifted), || json!({ "phi": phi }));
        t.record(lifted.right_invariance_defect(cx.space.subgroup())?, || json!({ "phi": phi }));
    }
    Ok(t)
}

/// `μ_{φ*ψ} = μ_φ * μ_ψ`.
fn l1_embedding_homomorphism(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (phi, psi) = (cx.phi(rng), cx.phi(rng));
        let lhs = cx.sys.density_measure(&cx.sys.convolve(&phi, &psi)?)?;
        let rhs = cx
            .direct
            .convolve(&cx.sys.density_measure(&phi)?, &cx.sys.density_measure(&psi)?)?;
        t.record(lhs.max_distance(&rhs), || json!({ "phi": phi, "psi": psi }));
    }
    Ok(t)
}

fn l1_vector_integral(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (phi, psi) = (cx.phi(rng), cx.phi(rng));
        let a = cx.sys.convolve(&phi, &psi)?;
        let b = cx.sys.convolve_by_translates(&phi, &psi)?;
        t.record(a.max_distance(&b), || json!({ "phi": phi, "psi": psi }));
    }
    Ok(t)
}

/// `λ_{φ_ρ} * λ_{ψ_ρ} = λ_{(φ*ψ)_ρ}`, and `f * φ_ρ` stays right-H-invariant
/// for any `f` on `G`.
fn l1_left_ideal(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let g = cx.space.group();
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (phi, psi) = (cx.phi(rng), cx.phi(rng));
        let fp = cx.sys.lift(&phi)?;
        let fq = cx.sys.lift(&psi)?;
        let lhs = convolve_on_group(g, &fp, &fq);
        let rhs = cx.sys.lift(&cx.sys.convolve(&phi, &psi)?)?;
        t.record(max_abs_diff(&lhs, &rhs), || json!({ "phi": phi, "psi": psi }));
        let f = random::complex_vec(rng, g.order());
        let prod = MeasureG::new(g, convolve_on_group(g, &f, &fp))?;
        t.record(prod.right_invariance_defect(cx.space.subgroup())?, || json!({ "f": f, "phi": phi }));
    }
    Ok(t)
}

fn l1_algebra_laws(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let sys = &cx.sys;
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let (a, b, c) = (cx.phi(rng), cx.phi(rng), cx.phi(rng));
        let ab = sys.convolve(&a, &b)?;
        let lhs = sys.convolve(&ab, &c)?;
        let rhs = sys.convolve(&a, &sys.convolve(&b, &c)?)?;
        let scale = 1.0 + lhs.sup_norm();
        let w = || json!({ "phi": a, "psi": b, "eta": c });
        t.record(lhs.max_distance(&rhs) / scale, w);
        t.record_le(sys.l1_norm(&ab), sys.l1_norm(&a) * sys.l1_norm(&b), w);
    }
    Ok(t)
}

fn right_ideal_formula(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let phi = cx.phi(rng);
        let nu = cx.nu(rng);
        let got = cx.sys.density_measure(&cx.sys.ideal_right(&phi, &nu)?)?;
        let want = cx.direct.convolve(&cx.sys.density_measure(&phi)?, &nu)?;
        t.record(got.max_distance(&want), || json!({ "phi": phi, "nu": nu }));
    }
    Ok(t)
}

fn left_ideal_formula(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.loose();
    for _ in 0..cx.trials {
        let phi = cx.phi(rng);
        let nu = cx.nu(rng);
        let got = cx.sys.density_measure(&cx.sys.ideal_left(&nu, &phi)?)?;
        let want = cx.direct.convolve(&nu, &cx.sys.density_measure(&phi)?)?;
        t.record(got.max_distance(&want), || json!({ "phi": phi, "nu": nu }));
    }
    Ok(t)
}

fn l1_left_identity_iff_normal(cx: &Ctx, _: &mut ChaCha8Rng) -> Result<Tracker> {
    let r = &cx.l1_identity;
    let mut t = cx.exact();
    t.record_bool(r.has_left_identity == cx.space.is_normal(), || json!({ "report": r }));
    t.observe(r.residual);
    Ok(t)
}

fn rep_independence_dual_path(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let (alt, _) = cx.shuffled(rng);
        let (nu, omega) = (cx.nu(rng), cx.nu(rng));
        let d = cx.direct.convolve(&nu, &omega)?;
        let direct = QuotientAlgebra::new(&alt, cx.direct.method());
        let embed = QuotientAlgebra::new(&alt, cx.embed.method());
        let (nu2, omega2) = (nu.rebind(&alt)?, omega.rebind(&alt)?);
        let w = || json!({ "reps": alt.reps(), "nu": nu, "omega": omega });
        t.record(max_abs_diff(direct.convolve(&nu2, &omega2)?.weights(), d.weights()), w);
        let e = cx.embed.convolve(&nu, &omega)?;
        t.record(max_abs_diff(embed.convolve(&nu2, &omega2)?.weights(), e.weights()), w);
    }
    Ok(t)
}

fn rep_independence_l1(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let n = cx.space.group().order();
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let (alt, sys) = cx.shuffled(rng);
        let (phi, psi) = (cx.phi(rng), cx.phi(rng));
        let f = random::complex_vec(rng, n);
        let (phi2, psi2) = (phi.rebind(&alt)?, psi.rebind(&alt)?);
        let w = || json!({ "reps": alt.reps(), "phi": phi, "psi": psi, "f": f });
        t.record(max_abs_diff(sys.t_rho(&f)?.values(), cx.sys.t_rho(&f)?.values()), w);
        t.record(max_abs_diff(&sys.lift(&phi2)?, &cx.sys.lift(&phi)?), w);
        let back = sys.t_rho(&sys.lift(&phi2)?)?;
        t.record(max_abs_diff(back.values(), cx.sys.t_rho(&cx.sys.lift(&phi)?)?.values()), w);
        t.record((sys.l1_norm(&phi2) - cx.sys.l1_norm(&phi)).abs(), w);
        let conv = sys.convolve(&phi2, &psi2)?;
        t.record(max_abs_diff(conv.values(), cx.sys.convolve(&phi, &psi)?.values()), w);
        let alg = QuotientAlgebra::new(&alt, cx.direct.method());
        let m = alg.convolve(&sys.density_measure(&phi2)?, &sys.density_measure(&psi2)?)?;
        let m0 = cx
            .direct
            .convolve(&cx.sys.density_measure(&phi)?, &cx.sys.density_measure(&psi)?)?;
        t.record(max_abs_diff(m.weights(), m0.weights()), w);
    }
    Ok(t)
}

fn rep_independence_ideal(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let (alt, sys) = cx.shuffled(rng);
        let phi = cx.phi(rng);
        let nu = cx.nu(rng);
        let (phi2, nu2) = (phi.rebind(&alt)?, nu.rebind(&alt)?);
        let w = || json!({ "reps": alt.reps(), "phi": phi, "nu": nu });
        let r = cx.sys.ideal_right(&phi, &nu)?;
        t.record(max_abs_diff(sys.ideal_right(&phi2, &nu2)?.values(), r.values()), w);
        let l = cx.sys.ideal_left(&nu, &phi)?;
        t.record(max_abs_diff(sys.ideal_left(&nu2, &phi2)?.values(), l.values()), w);
    }
    Ok(t)
}

fn rep_independence_translated_functions(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Tracker> {
    let g = cx.space.group();
    let mut t = cx.exact();
    for _ in 0..cx.trials {
        let (alt, sys) = cx.shuffled(rng);
        let x = cx.element(rng);
        let phi = cx.phi(rng);
        let phi2 = phi.rebind(&alt)?;
        let w = || json!({ "reps": alt.reps(), "x": g.element_name(x), "phi": phi });
        t.record(max_abs_diff(left_translate_fn(x, &phi2).values(), left_translate_fn(x, &phi).values()), w);
        t.record(max_abs_diff(right_translate_fn(x, &phi2).values(), right_translate_fn(x, &phi).values()), w);
        t.record(max_abs_diff(sys.translate_left(x, &phi2)?.values(), cx.sys.translate_left(x, &phi)?.values()), w);
        for mode in [TranslationMode::L1, TranslationMode::Linf] {
            let a = sys.translate_right(x, &phi2, mode)?;
            let b = cx.sys.translate_right(x, &phi, mode)?;
            t.record(max_abs_diff(a.values(), b.values()), w);
        }
    }
    Ok(t)
}

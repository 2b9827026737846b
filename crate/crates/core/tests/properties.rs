use std::sync::Arc;

use halg::catalog::{self, CatalogCase};
use halg::lebesgue::{convolve_on_group, l1_norm_on_group, left_translate_fn, right_translate_fn};
use halg::{random, Complex64, CosetSpace, FiniteGroup, MeasureG, Method, PointMasses, QuotientAlgebra, RhoSystem, Subgroup};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cases() -> &'static [CatalogCase] {
    static CASES: std::sync::OnceLock<Vec<CatalogCase>> = std::sync::OnceLock::new();
    CASES.get_or_init(catalog::verification_cases)
}

struct Fixture {
    space: Arc<CosetSpace>,
    sys: RhoSystem,
    alg: QuotientAlgebra,
    rng: ChaCha8Rng,
}

fn fixture(case: usize, seed: u64) -> Fixture {
    let space = Arc::new(CosetSpace::new(cases()[case].resolve().unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sys = RhoSystem::new(&space, random::rho_values(&mut rng, space.count())).unwrap();
    let alg = QuotientAlgebra::new(&space, Method::Direct);
    Fixture { space, sys, alg, rng }
}

fn case_index() -> impl Strategy<Value = usize> {
    0..cases().len()
}

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_groups_satisfy_the_group_axioms(
        degree in 1usize..=5,
        gens in prop::collection::vec(permutation(5), 0..3),
    ) {
        let gens: Vec<Vec<usize>> = gens
            .into_iter()
            .map(|p| p.into_iter().filter(|&i| i < degree).collect::<Vec<_>>())
            .filter(|p| p.len() == degree)
            .collect();
        let g = FiniteGroup::from_permutations(degree, &gens).unwrap();
        let e = g.identity();
        for a in g.elements() {
            prop_assert_eq!(g.mul(a, e), a);
            prop_assert_eq!(g.mul(a, g.inv(a)), e);
            for b in g.elements() {
                for c in g.elements() {
                    prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        let rebuilt = FiniteGroup::from_table(g.table(), None).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn generated_subgroups_are_closed_and_normality_matches_conjugation(
        case in case_index(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
    ) {
        let g = catalog::group(&cases()[case].group).unwrap();
        let gens: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let h = Subgroup::generated(&g, &gens).unwrap();
        for &a in h.members() {
            for &b in h.members() {
                prop_assert!(h.contains(g.mul(a, b)));
            }
        }
        let conj = g.elements().all(|x| h.members().iter().all(|&m| h.contains(g.mul(g.mul(x, m), g.inv(x)))));
        prop_assert_eq!(conj, h.is_normal());
        prop_assert_eq!(g.order() % h.size(), 0);
    }

    #[test]
    fn action_laws_and_partition(case in case_index()) {
        let f = fixture(case, 0);
        let s = &f.space;
        let g = s.group();
        for c in s.cosets() {
            prop_assert_eq!(s.act(g.identity(), c), c);
            for x in g.elements() {
                let y = g.inv(x);
                prop_assert_eq!(s.act(x, s.act(y, c)), c);
            }
        }
        for x in g.elements() {
            for &h in s.subgroup().members() {
                prop_assert_eq!(s.q(x), s.q(g.mul(x, h)));
            }
        }
    }

    #[test]
    fn projection_and_section(case in case_index(), seed in any::<u64>()) {
        let mut f = fixture(case, seed);
        let nu = random::measure_q(&mut f.rng, &f.space);
        let m = nu.section();
        prop_assert!(m.project(&f.space).unwrap().max_distance(&nu) <= 1e-12);
        prop_assert!((m.tv_norm() - nu.tv_norm()).abs() <= 1e-12);
        prop_assert!(m.is_right_invariant(f.space.subgroup(), 1e-12).unwrap());
        let any = random::measure_g(&mut f.rng, f.space.group());
        prop_assert!(any.project(&f.space).unwrap().tv_norm() <= any.tv_norm() + 1e-12);
    }

    #[test]
    fn quotient_convolution_laws(case in case_index(), seed in any::<u64>()) {
        let mut f = fixture(case, seed);
        let (a, b, c) = (
            random::measure_q(&mut f.rng, &f.space),
            random::measure_q(&mut f.rng, &f.space),
            random::measure_q(&mut f.rng, &f.space),
        );
        let ab = f.alg.convolve(&a, &b).unwrap();
        let embed = f.alg.with_method(Method::Embed).convolve(&a, &b).unwrap();
        prop_assert!(ab.max_distance(&embed) <= 1e-9);
        let lhs = f.alg.convolve(&ab, &c).unwrap();
        let rhs = f.alg.convolve(&a, &f.alg.convolve(&b, &c).unwrap()).unwrap();
        prop_assert!(lhs.max_distance(&rhs) <= 1e-9);
        prop_assert!(ab.tv_norm() <= a.tv_norm() * b.tv_norm() + 1e-9);
        let e = halg::MeasureQ::dirac_at(&f.space, f.space.group().identity());
        prop_assert!(f.alg.convolve(&a, &e).unwrap().max_distance(&a) <= 1e-12);
        let lifted = a.section().convolve(&b.section()).unwrap();
        prop_assert!(ab.section().max_distance(&lifted) <= 1e-9);
    }

    #[test]
    fn weil_t_and_lift(case in case_index(), seed in any::<u64>()) {
        let mut f = fixture(case, seed);
        let n = f.space.group().order();
        let x = (seed as usize) % n;
        let mut basis = vec![Complex64::new(0.0, 0.0); n];
        basis[x] = Complex64::new(1.0, 0.0);
        let (l, r) = f.sys.weil_sides(&basis).unwrap();
        prop_assert!((l - r).norm() <= 1e-12);

        let phi = random::function_q(&mut f.rng, &f.space);
        let lifted = f.sys.lift(&phi).unwrap();
        prop_assert!(f.sys.t_rho(&lifted).unwrap().max_distance(&phi) <= 1e-12);
        prop_assert!((l1_norm_on_group(&lifted) - f.sys.l1_norm(&phi)).abs() <= 1e-12);
        let g = random::complex_vec(&mut f.rng, n);
        prop_assert!(f.sys.l1_norm(&f.sys.t_rho(&g).unwrap()) <= l1_norm_on_group(&g) + 1e-12);
    }

    #[test]
    fn left_translation_is_an_isometric_action(case in case_index(), seed in any::<u64>()) {
        let mut f = fixture(case, seed);
        let g = f.space.group().clone();
        let x = (seed as usize) % g.order();
        let y = (seed.rotate_left(17) as usize) % g.order();
        let phi = random::function_q(&mut f.rng, &f.space);
        let lhs = f.sys.translate_left(x, &f.sys.translate_left(y, &phi).unwrap()).unwrap();
        let rhs = f.sys.translate_left(g.mul(x, y), &phi).unwrap();
        prop_assert!(lhs.max_distance(&rhs) <= 1e-12);
        let lx = f.sys.translate_left(x, &phi).unwrap();
        prop_assert!((f.sys.l1_norm(&lx) - f.sys.l1_norm(&phi)).abs() <= 1e-12);
    }

    #[test]
    fn l1_embeds_as_a_subalgebra_and_left_ideal(case in case_index(), seed in any::<u64>()) {
        let mut f = fixture(case, seed);
        let phi = random::function_q(&mut f.rng, &f.space);
        let psi = random::function_q(&mut f.rng, &f.space);
        let conv = f.sys.convolve(&phi, &psi).unwrap();
        let measure = f.alg
            .convolve(&f.sys.density_measure(&phi).unwrap(), &f.sys.density_measure(&psi).unwrap())
            .unwrap();
        prop_assert!(f.sys.density_measure(&conv).unwrap().max_distance(&measure) <= 1e-9);

        let g = f.space.group();
        let upstairs = convolve_on_group(g, &f.sys.lift(&phi).unwrap(), &f.sys.lift(&psi).unwrap());
        let lifted = f.sys.lift(&conv).unwrap();
        let gap = upstairs.iter().zip(&lifted).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        prop_assert!(gap <= 1e-9);

        let any = random::complex_vec(&mut f.rng, g.order());
        let prod = MeasureG::new(g, convolve_on_group(g, &any, &f.sys.lift(&phi).unwrap())).unwrap();
        prop_assert!(prod.right_invariance_defect(f.space.subgroup()).unwrap() <= 1e-9);
    }

    #[test]
    fn ideal_formulas_match_measure_convolution(case in case_index(), seed in any::<u64>()) {
        let mut f = fixture(case, seed);
        let phi = random::function_q(&mut f.rng, &f.space);
        let nu = random::measure_q(&mut f.rng, &f.space);
        let mu_phi = f.sys.density_measure(&phi).unwrap();
        let right = f.sys.density_measure(&f.sys.ideal_right(&phi, &nu).unwrap()).unwrap();
        let left = f.sys.density_measure(&f.sys.ideal_left(&nu, &phi).unwrap()).unwrap();
        prop_assert!(right.max_distance(&f.alg.convolve(&mu_phi, &nu).unwrap()) <= 1e-9);
        prop_assert!(left.max_distance(&f.alg.convolve(&nu, &mu_phi).unwrap()) <= 1e-9);
    }

    #[test]
    fn outputs_do_not_depend_on_representatives(case in case_index(), seed in any::<u64>()) {
        let mut f = fixture(case, seed);
        let alt = Arc::new(f.space.with_random_representatives(&mut f.rng));
        let sys2 = f.sys.rebind(&alt).unwrap();
        let alg2 = QuotientAlgebra::new(&alt, Method::Direct);
        let x = (seed as usize) % f.space.group().order();
        let phi = random::function_q(&mut f.rng, &f.space);
        let psi = random::function_q(&mut f.rng, &f.space);
        let nu = random::measure_q(&mut f.rng, &f.space);
        let omega = random::measure_q(&mut f.rng, &f.space);
        let (phi2, psi2) = (phi.rebind(&alt).unwrap(), psi.rebind(&alt).unwrap());
        let (nu2, omega2) = (nu.rebind(&alt).unwrap(), omega.rebind(&alt).unwrap());

        let d = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        prop_assert!(d(alg2.convolve(&nu2, &omega2).unwrap().weights(), f.alg.convolve(&nu, &omega).unwrap().weights()) <= 1e-12);
        prop_assert!(d(left_translate_fn(x, &phi2).values(), left_translate_fn(x, &phi).values()) <= 1e-12);
        prop_assert!(d(right_translate_fn(x, &phi2).values(), right_translate_fn(x, &phi).values()) <= 1e-12);
        prop_assert!(d(sys2.convolve(&phi2, &psi2).unwrap().values(), f.sys.convolve(&phi, &psi).unwrap().values()) <= 1e-12);
        prop_assert!(d(sys2.ideal_right(&phi2, &nu2).unwrap().values(), f.sys.ideal_right(&phi, &nu).unwrap().values()) <= 1e-12);
        prop_assert!(d(sys2.ideal_left(&nu2, &phi2).unwrap().values(), f.sys.ideal_left(&nu, &phi).unwrap().values()) <= 1e-12);
    }

    #[test]
    fn identity_exists_exactly_for_normal_subgroups(case in case_index(), seed in any::<u64>()) {
        let f = fixture(case, seed);
        let r = f.alg.identity_report(1e-9);
        prop_assert!(r.has_right_identity);
        prop_assert_eq!(r.has_identity, f.space.is_normal());
        prop_assert_eq!(f.sys.left_identity_search(1e-9).has_left_identity, f.space.is_normal());
    }
}

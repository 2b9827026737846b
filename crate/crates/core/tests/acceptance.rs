//! Acceptance criteria for the catalog sweep at seed 7, tolerance 1e-9 and
//! 100 trials. Prints one line per criterion and exits nonzero on any failure.

use std::process::{Command, Stdio};
use std::sync::Arc;
use std::time::{Duration, Instant};

use halg::catalog;
use halg::verify::{self, CaseReport, Report};
use halg::{random, Complex64, CosetSpace, MeasureQ, Method, PointMasses, QuotientAlgebra};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;
const TOL: f64 = 1e-9;
const EXACT: f64 = 1e-12;
const TRIALS: usize = 100;
const TIME_LIMIT: Duration = Duration::from_secs(300);

type Criterion = fn(&Report) -> Verdict;

struct Verdict {
    ok: bool,
    detail: String,
}

fn worst(report: &Report, ids: &[&str], filter: impl Fn(&CaseReport) -> bool) -> (f64, String) {
    let mut out = (0.0f64, String::from("-"));
    for case in report.cases.iter().filter(|c| filter(c)) {
        for id in ids {
            let Some(check) = case.check(id) else {
                return (f64::INFINITY, format!("{id} missing for {} {}", case.group, case.subgroup));
            };
            if !(check.max_error <= out.0) {
                out = (check.max_error, format!("{id} on {} {}", case.group, case.subgroup));
            }
        }
    }
    out
}

fn bound(report: &Report, ids: &[&str], limit: f64) -> Verdict {
    let (err, at) = worst(report, ids, |_| true);
    Verdict {
        ok: err <= limit,
        detail: format!("worst {err:.2e} <= {limit:.0e} ({at})"),
    }
}

fn all_in_tolerance(report: &Report, ids: &[&str]) -> bool {
    report
        .cases
        .iter()
        .all(|c| ids.iter().all(|id| c.check(id).is_some_and(|r| r.passed())))
}

/// `Σ_{g,h} m_ν(g) m_ω(h) δ_{q(gh)}` straight from the definitions.
fn oracle_convolution(space: &Arc<CosetSpace>, nu: &MeasureQ, omega: &MeasureQ) -> Vec<Complex64> {
    let g = space.group();
    let h = space.h_size() as f64;
    let mut out = vec![Complex64::new(0.0, 0.0); space.count()];
    for a in g.elements() {
        for b in g.elements() {
            let w = nu.weights()[space.q(a)] * omega.weights()[space.q(b)] / (h * h);
            out[space.q(g.mul(a, b))] += w;
        }
    }
    out
}

fn criterion_1(r: &Report) -> Verdict {
    bound(r, &["project-section-inverse", "section-isometry"], EXACT)
}

fn criterion_2(r: &Report) -> Verdict {
    let v = bound(r, &["convolution-dual-path"], TOL);
    // Independent recomputation of the direct path against the definition.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut oracle_err = 0.0f64;
    for case in catalog::verification_cases() {
        let space = Arc::new(CosetSpace::new(case.resolve().expect("catalog case")));
        let alg = QuotientAlgebra::new(&space, Method::Direct);
        for _ in 0..TRIALS {
            let nu = random::measure_q(&mut rng, &space);
            let omega = random::measure_q(&mut rng, &space);
            let got = alg.convolve(&nu, &omega).expect("same space");
            let want = oracle_convolution(&space, &nu, &omega);
            for (a, b) in got.weights().iter().zip(&want) {
                oracle_err = oracle_err.max((a - b).norm());
            }
        }
    }
    Verdict {
        ok: v.ok && oracle_err <= TOL,
        detail: format!("{}; definition oracle {oracle_err:.2e}", v.detail),
    }
}

fn criterion_3(r: &Report) -> Verdict {
    bound(r, &["convolution-associativity", "convolution-submultiplicative"], TOL)
}

fn criterion_4(r: &Report) -> Verdict {
    let cases = r.cases.len();
    let non_normal = r.cases.iter().filter(|c| !c.is_normal).count();
    let mut mismatches = Vec::new();
    for c in &r.cases {
        let g = catalog::group(&c.group).expect("catalog group");
        let h = halg::Subgroup::from_names(&g, &c.generators).expect("catalog subgroup");
        let conj_normal = g
            .elements()
            .all(|x| h.members().iter().all(|&m| h.contains(g.mul(g.mul(x, m), g.inv(x)))));
        if !(c.is_normal == conj_normal
            && c.has_identity == c.is_normal
            && c.has_left_identity_l1 == c.is_normal
            && c.has_right_identity)
        {
            mismatches.push(format!("{} {}", c.group, c.subgroup));
        }
    }
    let right = bound(r, &["right-identity"], EXACT);
    Verdict {
        ok: cases >= 20 && non_normal >= 5 && mismatches.is_empty() && right.ok,
        detail: format!(
            "{cases} cases, {non_normal} non-normal, {} mismatches; right identity {}",
            mismatches.len(),
            right.detail
        ),
    }
}

fn criterion_5(r: &Report) -> Verdict {
    let (err, at) = worst(r, &["involution"], |c| c.is_normal);
    let mut min_residual = f64::INFINITY;
    let mut certified = true;
    for c in r.cases.iter().filter(|c| !c.is_normal) {
        let check = c.check("involution").expect("involution check");
        let residual = check.observed.unwrap_or(0.0);
        min_residual = min_residual.min(residual);
        certified &= check.passed() && c.involution == "obstructed" && residual > 1e-3;
    }
    Verdict {
        ok: err <= TOL && certified,
        detail: format!("normal worst {err:.2e} ({at}); non-normal min residual {min_residual:.3} > 1e-3"),
    }
}

fn criterion_6(r: &Report) -> Verdict {
    let exact = bound(r, &["weil-formula", "t-lift-identity", "lift-isometry", "t-contraction"], EXACT);
    let hom = bound(r, &["l1-embedding-homomorphism"], TOL);
    Verdict {
        ok: exact.ok && hom.ok,
        detail: format!("exact {}; homomorphism {}", exact.detail, hom.detail),
    }
}

fn criterion_7(r: &Report) -> Verdict {
    let v = bound(r, &["right-ideal-formula", "left-ideal-formula"], TOL);
    let constant_rho = r
        .cases
        .iter()
        .filter(|c| c.rho.len() >= 2 && c.rho.iter().all(|e| e.value == c.rho[0].value))
        .count();
    Verdict {
        ok: v.ok && constant_rho == 0,
        detail: format!("{}; {constant_rho} cases with constant rho", v.detail),
    }
}

fn criterion_8(r: &Report) -> Verdict {
    bound(
        r,
        &["rep-independence-dual-path", "rep-independence-l1", "rep-independence-ideal"],
        EXACT,
    )
}

fn main() {
    let start = Instant::now();
    let report = verify::run_catalog(TOL, SEED, TRIALS).expect("catalog run");
    let elapsed = start.elapsed();

    let criteria: [(&str, Criterion); 8] = [
        ("projection/section exactness", criterion_1),
        ("convolution dual path", criterion_2),
        ("Banach algebra laws", criterion_3),
        ("identity dichotomy", criterion_4),
        ("involution and obstruction", criterion_5),
        ("Weil formula and L1 theory", criterion_6),
        ("ideal formulas", criterion_7),
        ("representative independence", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f(&report);
        if !v.ok {
            failed += 1;
        }
        println!("criterion {} {:<30} {}  {}", i + 1, name, if v.ok { "PASS" } else { "FAIL" }, v.detail);
    }

    let every = report.all_passed()
        && all_in_tolerance(&report, &verify::check_ids().collect::<Vec<_>>());
    let fast = elapsed < TIME_LIMIT;
    println!(
        "catalog sweep: {} checks passed, {} failed, {:.1}s (limit {}s) {}",
        report.summary.pass,
        report.summary.fail,
        elapsed.as_secs_f64(),
        TIME_LIMIT.as_secs(),
        if every && fast { "PASS" } else { "FAIL" }
    );
    if !(every && fast) {
        failed += 1;
    }

    // The command-line sweep exits 0 and writes the same report.
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_halg"))
        .args(["verify", "--all", "--seed", "7", "--tol", "1e-9", "--report"])
        .arg(&path)
        .env_remove("HALG_TOL")
        .stderr(Stdio::null())
        .status()
        .expect("run halg");
    let written = std::fs::read_to_string(&path).unwrap_or_default();
    let same = serde_json::from_str::<serde_json::Value>(&written).ok()
        == serde_json::to_value(&report).ok();
    let cli_ok = status.code() == Some(0) && same;
    println!(
        "halg verify --all --seed 7 --tol 1e-9: exit {:?}, report identical {} {}",
        status.code(),
        same,
        if cli_ok { "PASS" } else { "FAIL" }
    );
    if !cli_ok {
        failed += 1;
    }

    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

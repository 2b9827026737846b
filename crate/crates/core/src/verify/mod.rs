//! Seeded verification of the whole theory on one `(G, H)` pair or on the
//! built-in catalog.
//!
//! Every check draws from its own ChaCha8 stream, keyed by the seed, the
//! case's position and the check's position, so results do not depend on
//! which other checks ran or on scheduling.

mod checks;
mod report;

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{Method, QuotientAlgebra};
use crate::catalog;
use crate::coset::CosetSpace;
use crate::error::{Error, Result};
use crate::io::{self, RhoFile};
use crate::lebesgue::RhoSystem;
use crate::random;
use crate::subgroup::Subgroup;

pub use checks::{EXACT, OBSTRUCTION_MARGIN};
pub use report::{CaseReport, CheckResult, Report, Status, Summary};

pub const DEFAULT_TRIALS: usize = 100;

/// Stream reserved for drawing a case's ρ.
const RHO_STREAM: u64 = u32::MAX as u64;

/// Stable ids of every check, in report order.
pub fn check_ids() -> impl Iterator<Item = &'static str> {
    checks::CHECKS.iter().map(|(id, _)| *id)
}

#[derive(Debug, Clone, PartialEq)]
pub enum RhoChoice {
    /// Log-uniform on `[0.1, 10]` per coset, drawn from the case seed.
    Random,
    Uniform,
    Explicit(Vec<f64>),
}

#[derive(Debug, Clone)]
pub struct CaseSpec {
    /// Catalog name or path to a group file.
    pub group: String,
    pub generators: Vec<String>,
    pub rho: RhoChoice,
    pub trials: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// Position in a sweep; selects the random streams.
    pub stream: u32,
    /// Restrict to these check ids.
    pub checks: Option<Vec<String>>,
    /// Record per-check wall time. Makes the report nondeterministic.
    pub timing: bool,
}

impl CaseSpec {
    pub fn new(group: impl Into<String>, generators: &[&str]) -> Self {
        CaseSpec {
            group: group.into(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            rho: RhoChoice::Random,
            trials: DEFAULT_TRIALS,
            tolerance: crate::measure::DEFAULT_TOLERANCE,
            seed: 0,
            stream: 0,
            checks: None,
            timing: false,
        }
    }

    pub fn trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn rho(mut self, rho: RhoChoice) -> Self {
        self.rho = rho;
        self
    }

    pub fn only(mut self, ids: &[&str]) -> Self {
        self.checks = Some(ids.iter().map(|s| s.to_string()).collect());
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::Format(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.trials == 0 {
            return Err(Error::Format("trial count must be at least 1".into()));
        }
        if let Some(ids) = &self.checks {
            if let Some(bad) = ids.iter().find(|id| !check_ids().any(|c| c == id.as_str())) {
                return Err(Error::UnknownCheck(bad.clone()));
            }
        }
        Ok(())
    }

    fn stream(&self, slot: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(((self.stream as u64) << 32) | slot);
        rng
    }
}

pub fn run_case(spec: &CaseSpec) -> Result<CaseReport> {
    spec.validate()?;
    let group = io::resolve_group(&spec.group)?;
    let subgroup = Subgroup::from_names(&group, &spec.generators)?;
    let space = Arc::new(CosetSpace::new(subgroup));
    let sys = match &spec.rho {
        RhoChoice::Random => RhoSystem::new(&space, random::rho_values(&mut spec.stream(RHO_STREAM), space.count()))?,
        RhoChoice::Uniform => RhoSystem::uniform(&space),
        RhoChoice::Explicit(v) => RhoSystem::new(&space, v.clone())?,
    };
    let direct = QuotientAlgebra::new(&space, Method::Direct);
    let cx = checks::Ctx {
        identity: direct.identity_report(spec.tolerance),
        l1_identity: sys.left_identity_search(spec.tolerance),
        embed: direct.with_method(Method::Embed),
        direct,
        space: Arc::clone(&space),
        sys,
        trials: spec.trials,
        tol: spec.tolerance,
    };

    let mut results = Vec::new();
    for (slot, (id, check)) in checks::CHECKS.iter().enumerate() {
        if let Some(only) = &spec.checks {
            if !only.iter().any(|o| o == id) {
                continue;
            }
        }
        let start = Instant::now();
        let mut rng = spec.stream(slot as u64);
        let mut result = match check(&cx, &mut rng) {
            Ok(tracker) => tracker.finish(id),
            Err(e) => CheckResult {
                id: id.to_string(),
                status: Status::Fail,
                max_error: f64::INFINITY,
                tolerance: spec.tolerance,
                observed: None,
                witnesses: Some(json!({ "error": e.to_string() })),
                elapsed_ms: None,
            },
        };
        if spec.timing {
            result.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        results.push(result);
    }

    let is_normal = space.is_normal();
    let involution = match results.iter().find(|r| r.id == "involution") {
        Some(r) if !r.passed() => "failed",
        _ if is_normal => "verified",
        _ => "obstructed",
    };
    let h = space.subgroup();
    Ok(CaseReport {
        group: group.name().to_string(),
        subgroup: h.label(),
        generators: spec.generators.clone(),
        order: group.order(),
        index: h.index(),
        is_normal,
        has_identity: cx.identity.has_identity,
        has_right_identity: cx.identity.has_right_identity,
        has_left_identity_l1: cx.l1_identity.has_left_identity,
        involution: involution.to_string(),
        rho: RhoFile::of(&cx.sys).rho,
        checks: results,
    })
}

/// Runs every catalog case in parallel; the report lists them in catalog order.
pub fn run_catalog(tolerance: f64, seed: u64, trials: usize) -> Result<Report> {
    let specs: Vec<CaseSpec> = catalog::verification_cases()
        .into_iter()
        .enumerate()
        .map(|(i, case)| CaseSpec {
            group: case.group,
            generators: case.generators,
            rho: RhoChoice::Random,
            trials,
            tolerance,
            seed,
            stream: i as u32,
            checks: None,
            timing: false,
        })
        .collect();
    let cases = specs.par_iter().map(run_case).collect::<Result<Vec<_>>>()?;
    Ok(Report::new(seed, tolerance, trials, cases))
}

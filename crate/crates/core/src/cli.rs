//! The `halg` command line. Structured output is JSON on stdout or in the
//! `--report` file; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Method, QuotientAlgebra};
use crate::catalog;
use crate::coset::CosetSpace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::io::{self, Loaded, MeasureFile};
use crate::lebesgue::RhoSystem;
use crate::subgroup::{all_subgroups, Subgroup};
use crate::verify::{self, CaseSpec, Report, RhoChoice, DEFAULT_TRIALS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "halg", version, about = "Measure algebras on finite homogeneous spaces G/H")]
struct Cli {
    /// Numeric tolerance.
    #[arg(long, global = true, env = "HALG_TOL", default_value_t = crate::measure::DEFAULT_TOLERANCE)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the built-in groups.
    ListGroups,
    /// Enumerate the subgroups of a group.
    Subgroups {
        /// Catalog name or group file.
        #[arg(long)]
        group: String,
    },
    /// Cosets, normality, identity and involution reports for G/H.
    Analyze {
        #[command(flatten)]
        pair: Pair,
        /// Rho file; defaults to rho = 1.
        #[arg(long)]
        rho: Option<PathBuf>,
        /// Random trials for the involution laws.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Convolve two measures or functions on G/H.
    Convolve {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        nu: PathBuf,
        #[arg(long)]
        omega: PathBuf,
        #[arg(long, default_value = "direct")]
        method: Method,
        /// Rho file for function operands; defaults to rho = 1.
        #[arg(long)]
        rho: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct Pair {
    /// Catalog name or group file.
    #[arg(long)]
    group: String,
    /// Comma-separated generator names; empty for the trivial subgroup.
    #[arg(long, allow_hyphen_values = true)]
    subgroup: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, requires = "subgroup", conflicts_with = "all")]
    group: Option<String>,
    #[arg(long, requires = "group", allow_hyphen_values = true)]
    subgroup: Option<String>,
    /// Sweep the built-in catalog.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rho file for a single case; defaults to random rho.
    #[arg(long, conflicts_with = "all")]
    rho: Option<PathBuf>,
    /// Run only these checks (repeatable).
    #[arg(long = "check", conflicts_with = "all")]
    checks: Vec<String>,
    /// Record per-check wall time.
    #[arg(long)]
    timing: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    let tol = cli.tol;
    if !(tol > 0.0) {
        return Err(Error::Format(format!("tolerance must be positive, got {tol}")));
    }
    match cli.command {
        Command::ListGroups => emit(&list_groups()?),
        Command::Subgroups { group } => emit(&subgroups(&io::resolve_group(&group)?)?),
        Command::Analyze { pair, rho, trials, seed } => {
            let space = pair.space()?;
            let sys = load_rho(rho.as_ref(), &space)?;
            emit(&analyze(&space, &sys, tol, trials, seed)?)
        }
        Command::Convolve { pair, nu, omega, method, rho } => {
            let space = pair.space()?;
            let sys = load_rho(rho.as_ref(), &space)?;
            let a = io::read_measure(&nu, &space)?;
            let b = io::read_measure(&omega, &space)?;
            emit(&convolve(&space, &sys, method, a, b)?)
        }
        Command::Verify(args) => verify_command(args, tol),
    }
}

fn emit<T: Serialize>(value: &T) -> Result<i32> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(EXIT_OK)
}

/// Splits a comma-separated generator list; blank means trivial.
pub fn parse_generators(text: &str) -> Vec<String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

impl Pair {
    fn space(&self) -> Result<Arc<CosetSpace>> {
        let g = io::resolve_group(&self.group)?;
        let h = Subgroup::from_names(&g, &parse_generators(&self.subgroup))?;
        Ok(Arc::new(CosetSpace::new(h)))
    }
}

fn load_rho(path: Option<&PathBuf>, space: &Arc<CosetSpace>) -> Result<RhoSystem> {
    match path {
        Some(p) => io::read_rho(p, space),
        None => Ok(RhoSystem::uniform(space)),
    }
}

fn list_groups() -> Result<Value> {
    let mut out = Vec::new();
    for name in catalog::names() {
        let g = catalog::group(&name)?;
        out.push(json!({ "name": name, "order": g.order(), "abelian": g.is_abelian() }));
    }
    Ok(Value::Array(out))
}

fn names(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.element_name(x).to_string()).collect()
}

fn subgroups(g: &Arc<FiniteGroup>) -> Result<Value> {
    let subs: Vec<Value> = all_subgroups(g)?
        .iter()
        .map(|h| {
            json!({
                "label": h.label(),
                "generators": h.generator_names(),
                "size": h.size(),
                "index": h.index(),
                "normal": h.is_normal(),
                "members": names(g, h.members()),
            })
        })
        .collect();
    Ok(json!({ "group": g.name(), "order": g.order(), "subgroups": subs }))
}

fn analyze(space: &Arc<CosetSpace>, sys: &RhoSystem, tol: f64, trials: usize, seed: u64) -> Result<Value> {
    let g = space.group();
    let h = space.subgroup();
    let cosets: Vec<Value> = space
        .cosets()
        .map(|c| {
            json!({
                "coset": space.coset_name(c),
                "members": names(g, space.members(c)),
                "rho": sys.rho_on_cosets()[c],
                "mu": sys.mu()[c],
            })
        })
        .collect();
    let alg = QuotientAlgebra::new(space, Method::Direct);
    let identity = alg.identity_report(tol);
    let involution = alg.involution_check(&mut ChaCha8Rng::seed_from_u64(seed), trials, tol)?;
    let l1 = sys.left_identity_search(tol);
    Ok(json!({
        "group": g.name(),
        "subgroup": h.label(),
        "order": g.order(),
        "index": h.index(),
        "is_normal": h.is_normal(),
        "has_identity": identity.has_identity,
        "has_right_identity": identity.has_right_identity,
        "has_left_identity_l1": l1.has_left_identity,
        "cosets": cosets,
        "identity": identity,
        "involution": involution,
        "l1_identity": l1,
    }))
}

/// Measure × measure convolves in `M(G/H)`; function × function convolves in
/// `L¹(G/H)`; mixed operands use the ideal actions. `G`-measures convolve in
/// `M(G)` or act on `M(G/H)`.
fn convolve(space: &Arc<CosetSpace>, sys: &RhoSystem, method: Method, a: Loaded, b: Loaded) -> Result<MeasureFile> {
    let alg = QuotientAlgebra::new(space, method);
    Ok(match (a, b) {
        (Loaded::Q(nu), Loaded::Q(omega)) => MeasureFile::of_q(&alg.convolve(&nu, &omega)?),
        (Loaded::Fn(phi), Loaded::Fn(psi)) => match method {
            Method::Direct => MeasureFile::of_fn(&sys.convolve(&phi, &psi)?),
            Method::Embed => {
                let m = alg.convolve(&sys.density_measure(&phi)?, &sys.density_measure(&psi)?)?;
                MeasureFile::of_fn(&sys.density_of(&m)?)
            }
        },
        (Loaded::Fn(phi), Loaded::Q(nu)) => match method {
            Method::Direct => MeasureFile::of_fn(&sys.ideal_right(&phi, &nu)?),
            Method::Embed => MeasureFile::of_fn(&sys.density_of(&alg.convolve(&sys.density_measure(&phi)?, &nu)?)?),
        },
        (Loaded::Q(nu), Loaded::Fn(phi)) => match method {
            Method::Direct => MeasureFile::of_fn(&sys.ideal_left(&nu, &phi)?),
            Method::Embed => MeasureFile::of_fn(&sys.density_of(&alg.convolve(&nu, &sys.density_measure(&phi)?)?)?),
        },
        (Loaded::G(m), Loaded::G(n)) => MeasureFile::of_g(&m.convolve(&n)?),
        (Loaded::G(m), Loaded::Q(nu)) => MeasureFile::of_q(&nu.acted_on_by(&m)?),
        _ => return Err(Error::KindMismatch),
    })
}

fn verify_command(args: VerifyArgs, tol: f64) -> Result<i32> {
    let report = if args.all {
        verify::run_catalog(tol, args.seed, args.trials)?
    } else {
        let (Some(group), Some(subgroup)) = (args.group, args.subgroup) else {
            eprintln!("error: verify needs --group and --subgroup, or --all");
            return Ok(EXIT_USAGE);
        };
        let mut spec = CaseSpec::new(group, &[]).trials(args.trials).tolerance(tol).seed(args.seed);
        spec.generators = parse_generators(&subgroup);
        spec.timing = args.timing;
        if !args.checks.is_empty() {
            spec.checks = Some(args.checks);
        }
        if let Some(path) = &args.rho {
            let g = io::resolve_group(&spec.group)?;
            let space = Arc::new(CosetSpace::new(Subgroup::from_names(&g, &spec.generators)?));
            let sys = io::read_rho(path, &space)?;
            spec.rho = RhoChoice::Explicit(sys.rho_on_cosets().to_vec());
        }
        let case = verify::run_case(&spec)?;
        Report::new(args.seed, tol, args.trials, vec![case])
    };
    match &args.report {
        Some(path) => {
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            std::fs::write(path, text)?;
        }
        None => {
            emit(&report)?;
        }
    }
    eprintln!(
        "{} cases, {} checks passed, {} failed",
        report.cases.len(),
        report.summary.pass,
        report.summary.fail
    );
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

//! Command-line surface for the bcpoly library.
//!
//! Grammar: `bcpoly <compute|verify|experiment|table2> <target> [--key value]...`
//!
//! Rationals are written `p` or `p/q`; partitions are comma-separated weakly
//! decreasing integers (an empty string denotes the empty partition). Exit
//! codes: 0 on success, 1 when a verification or experiment check fails,
//! 2 on usage, parse, or domain errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bcpoly::asymptotics::{
    c_asymptotics_check, convergence_experiment, growth_checks, kernel_series_closed_form,
    limit_phi, specialized_kernel_series, table2_params, AffineRule, Parity,
};
use bcpoly::interp::{interp_combinatorial, interp_newton, interp_value};
use bcpoly::jacobi::{
    branching_expand, c_denominator, exact_inner_product, jacobi_monic, jacobi_value_at_identity,
    normalized_jacobi, one_variable_fourier, u_coefficients, ParamTriple,
};
use bcpoly::json;
use bcpoly::partition::{partitions_up_to, Partition};
use bcpoly::rational::{fmt_q, parse_q, pow_q, q, q_to_f64, qi, Q};
use bcpoly::symfun::{jack_polynomial, VKParams};
use bcpoly::theta1::{
    branching_a, branching_b, branching_b_closed, classical_jacobi, determinantal_constant,
    determinantal_jacobi, factorial_schur, half_sum_laurent, interp_theta1,
    recurrence_coefficients, FactorialGrid,
};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "bcpoly",
    about = "Exact computation and verification for a two-parameter family of \
             Weyl-invariant orthogonal polynomials",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a single object and print it (JSON or a plain value).
    Compute(ComputeArgs),
    /// Run an exact verification suite; one line per case.
    Verify(VerifyArgs),
    /// Run a table-producing experiment (CSV by default, JSON mirror).
    Experiment(ExperimentArgs),
    /// Look up a symmetric-space parameter series (rows 4-10).
    Table2(Table2Args),
}

#[derive(Args)]
struct ComputeArgs {
    /// One of: jack, interp, jacobi, jacobi-normalized, jacobi-value-at-1,
    /// classical-jacobi, factorial-schur, limit-phi.
    target: String,
    /// Indexing partition, e.g. "2,1".
    #[arg(long)]
    mu: Option<String>,
    /// Indexing partition for the orthogonal family.
    #[arg(long)]
    lambda: Option<String>,
    /// Number of variables.
    #[arg(long)]
    n: Option<usize>,
    /// Deformation parameter θ > 0, as "p/q".
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// First weight parameter.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Second weight parameter.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Interpolation shift.
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Degree for the one-variable family.
    #[arg(long)]
    l: Option<usize>,
    /// Evaluation points, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Row frequencies, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Column frequencies, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Excess frequency.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Growth rate of the first weight parameter.
    #[arg(long, allow_hyphen_values = true)]
    abar: Option<String>,
    /// Growth rate of the second weight parameter.
    #[arg(long, allow_hyphen_values = true)]
    bbar: Option<String>,
    /// Evaluation point in [-1, 1].
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    /// Also write the result to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: interp-equivalence, theta1-crosscheck, orthogonality,
    /// positivity, branching, lemma41, binomial-theta1, prop32.
    target: String,
    /// Number of randomized trials (randomized suites only; needs --seed).
    #[arg(long, requires = "seed")]
    trials: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long)]
    seed: Option<u64>,
    /// Also write the report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// One of: convergence, c-asymptotics, growth.
    target: String,
    /// Row frequencies, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Column frequencies, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Excess frequency.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Deformation parameter θ > 0.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// First weight parameter (intercept of its schedule).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Second weight parameter (intercept of its schedule).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Growth rate of the first weight parameter (default 0).
    #[arg(long, allow_hyphen_values = true)]
    a_slope: Option<String>,
    /// Growth rate of the second weight parameter (default 0).
    #[arg(long, allow_hyphen_values = true)]
    b_slope: Option<String>,
    /// Indexing partition.
    #[arg(long)]
    mu: Option<String>,
    /// Ranks to run, comma-separated.
    #[arg(long)]
    n: Option<String>,
    /// Number of sample points on [-1, 1] (default 17).
    #[arg(long)]
    grid_points: Option<usize>,
    /// Partition sequence family: row ((n)), column ((1^n)), or single ((1)).
    #[arg(long)]
    seq: Option<String>,
    /// Growth rate of the interpolation shift (default θ).
    #[arg(long, allow_hyphen_values = true)]
    h_slope: Option<String>,
    /// Intercept of the interpolation shift (default 1).
    #[arg(long, allow_hyphen_values = true)]
    h_intercept: Option<String>,
    /// Output format: csv (default) or json.
    #[arg(long)]
    format: Option<String>,
    /// Write the table to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Table2Args {
    /// Series row number, 4-10.
    id: u32,
    /// Parity of the ambient dimension: even or odd (series 7 and 10).
    #[arg(long)]
    parity: Option<String>,
    /// Also write the entry to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().cmd {
        Cmd::Compute(args) => cmd_compute(&args).map(|()| ExitCode::SUCCESS),
        Cmd::Verify(args) => cmd_verify(&args),
        Cmd::Experiment(args) => cmd_experiment(&args),
        Cmd::Table2(args) => cmd_table2(&args).map(|()| ExitCode::SUCCESS),
    }
}

// ---------------------------------------------------------------- parsing

fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for tok in s.split(',') {
        parts.push(
            tok.trim()
                .parse::<usize>()
                .map_err(|_| format!("partition entry {tok:?} is not a nonnegative integer"))?,
        );
    }
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_q_arg(s: &str) -> Result<Q, String> {
    parse_q(s.trim()).map_err(|e| e.to_string())
}

fn parse_q_list(s: &str) -> Result<Vec<Q>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q_arg).collect()
}

fn parse_n_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("the rank list must be nonempty".into());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| format!("rank {tok:?} is not a positive integer"))
        })
        .collect()
}

/// Reject calls whose keys are not exactly the documented ones.
fn ensure_keys(
    target: &str,
    provided: &[&'static str],
    required: &[&'static str],
    optional: &[&'static str],
) -> Result<(), String> {
    for key in required {
        if !provided.contains(key) {
            return Err(format!("target {target:?} requires --{}", key.replace('_', "-")));
        }
    }
    for key in provided {
        if !required.contains(key) && !optional.contains(key) {
            return Err(format!(
                "target {target:?} does not take --{}",
                key.replace('_', "-")
            ));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- output

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    println!("{text}");
    if let Some(path) = out {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

/// Write a table to `--out` (reporting the artifact path) or to stdout.
fn emit_table(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

// ---------------------------------------------------------------- compute

impl ComputeArgs {
    fn provided(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        macro_rules! reg {
            ($f:ident) => {
                if self.$f.is_some() {
                    v.push(stringify!($f));
                }
            };
        }
        reg!(mu);
        reg!(lambda);
        reg!(n);
        reg!(theta);
        reg!(a);
        reg!(b);
        reg!(h);
        reg!(l);
        reg!(y);
        reg!(alpha);
        reg!(beta);
        reg!(gamma);
        reg!(abar);
        reg!(bbar);
        reg!(x);
        v
    }

}

/// A fully parsed compute request. Parsing happens before any cache lookup,
/// so malformed arguments can never alias a cached entry, and the cache key
/// is built from canonical values (`10/6` and `5/3` share an entry).
enum ComputePlan {
    Jack { mu: Partition, n: usize, theta: Q },
    Interp { mu: Partition, n: usize, theta: Q, h: Q },
    Jacobi { normalized: bool, lambda: Partition, n: usize, params: ParamTriple },
    ValueAtIdentity { lambda: Partition, n: usize, params: ParamTriple },
    Classical { l: usize, a: Q, b: Q },
    FactorialSchur { mu: Partition, ys: Vec<Q>, h: Q },
    LimitPhi { vk: VKParams, theta: Q, abar: Q, bbar: Q, x: f64 },
}

impl ComputePlan {
    fn from_args(args: &ComputeArgs) -> Result<Self, String> {
        let provided = args.provided();
        let target = args.target.as_str();
        match target {
            "jack" => {
                ensure_keys(target, &provided, &["mu", "n", "theta"], &[])?;
                Ok(ComputePlan::Jack {
                    mu: parse_partition_arg(args.mu.as_ref().unwrap())?,
                    n: args.n.unwrap(),
                    theta: parse_q_arg(args.theta.as_ref().unwrap())?,
                })
            }
            "interp" => {
                ensure_keys(target, &provided, &["mu", "n", "theta", "h"], &[])?;
                Ok(ComputePlan::Interp {
                    mu: parse_partition_arg(args.mu.as_ref().unwrap())?,
                    n: args.n.unwrap(),
                    theta: parse_q_arg(args.theta.as_ref().unwrap())?,
                    h: parse_q_arg(args.h.as_ref().unwrap())?,
                })
            }
            "jacobi" | "jacobi-normalized" | "jacobi-value-at-1" => {
                ensure_keys(target, &provided, &["lambda", "n", "theta", "a", "b"], &[])?;
                let lambda = parse_partition_arg(args.lambda.as_ref().unwrap())?;
                let n = args.n.unwrap();
                let params = ParamTriple::new(
                    parse_q_arg(args.theta.as_ref().unwrap())?,
                    parse_q_arg(args.a.as_ref().unwrap())?,
                    parse_q_arg(args.b.as_ref().unwrap())?,
                )
                .map_err(|e| e.to_string())?;
                Ok(if target == "jacobi-value-at-1" {
                    ComputePlan::ValueAtIdentity { lambda, n, params }
                } else {
                    ComputePlan::Jacobi { normalized: target == "jacobi-normalized", lambda, n, params }
                })
            }
            "classical-jacobi" => {
                ensure_keys(target, &provided, &["l", "a", "b"], &[])?;
                Ok(ComputePlan::Classical {
                    l: args.l.unwrap(),
                    a: parse_q_arg(args.a.as_ref().unwrap())?,
                    b: parse_q_arg(args.b.as_ref().unwrap())?,
                })
            }
            "factorial-schur" => {
                ensure_keys(target, &provided, &["mu", "y", "h"], &[])?;
                Ok(ComputePlan::FactorialSchur {
                    mu: parse_partition_arg(args.mu.as_ref().unwrap())?,
                    ys: parse_q_list(args.y.as_ref().unwrap())?,
                    h: parse_q_arg(args.h.as_ref().unwrap())?,
                })
            }
            "limit-phi" => {
                ensure_keys(
                    target,
                    &provided,
                    &["theta", "x"],
                    &["alpha", "beta", "gamma", "abar", "bbar"],
                )?;
                Ok(ComputePlan::LimitPhi {
                    vk: parse_vk(&args.alpha, &args.beta, &args.gamma)?,
                    theta: parse_q_arg(args.theta.as_ref().unwrap())?,
                    abar: opt_q(&args.abar, Q::zero())?,
                    bbar: opt_q(&args.bbar, Q::zero())?,
                    x: args.x.unwrap(),
                })
            }
            other => Err(format!(
                "unknown compute target {other:?}; expected one of jack, interp, jacobi, \
                 jacobi-normalized, jacobi-value-at-1, classical-jacobi, factorial-schur, limit-phi"
            )),
        }
    }

    /// Canonical cache file stem: field values are rendered in canonical form
    /// and escaped injectively (every byte outside `[A-Za-z0-9.-]` becomes
    /// `_XX` hex), so distinct requests can never share an entry.
    fn cache_stem(&self) -> String {
        fn esc(s: &str) -> String {
            let mut out = String::new();
            for b in s.bytes() {
                if b.is_ascii_alphanumeric() || b == b'.' || b == b'-' {
                    out.push(b as char);
                } else {
                    out.push_str(&format!("_{b:02X}"));
                }
            }
            out
        }
        let qs = |v: &Q| esc(&fmt_q(v));
        let ps = |p: &Partition| esc(&p.to_string());
        let list = |vs: &[Q]| vs.iter().map(fmt_q).collect::<Vec<_>>().join(",");
        match self {
            ComputePlan::Jack { mu, n, theta } => {
                format!("jack.mu_{}.n_{n}.theta_{}", ps(mu), qs(theta))
            }
            ComputePlan::Interp { mu, n, theta, h } => {
                format!("interp.mu_{}.n_{n}.theta_{}.h_{}", ps(mu), qs(theta), qs(h))
            }
            ComputePlan::Jacobi { normalized, lambda, n, params } => format!(
                "{}.lambda_{}.n_{n}.theta_{}.a_{}.b_{}",
                if *normalized { "jacobi-normalized" } else { "jacobi" },
                ps(lambda),
                qs(&params.theta),
                qs(&params.a),
                qs(&params.b)
            ),
            ComputePlan::ValueAtIdentity { lambda, n, params } => format!(
                "jacobi-value-at-1.lambda_{}.n_{n}.theta_{}.a_{}.b_{}",
                ps(lambda),
                qs(&params.theta),
                qs(&params.a),
                qs(&params.b)
            ),
            ComputePlan::Classical { l, a, b } => {
                format!("classical-jacobi.l_{l}.a_{}.b_{}", qs(a), qs(b))
            }
            ComputePlan::FactorialSchur { mu, ys, h } => {
                format!("factorial-schur.mu_{}.y_{}.h_{}", ps(mu), esc(&list(ys)), qs(h))
            }
            ComputePlan::LimitPhi { vk, theta, abar, bbar, x } => format!(
                "limit-phi.alpha_{}.beta_{}.gamma_{}.theta_{}.abar_{}.bbar_{}.x_{}",
                esc(&list(&vk.alpha)),
                esc(&list(&vk.beta)),
                qs(&vk.gamma),
                qs(theta),
                qs(abar),
                qs(bbar),
                esc(&x.to_string())
            ),
        }
    }

    fn execute(&self) -> Result<String, String> {
        let lib = |e: bcpoly::Error| e.to_string();
        match self {
            ComputePlan::Jack { mu, n, theta } => {
                let poly = jack_polynomial(mu, *n, theta).map_err(lib)?;
                Ok(json::sym_poly_to_json(&poly))
            }
            ComputePlan::Interp { mu, n, theta, h } => {
                let poly = interp_combinatorial(mu, *n, theta, h).map_err(lib)?;
                Ok(json::shifted_poly_to_json(&poly))
            }
            ComputePlan::Jacobi { normalized, lambda, n, params } => {
                let poly = if *normalized {
                    normalized_jacobi(lambda, *n, params).map_err(lib)?
                } else {
                    jacobi_monic(lambda, *n, params).map_err(lib)?
                };
                Ok(json::torus_poly_to_json(&poly))
            }
            ComputePlan::ValueAtIdentity { lambda, n, params } => {
                let v = jacobi_value_at_identity(lambda, *n, params).map_err(lib)?;
                Ok(fmt_q(&v))
            }
            ComputePlan::Classical { l, a, b } => {
                let poly = classical_jacobi(*l, a, b).map_err(lib)?;
                Ok(json::uni_poly_to_json(&poly))
            }
            ComputePlan::FactorialSchur { mu, ys, h } => {
                let grid = FactorialGrid::shifted_squares(h, ys.len(), mu.part(1) + ys.len() + 1);
                let v = factorial_schur(mu, ys, &grid).map_err(lib)?;
                Ok(fmt_q(&v))
            }
            ComputePlan::LimitPhi { vk, theta, abar, bbar, x } => {
                let v = limit_phi(vk, theta, abar, bbar, *x).map_err(lib)?;
                Ok(format!("{v}"))
            }
        }
    }
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), String> {
    let plan = ComputePlan::from_args(args)?;
    let cache_path = std::env::var_os("BCPOLY_CACHE_DIR").map(|dir| {
        let mut p = PathBuf::from(dir);
        p.push(format!("{}.txt", plan.cache_stem()));
        p
    });
    if let Some(path) = &cache_path {
        if let Ok(cached) = std::fs::read_to_string(path) {
            return emit(cached.trim_end_matches('\n'), args.out.as_deref());
        }
    }
    let text = plan.execute()?;
    if let Some(path) = &cache_path {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| format!("cannot create cache dir: {e}"))?;
        }
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| format!("cannot write cache file: {e}"))?;
    }
    emit(&text, args.out.as_deref())
}

fn parse_vk(
    alpha: &Option<String>,
    beta: &Option<String>,
    gamma: &Option<String>,
) -> Result<VKParams, String> {
    let alpha = match alpha {
        Some(s) => parse_q_list(s)?,
        None => Vec::new(),
    };
    let beta = match beta {
        Some(s) => parse_q_list(s)?,
        None => Vec::new(),
    };
    let gamma = opt_q(gamma, Q::zero())?;
    VKParams::new(alpha, beta, gamma).map_err(|e| e.to_string())
}

fn opt_q(s: &Option<String>, default: Q) -> Result<Q, String> {
    match s {
        Some(s) => parse_q_arg(s),
        None => Ok(default),
    }
}

// ---------------------------------------------------------------- verify

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let randomized = matches!(args.target.as_str(), "lemma41" | "prop32");
    if !randomized && (args.trials.is_some() || args.seed.is_some()) {
        return Err(format!(
            "target {:?} is deterministic and takes neither --trials nor --seed",
            args.target
        ));
    }
    let checks = match args.target.as_str() {
        "interp-equivalence" => suite_interp_equivalence()?,
        "theta1-crosscheck" => suite_theta1_crosscheck()?,
        "orthogonality" => suite_orthogonality()?,
        "positivity" => suite_positivity()?,
        "branching" => suite_branching()?,
        "lemma41" => suite_growth_bound(args.trials.unwrap_or(200), args.seed.unwrap_or(7))?,
        "binomial-theta1" => suite_binomial_theta1()?,
        "prop32" => suite_kernel_series(args.seed.unwrap_or(32))?,
        other => {
            return Err(format!(
                "unknown verify target {other:?}; expected one of interp-equivalence, \
                 theta1-crosscheck, orthogonality, positivity, branching, lemma41, \
                 binomial-theta1, prop32"
            ))
        }
    };
    let mut report = String::new();
    let mut failed = 0usize;
    for c in &checks {
        let line = if c.pass {
            format!("ok   {} — {}", c.name, c.detail)
        } else {
            failed += 1;
            format!("FAIL {} — {}", c.name, c.detail)
        };
        report.push_str(&line);
        report.push('\n');
    }
    report.push_str(&if failed == 0 {
        format!("status: ok ({} cases)\n", checks.len())
    } else {
        format!("status: fail ({failed} of {} cases)\n", checks.len())
    });
    print!("{report}");
    if let Some(path) = &args.out {
        std::fs::write(path, &report).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

/// True when two distinct Newton nodes evaluate to the same point, which is
/// exactly the situation the Newton construction reports as degenerate.
fn newton_nodes_collide(mu: &Partition, n: usize, theta: &Q, h: &Q) -> bool {
    let mut points: Vec<Vec<Q>> = Vec::new();
    for lam in partitions_up_to(mu.size(), n) {
        let x: Vec<Q> = (1..=n).map(|i| qi(lam.part(i) as i64)).collect();
        let mut u = bcpoly::interp::shifted_squares(&x, theta, h);
        u.sort();
        points.push(u);
    }
    points.sort();
    points.windows(2).any(|w| w[0] == w[1])
}

/// The combinatorial and Newton constructions of the interpolation
/// polynomials agree wherever the Newton grid is nondegenerate; a reported
/// degeneracy must come with a witness (two colliding evaluation nodes), and
/// at θ = 1 the explicit rank-one route takes over as the second witness.
fn suite_interp_equivalence() -> Result<Vec<Check>, String> {
    let thetas = [q(1, 2), qi(1), qi(2), q(5, 3)];
    let hs = [qi(3), q(7, 2), q(13, 4)];
    let mut out = Vec::new();
    for theta in &thetas {
        for h in &hs {
            for n in 1..=4usize {
                let name = format!("theta={} h={} n={n}", fmt_q(theta), fmt_q(h));
                let mut shapes = 0usize;
                let mut degenerate = 0usize;
                let mut failure: Option<String> = None;
                for mu in partitions_up_to(4, n) {
                    shapes += 1;
                    let combo = interp_combinatorial(&mu, n, theta, h).map_err(|e| e.to_string())?;
                    match interp_newton(&mu, n, theta, h) {
                        Ok(newton) => {
                            if newton != combo {
                                failure = Some(format!("routes differ at mu={mu}"));
                                break;
                            }
                        }
                        Err(bcpoly::Error::DegenerateGrid(_)) => {
                            if !newton_nodes_collide(&mu, n, theta, h) {
                                failure = Some(format!("unexpected degenerate grid at mu={mu}"));
                                break;
                            }
                            if theta.is_one() {
                                let explicit =
                                    interp_theta1(&mu, n, h).map_err(|e| e.to_string())?;
                                if explicit != combo {
                                    failure =
                                        Some(format!("explicit route differs at mu={mu}"));
                                    break;
                                }
                            }
                            degenerate += 1;
                        }
                        Err(e) => {
                            failure = Some(format!("mu={mu}: {e}"));
                            break;
                        }
                    }
                }
                match failure {
                    Some(msg) => out.push(check(name, false, msg)),
                    None => {
                        let detail = if degenerate > 0 {
                            format!("{shapes} shapes ({degenerate} on a degenerate grid)")
                        } else {
                            format!("{shapes} shapes")
                        };
                        out.push(check(name, true, detail));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn theta1_ab_grid() -> Vec<(Q, Q)> {
    vec![
        (qi(0), qi(0)),
        (q(1, 2), q(1, 2)),
        (q(-1, 2), q(-1, 2)),
        (q(1, 2), q(-1, 2)),
        (qi(1), qi(0)),
    ]
}

/// The determinantal construction, made monic, must equal the general
/// orthogonal family on the torus; the explicit interpolation construction
/// must equal the general one at θ = 1.
fn suite_theta1_crosscheck() -> Result<Vec<Check>, String> {
    let mut out = Vec::new();
    for (a, b) in theta1_ab_grid() {
        for n in 1..=3usize {
            let name = format!("determinantal route a={} b={} n={n}", fmt_q(&a), fmt_q(&b));
            let params = ParamTriple::new(qi(1), a.clone(), b.clone()).map_err(|e| e.to_string())?;
            let mut shapes = 0usize;
            let mut failure: Option<String> = None;
            for lam in partitions_up_to(4, n) {
                shapes += 1;
                let det = determinantal_jacobi(&lam, n, &a, &b).map_err(|e| e.to_string())?;
                let scaled = half_sum_laurent(&det).scale(&determinantal_constant(&lam, n, &a, &b));
                let monic = jacobi_monic(&lam, n, &params).map_err(|e| e.to_string())?;
                if scaled != monic.to_laurent() {
                    failure = Some(format!("routes differ at lambda={lam}"));
                    break;
                }
            }
            match failure {
                Some(msg) => out.push(check(name, false, msg)),
                None => out.push(check(name, true, format!("{shapes} shapes"))),
            }
        }
    }
    for h in [qi(3), q(7, 2)] {
        for n in 1..=3usize {
            let name = format!("explicit interpolation h={} n={n}", fmt_q(&h));
            let mut shapes = 0usize;
            let mut failure: Option<String> = None;
            for mu in partitions_up_to(4, n) {
                shapes += 1;
                let explicit = interp_theta1(&mu, n, &h).map_err(|e| e.to_string())?;
                let combo = interp_combinatorial(&mu, n, &qi(1), &h).map_err(|e| e.to_string())?;
                if explicit != combo {
                    failure = Some(format!("routes differ at mu={mu}"));
                    break;
                }
            }
            match failure {
                Some(msg) => out.push(check(name, false, msg)),
                None => out.push(check(name, true, format!("{shapes} shapes"))),
            }
        }
    }
    Ok(out)
}

/// Distinct family members are orthogonal for the exact torus inner product;
/// norms are strictly positive.
fn suite_orthogonality() -> Result<Vec<Check>, String> {
    let params = ParamTriple::new(qi(1), q(1, 2), q(1, 2)).map_err(|e| e.to_string())?;
    let n = 2usize;
    let lams = partitions_up_to(3, n);
    let polys: Vec<_> = lams
        .iter()
        .map(|lam| jacobi_monic(lam, n, &params))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    let mut off_diag = 0usize;
    let mut failure: Option<String> = None;
    for i in 0..polys.len() {
        for j in 0..i {
            off_diag += 1;
            let ip = exact_inner_product(&polys[i], &polys[j], &params).map_err(|e| e.to_string())?;
            if !ip.is_zero() {
                failure = Some(format!(
                    "<J_{}, J_{}> = {} is nonzero",
                    lams[i],
                    lams[j],
                    fmt_q(&ip)
                ));
            }
        }
    }
    out.push(match failure {
        Some(msg) => check("off-diagonal pairs vanish", false, msg),
        None => check("off-diagonal pairs vanish", true, format!("{off_diag} pairs")),
    });
    let mut failure: Option<String> = None;
    for (lam, poly) in lams.iter().zip(&polys) {
        let ip = exact_inner_product(poly, poly, &params).map_err(|e| e.to_string())?;
        if ip <= Q::zero() {
            failure = Some(format!("<J_{lam}, J_{lam}> = {} is not positive", fmt_q(&ip)));
        }
    }
    out.push(match failure {
        Some(msg) => check("diagonal norms positive", false, msg),
        None => check("diagonal norms positive", true, format!("{} members", lams.len())),
    });
    Ok(out)
}

fn positivity_param_grid() -> Vec<ParamTriple> {
    let mut out = Vec::new();
    for theta in [q(1, 2), qi(1), qi(2)] {
        for (a, b) in [(q(1, 2), q(1, 2)), (q(1, 2), q(-1, 2)), (qi(0), q(-1, 3)), (qi(3), qi(2))] {
            out.push(ParamTriple::new(theta.clone(), a, b).unwrap());
        }
    }
    out
}

/// Every positivity statement the library exposes, on its documented grid.
fn suite_positivity() -> Result<Vec<Check>, String> {
    let mut out = Vec::new();
    // Monomial expansion coefficients in the orthogonality regime.
    for params in positivity_param_grid() {
        let name = format!(
            "monomial coefficients theta={} a={} b={}",
            fmt_q(&params.theta),
            fmt_q(&params.a),
            fmt_q(&params.b)
        );
        let mut count = 0usize;
        let mut failure: Option<String> = None;
        'outer: for n in 1..=3usize {
            for lam in partitions_up_to(4, n) {
                count += 1;
                let u = u_coefficients(&lam, n, &params).map_err(|e| e.to_string())?;
                if let Some((mu, c)) = u.iter().find(|(_, c)| c.is_negative()) {
                    failure = Some(format!("u[{lam}][{mu}] = {} < 0 at n={n}", fmt_q(c)));
                    break 'outer;
                }
            }
        }
        out.push(match failure {
            Some(msg) => check(name, false, msg),
            None => check(name, true, format!("{count} expansions")),
        });
    }
    // Restriction (branching) coefficients.
    for params in positivity_param_grid() {
        let name = format!(
            "restriction coefficients theta={} a={} b={}",
            fmt_q(&params.theta),
            fmt_q(&params.a),
            fmt_q(&params.b)
        );
        let mut count = 0usize;
        let mut failure: Option<String> = None;
        'outer: for n in 2..=3usize {
            for lam in partitions_up_to(3, n) {
                count += 1;
                let d = branching_expand(&lam, n, &params).map_err(|e| e.to_string())?;
                if let Some((nu, c)) = d.iter().find(|(_, c)| c.is_negative()) {
                    failure = Some(format!("d[{lam}][{nu}] = {} < 0 at n={n}", fmt_q(c)));
                    break 'outer;
                }
            }
        }
        out.push(match failure {
            Some(msg) => check(name, false, msg),
            None => check(name, true, format!("{count} restrictions")),
        });
    }
    // One-variable restriction coefficients.
    for params in positivity_param_grid() {
        let name = format!(
            "one-variable coefficients theta={} a={} b={}",
            fmt_q(&params.theta),
            fmt_q(&params.a),
            fmt_q(&params.b)
        );
        let mut count = 0usize;
        let mut failure: Option<String> = None;
        for lam in partitions_up_to(4, 3) {
            count += 1;
            let d = one_variable_fourier(&lam, 3, &params).map_err(|e| e.to_string())?;
            if let Some((m, c)) = d.iter().enumerate().find(|(_, c)| c.is_negative()) {
                failure = Some(format!("d_{m}[{lam}] = {} < 0", fmt_q(c)));
                break;
            }
        }
        out.push(match failure {
            Some(msg) => check(name, false, msg),
            None => check(name, true, format!("{count} restrictions")),
        });
    }
    // One-variable recurrence and branching weights.
    for (a, b) in [
        (qi(0), qi(0)),
        (q(1, 2), q(1, 2)),
        (q(-1, 2), q(-1, 2)),
        (qi(1), qi(0)),
        (q(1, 3), q(-1, 4)),
    ] {
        let name = format!("one-variable weights a={} b={}", fmt_q(&a), fmt_q(&b));
        let mut failure: Option<String> = None;
        'outer: for m in 0..=8usize {
            let (am, _, cm) = recurrence_coefficients(m, &a, &b).map_err(|e| e.to_string())?;
            if am <= Q::zero() || (m >= 1 && cm <= Q::zero()) || (m == 0 && !cm.is_zero()) {
                failure = Some(format!("recurrence weights at m={m}"));
                break;
            }
            for l in 0..=m {
                let prod = branching_b(m, l, &a, &b).map_err(|e| e.to_string())?;
                let closed = branching_b_closed(m, l, &a, &b).map_err(|e| e.to_string())?;
                if prod <= Q::zero() {
                    failure = Some(format!("B({m},{l}) = {} not positive", fmt_q(&prod)));
                    break 'outer;
                }
                if prod != closed {
                    failure = Some(format!("B({m},{l}) closed form disagrees"));
                    break 'outer;
                }
            }
        }
        out.push(match failure {
            Some(msg) => check(name, false, msg),
            None => check(name, true, "m <= 8, all l; closed form matches product"),
        });
    }
    // Two-row interlacing weights.
    for (a, b) in [(qi(0), qi(0)), (q(1, 2), q(1, 2)), (qi(1), qi(0))] {
        let name = format!("interlacing weights a={} b={}", fmt_q(&a), fmt_q(&b));
        let mut count = 0usize;
        let mut failure: Option<String> = None;
        'outer: for n in 2..=3usize {
            for mu in partitions_up_to(3, n - 1) {
                for nu in partitions_up_to(3, n - 1) {
                    let w = branching_a(&mu, &nu, n, &a, &b).map_err(|e| e.to_string())?;
                    count += 1;
                    if w.is_negative() {
                        failure =
                            Some(format!("A({mu},{nu}) = {} < 0 at n={n}", fmt_q(&w)));
                        break 'outer;
                    }
                }
            }
        }
        out.push(match failure {
            Some(msg) => check(name, false, msg),
            None => check(name, true, format!("{count} pairs")),
        });
    }
    Ok(out)
}

/// Restriction coefficients: cross-checked against the two-step rank flow at
/// θ = 1 and against frozen compact-group multiplicities.
fn suite_branching() -> Result<Vec<Check>, String> {
    let mut out = Vec::new();
    for (a, b) in [(qi(0), qi(0)), (q(1, 2), q(1, 2)), (qi(1), qi(0))] {
        for n in 2..=3usize {
            let name = format!("two-step rank flow a={} b={} n={n}", fmt_q(&a), fmt_q(&b));
            let params = ParamTriple::new(qi(1), a.clone(), b.clone()).map_err(|e| e.to_string())?;
            let mut shapes = 0usize;
            let mut failure: Option<String> = None;
            for lam in partitions_up_to(3, n) {
                shapes += 1;
                let direct = branching_expand(&lam, n, &params).map_err(|e| e.to_string())?;
                let steps =
                    bcpoly::theta1::two_step_branching(&lam, n, &a, &b).map_err(|e| e.to_string())?;
                let c_top = bcpoly::theta1::monic_renormalization(&lam, n, &a, &b)
                    .map_err(|e| e.to_string())?;
                let mut renormalized: BTreeMap<Partition, Q> = BTreeMap::new();
                for (nu, coeff) in steps {
                    let c_nu = bcpoly::theta1::monic_renormalization(&nu, n - 1, &a, &b)
                        .map_err(|e| e.to_string())?;
                    renormalized.insert(nu, coeff * &c_top / c_nu);
                }
                if renormalized != direct {
                    failure = Some(format!("flows disagree at lambda={lam}"));
                    break;
                }
            }
            match failure {
                Some(msg) => out.push(check(name, false, msg)),
                None => out.push(check(name, true, format!("{shapes} shapes"))),
            }
        }
    }
    // Frozen compact-group oracle: at θ=1, a=b=1/2 the family restricts with
    // the multiplicities of the rank-2 symplectic chain.
    let params = ParamTriple::new(qi(1), q(1, 2), q(1, 2)).map_err(|e| e.to_string())?;
    let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
    let frozen: [(&[usize], i64, &[(&[usize], i64)]); 2] = [
        (&[3, 1], 35, &[(&[], 3), (&[1], 6), (&[2], 4), (&[3], 2)]),
        (&[2, 2], 14, &[(&[], 1), (&[1], 2), (&[2], 3)]),
    ];
    let mut failure: Option<String> = None;
    for (lam_parts, dim, mults) in frozen {
        let lam = p(lam_parts);
        let v = jacobi_value_at_identity(&lam, 2, &params).map_err(|e| e.to_string())?;
        if v != qi(dim) {
            failure = Some(format!("dimension of {lam} is {}, expected {dim}", fmt_q(&v)));
            break;
        }
        let d = branching_expand(&lam, 2, &params).map_err(|e| e.to_string())?;
        let expected: BTreeMap<Partition, Q> =
            mults.iter().map(|(nu, m)| (p(nu), qi(*m))).collect();
        if d != expected {
            failure = Some(format!("multiplicities of {lam} differ"));
            break;
        }
    }
    out.push(match failure {
        Some(msg) => check("compact-group multiplicities", false, msg),
        None => check("compact-group multiplicities", true, "2 frozen restrictions"),
    });
    // Support containment: restriction never leaves the sub-diagram cone.
    let mut count = 0usize;
    let mut failure: Option<String> = None;
    'outer: for theta in [q(1, 2), qi(2)] {
        let params = ParamTriple::new(theta, q(1, 2), q(-1, 2)).map_err(|e| e.to_string())?;
        for n in 2..=3usize {
            for lam in partitions_up_to(3, n) {
                count += 1;
                let d = branching_expand(&lam, n, &params).map_err(|e| e.to_string())?;
                for nu in d.keys() {
                    let contained = (1..=nu.len()).all(|i| nu.part(i) <= lam.part(i));
                    if !contained {
                        failure = Some(format!("{nu} escapes {lam} at n={n}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    out.push(match failure {
        Some(msg) => check("support containment", false, msg),
        None => check("support containment", true, format!("{count} restrictions")),
    });
    Ok(out)
}

/// Randomized second-moment bound: I_(2)(λ) ≤ I_(1)(λ)² whenever
/// h ≥ θn − 1/2.
fn suite_growth_bound(trials: usize, seed: u64) -> Result<Vec<Check>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let thetas = [q(1, 2), qi(1), qi(2)];
    let two = Partition::new(vec![2]).unwrap();
    let mut out = Vec::with_capacity(trials);
    for trial in 0..trials {
        let n = rng.gen_range(1..=6usize);
        let mut remaining = 20usize;
        let mut parts = Vec::new();
        for _ in 0..n {
            if remaining == 0 {
                break;
            }
            let cap = remaining.min(parts.last().copied().unwrap_or(10));
            if cap == 0 {
                break;
            }
            let part = rng.gen_range(0..=cap);
            if part == 0 {
                break;
            }
            parts.push(part);
            remaining -= part;
        }
        let lam = Partition::new(parts).unwrap();
        let theta = thetas[rng.gen_range(0..3)].clone();
        let h = &theta * qi(n as i64) - q(1, 2) + q(rng.gen_range(0..12), 4);
        let name = format!("trial {trial:03}: lambda={lam} n={n} theta={} h={}", fmt_q(&theta), fmt_q(&h));
        let i1 = bcpoly::interp::interp_one_box_value(&lam, &theta, &h);
        let i2 = interp_value(&two, &lam, n, &theta, &h).map_err(|e| e.to_string())?;
        let pass = i2 <= &i1 * &i1;
        let detail = if pass { "bound holds".to_string() } else {
            format!("I2 = {} exceeds I1^2 = {}", fmt_q(&i2), fmt_q(&(&i1 * &i1)))
        };
        out.push(check(name, pass, detail));
    }
    Ok(out)
}

/// The determinantal ratio expands over the interpolation values:
/// `P(x)/P(1^n) = Σ_μ I_μ(λ) s_μ(x−1) / c(n,μ)` with
/// `c(n, μ) = C(n, μ)/2^{|μ|}` at θ = 1.
fn suite_binomial_theta1() -> Result<Vec<Check>, String> {
    let sample_xs: [&[Q]; 2] = [
        &[qi(2), qi(3), qi(5)],
        &[q(1, 2), qi(2), qi(7)],
    ];
    let mut out = Vec::new();
    for (a, b) in [(qi(0), qi(0)), (q(1, 2), q(1, 2)), (qi(1), qi(0))] {
        for n in 1..=3usize {
            let name = format!("binomial expansion a={} b={} n={n}", fmt_q(&a), fmt_q(&b));
            let params = ParamTriple::new(qi(1), a.clone(), b.clone()).map_err(|e| e.to_string())?;
            let h = params.h_for(n);
            let mut cases = 0usize;
            let mut failure: Option<String> = None;
            'outer: for lam in partitions_up_to(3, n) {
                let det = determinantal_jacobi(&lam, n, &a, &b).map_err(|e| e.to_string())?;
                let at_one = det.eval(&vec![Q::one(); n]);
                for xs in sample_xs {
                    cases += 1;
                    let xs = &xs[..n];
                    let lhs = det.eval(xs) / &at_one;
                    let mut rhs = Q::zero();
                    let shifted: Vec<Q> = xs.iter().map(|x| x - Q::one()).collect();
                    for mu in partitions_up_to(lam.size(), n) {
                        let iv = interp_value(&mu, &lam, n, &qi(1), &h).map_err(|e| e.to_string())?;
                        if iv.is_zero() {
                            continue;
                        }
                        let s_mu =
                            jack_polynomial(&mu, n, &qi(1)).map_err(|e| e.to_string())?.eval(&shifted);
                        let c = c_denominator(n, &mu, &params).map_err(|e| e.to_string())?
                            / pow_q(&qi(2), mu.size());
                        rhs += iv * s_mu / c;
                    }
                    if lhs != rhs {
                        failure = Some(format!("expansion fails at lambda={lam}"));
                        break 'outer;
                    }
                }
            }
            match failure {
                Some(msg) => out.push(check(name, false, msg)),
                None => out.push(check(name, true, format!("{cases} evaluations"))),
            }
        }
    }
    Ok(out)
}

/// The substituted kernel series, specialized at a random profile, equals
/// its closed rational form through degree 6.
fn suite_kernel_series(seed: u64) -> Result<Vec<Check>, String> {
    let degree = 6usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for instance in 0..5 {
        let mut alpha = vec![q(rng.gen_range(1..=6), 4), q(rng.gen_range(0..=3), 4)];
        alpha.sort_by(|x, y| y.cmp(x));
        let beta = vec![q(rng.gen_range(0..=4), 4)];
        let gamma = q(rng.gen_range(0..=5), 4);
        let profile = VKParams::new(alpha, beta, gamma).map_err(|e| e.to_string())?;
        let theta = [q(1, 2), qi(1), qi(2), q(5, 3)][rng.gen_range(0..4)].clone();
        let tau = q(rng.gen_range(-3..=6), 2);
        let name = format!("instance {instance}: theta={} tau={}", fmt_q(&theta), fmt_q(&tau));
        let lhs = specialized_kernel_series(&profile, &theta, &tau, degree)
            .map_err(|e| e.to_string())?;
        let rhs =
            kernel_series_closed_form(&profile, &theta, &tau, degree).map_err(|e| e.to_string())?;
        let pass = lhs == rhs;
        let detail = if pass {
            format!("series agree through degree {degree}")
        } else {
            let k = (0..=degree).find(|&k| lhs[k] != rhs[k]).unwrap();
            format!("coefficients differ at degree {k}")
        };
        out.push(check(name, pass, detail));
    }
    Ok(out)
}

// ---------------------------------------------------------------- experiment

impl ExperimentArgs {
    fn provided(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        macro_rules! reg {
            ($f:ident) => {
                if self.$f.is_some() {
                    v.push(stringify!($f));
                }
            };
        }
        reg!(alpha);
        reg!(beta);
        reg!(gamma);
        reg!(theta);
        reg!(a);
        reg!(b);
        reg!(a_slope);
        reg!(b_slope);
        reg!(mu);
        reg!(n);
        reg!(grid_points);
        reg!(seq);
        reg!(h_slope);
        reg!(h_intercept);
        reg!(format);
        v
    }
}

fn cmd_experiment(args: &ExperimentArgs) -> Result<ExitCode, String> {
    let provided = args.provided();
    let format = args.format.as_deref().unwrap_or("csv");
    if format != "csv" && format != "json" {
        return Err(format!("unknown format {format:?}; expected csv or json"));
    }
    let target = args.target.as_str();
    match target {
        "convergence" => {
            ensure_keys(
                target,
                &provided,
                &["theta", "a", "b", "n"],
                &["alpha", "beta", "gamma", "grid_points", "format"],
            )?;
            let vk = parse_vk(&args.alpha, &args.beta, &args.gamma)?;
            let theta = parse_q_arg(args.theta.as_ref().unwrap())?;
            let a = parse_q_arg(args.a.as_ref().unwrap())?;
            let b = parse_q_arg(args.b.as_ref().unwrap())?;
            let params = ParamTriple::new(theta, a, b).map_err(|e| e.to_string())?;
            let sizes = parse_n_list(args.n.as_ref().unwrap())?;
            let points = args.grid_points.unwrap_or(17);
            if points < 2 {
                return Err("need at least 2 grid points".into());
            }
            let grid: Vec<f64> = (0..points)
                .map(|k| -1.0 + 2.0 * (k as f64) / ((points - 1) as f64))
                .collect();
            let rows =
                convergence_experiment(&vk, &params, &sizes, &grid).map_err(|e| e.to_string())?;
            let text = if format == "json" {
                let mut s = json::convergence_rows_to_json(&rows);
                s.push('\n');
                s
            } else {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["n", "lambda", "sup_error", "grid_size"]).unwrap();
                for r in &rows {
                    w.write_record([
                        r.n.to_string(),
                        r.lambda.to_string(),
                        r.sup_error.to_string(),
                        r.grid_size.to_string(),
                    ])
                    .unwrap();
                }
                String::from_utf8(w.into_inner().unwrap()).unwrap()
            };
            emit_table(&text, args.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        "c-asymptotics" => {
            ensure_keys(
                target,
                &provided,
                &["mu", "theta", "a", "b", "n"],
                &["a_slope", "b_slope", "format"],
            )?;
            let mu = parse_partition_arg(args.mu.as_ref().unwrap())?;
            let theta = parse_q_arg(args.theta.as_ref().unwrap())?;
            let a_rule = AffineRule::new(
                opt_q(&args.a_slope, Q::zero())?,
                parse_q_arg(args.a.as_ref().unwrap())?,
            );
            let b_rule = AffineRule::new(
                opt_q(&args.b_slope, Q::zero())?,
                parse_q_arg(args.b.as_ref().unwrap())?,
            );
            let sizes = parse_n_list(args.n.as_ref().unwrap())?;
            let rows = c_asymptotics_check(&mu, &theta, &a_rule, &b_rule, &sizes)
                .map_err(|e| e.to_string())?;
            let text = if format == "json" {
                let mut s = json::ratio_rows_to_json(&rows);
                s.push('\n');
                s
            } else {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["n", "ratio", "ratio_float"]).unwrap();
                for (n, ratio) in &rows {
                    w.write_record([
                        n.to_string(),
                        fmt_q(ratio),
                        q_to_f64(ratio).to_string(),
                    ])
                    .unwrap();
                }
                String::from_utf8(w.into_inner().unwrap()).unwrap()
            };
            emit_table(&text, args.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        "growth" => {
            ensure_keys(
                target,
                &provided,
                &["seq", "theta", "n"],
                &["h_slope", "h_intercept", "format"],
            )?;
            let theta = parse_q_arg(args.theta.as_ref().unwrap())?;
            let sizes = parse_n_list(args.n.as_ref().unwrap())?;
            let family = args.seq.as_ref().unwrap();
            let seq: Vec<(usize, Partition)> = sizes
                .iter()
                .map(|&n| {
                    let lam = match family.as_str() {
                        "row" => Partition::new(vec![n]),
                        "column" => Partition::new(vec![1; n]),
                        "single" => Partition::new(vec![1]),
                        other => {
                            return Err(format!(
                                "unknown sequence family {other:?}; expected row, column, or single"
                            ))
                        }
                    };
                    Ok((n, lam.map_err(|e| e.to_string())?))
                })
                .collect::<Result<_, _>>()?;
            let h_rule = AffineRule::new(
                opt_q(&args.h_slope, theta.clone())?,
                opt_q(&args.h_intercept, Q::one())?,
            );
            let rows = growth_checks(&seq, &theta, &h_rule).map_err(|e| e.to_string())?;
            let text = if format == "json" {
                let mut s = json::growth_rows_to_json(&rows);
                s.push('\n');
                s
            } else {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record([
                    "n",
                    "lambda",
                    "one_box",
                    "two_box",
                    "bound_holds",
                    "size_ratio",
                    "moment_ratio",
                ])
                .unwrap();
                for r in &rows {
                    w.write_record([
                        r.n.to_string(),
                        r.lambda.to_string(),
                        fmt_q(&r.one_box),
                        fmt_q(&r.two_box),
                        r.bound_holds.to_string(),
                        r.size_ratio.to_string(),
                        r.moment_ratio.to_string(),
                    ])
                    .unwrap();
                }
                String::from_utf8(w.into_inner().unwrap()).unwrap()
            };
            emit_table(&text, args.out.as_deref())?;
            Ok(if rows.iter().all(|r| r.bound_holds) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        other => Err(format!(
            "unknown experiment target {other:?}; expected convergence, c-asymptotics, or growth"
        )),
    }
}

// ---------------------------------------------------------------- table2

fn cmd_table2(args: &Table2Args) -> Result<(), String> {
    let parity = match args.parity.as_deref() {
        None => None,
        Some("even") => Some(Parity::Even),
        Some("odd") => Some(Parity::Odd),
        Some(other) => return Err(format!("unknown parity {other:?}; expected even or odd")),
    };
    let entry = table2_params(args.id, parity).map_err(|e| e.to_string())?;
    emit(&json::series_entry_to_json(&entry), args.out.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_and_rational_parsing() {
        assert_eq!(parse_partition_arg("3,1").unwrap(), Partition::new(vec![3, 1]).unwrap());
        assert_eq!(parse_partition_arg("").unwrap(), Partition::empty());
        assert!(parse_partition_arg("1,3").is_err());
        assert!(parse_partition_arg("x").is_err());
        assert_eq!(parse_q_arg("-3/4").unwrap(), q(-3, 4));
        assert_eq!(parse_n_list("8,16").unwrap(), vec![8, 16]);
        assert!(parse_n_list("").is_err());
    }

    #[test]
    fn key_checking_names_the_offender() {
        let err = ensure_keys("jack", &["mu", "x"], &["mu", "n"], &[]).unwrap_err();
        assert!(err.contains("requires --n"), "{err}");
        let err = ensure_keys("jack", &["mu", "n", "x"], &["mu", "n"], &[]).unwrap_err();
        assert!(err.contains("does not take --x"), "{err}");
        assert!(ensure_keys("jack", &["mu", "n"], &["mu", "n"], &["h"]).is_ok());
    }

    #[test]
    fn suites_pass_on_reduced_grids() {
        // Smoke-run the two randomized suites at a desk scale.
        let checks = suite_growth_bound(10, 7).unwrap();
        assert_eq!(checks.len(), 10);
        assert!(checks.iter().all(|c| c.pass));
        let checks = suite_kernel_series(32).unwrap();
        assert_eq!(checks.len(), 5);
        assert!(checks.iter().all(|c| c.pass));
    }
}

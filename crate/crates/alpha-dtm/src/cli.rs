//! Command-line front end.
//!
//! Four subcommands drive the library end to end:
//!
//! * `solve-bvp` — solve a boundary-value problem config, sample the series
//!   on a uniform grid (`x,approx`), optionally against the closed-form
//!   oracle (`x,approx,exact,abs_err`).
//! * `solve-eig` — solve an eigenvalue config (`index,lambda_hat,residual`,
//!   plus `lambda_exact,rel_err` with `--compare-oracle`), or print the
//!   exact characteristic polynomial with `--emit-poly`.
//! * `sweep-alpha` / `sweep-order` — repeat a BVP solve across a blend or
//!   truncation range and report the sup-norm error per point.
//!
//! Output is CSV with a header row, LF line endings, and floats at 17
//! significant digits (round-trip safe); `--exact-rationals` switches the
//! exactly-known cells to `num/den` form. Identical inputs produce
//! byte-identical output.
//!
//! Exit codes: `0` success, `1` usage error, `2` solver/runtime error,
//! `3` config error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::{Signed, Zero};

use crate::bvp::{error_report, solve_bvp, BoundaryCondition, BvpSolution, LinearOde2};
use crate::eig::{solve_eig, EigProblem};
use crate::error::{Error, Result};
use crate::exact::dirichlet_solution;
use crate::roots::DEFAULT_SCAN_STEPS;
use crate::transform::{parse_rational, rational_to_f64, AlphaParam, Endpoint, Interval, Rational};

/// Exact-rational solver for two-point boundary-value and Sturm–Liouville
/// eigenvalue problems via blended endpoint Taylor expansions.
#[derive(Debug, Parser)]
#[command(name = "alpha-dtm", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a boundary-value problem and tabulate the solution.
    SolveBvp(SolveBvpArgs),
    /// Solve an eigenvalue problem; tabulate roots or print the polynomial.
    SolveEig(SolveEigArgs),
    /// Sweep the blend parameter alpha and report sup-norm errors.
    SweepAlpha(SweepArgs),
    /// Sweep the truncation order and report sup-norm errors.
    SweepOrder(SweepArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Path to the problem config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Render exactly-known cells as `num/den` instead of decimals.
    #[arg(long)]
    exact_rationals: bool,
}

#[derive(Debug, Args)]
struct SolveBvpArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Number of uniform sample points over the interval.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
    samples: u32,
    /// Add oracle columns (requires the reference Dirichlet problem).
    #[arg(long)]
    compare_oracle: bool,
}

#[derive(Debug, Args)]
struct SolveEigArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Add oracle columns from the exact characteristic function.
    #[arg(long)]
    compare_oracle: bool,
    /// Print the exact characteristic polynomial instead of the root table.
    #[arg(long)]
    emit_poly: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Number of uniform sample points for each error measurement.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
    samples: u32,
    /// First sweep value (rational for alpha, integer for order).
    #[arg(long)]
    from: String,
    /// Last sweep value (inclusive).
    #[arg(long)]
    to: String,
    /// Number of sweep points.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    steps: u32,
}

/// A failure on its way out of the process: exit code plus message.
struct Failure {
    code: i32,
    message: String,
}

type CliResult = std::result::Result<(), Failure>;

fn config_fail(e: Error) -> Failure {
    Failure {
        code: 3,
        message: e.to_string(),
    }
}

fn solver_fail(e: Error) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn usage_fail(message: String) -> Failure {
    Failure { code: 1, message }
}

/// Entry point: parses `argv`, dispatches, reports errors on stderr, and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // --help/--version land here too; clap prints them itself.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::SolveBvp(args) => run_solve_bvp(args),
        Command::SolveEig(args) => run_solve_eig(args),
        Command::SweepAlpha(args) => run_sweep(args, SweepKind::Alpha),
        Command::SweepOrder(args) => run_sweep(args, SweepKind::Order),
    };
    match outcome {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

// ---------------------------------------------------------------------------
// Problem configs
// ---------------------------------------------------------------------------

/// A parsed and validated `kind = "bvp"` config.
#[derive(Debug, Clone)]
pub struct BvpConfig {
    pub interval: Interval,
    pub alpha: AlphaParam,
    pub order: usize,
    pub ode: LinearOde2,
    pub bc1: BoundaryCondition,
    pub bc2: BoundaryCondition,
    /// Config-level oracle toggle, OR-ed with `--compare-oracle`.
    pub compare_oracle: bool,
}

/// A parsed and validated `kind = "eig"` config.
#[derive(Debug, Clone)]
pub struct EigConfig {
    pub problem: EigProblem,
    pub lambda_lo: f64,
    pub lambda_hi: f64,
    pub num_roots: usize,
    pub tol: f64,
    pub compare_oracle: bool,
}

/// Either problem kind, as read from a config file.
#[derive(Debug, Clone)]
pub enum ProblemConfig {
    Bvp(BvpConfig),
    Eig(EigConfig),
}

type JsonMap = serde_json::Map<String, serde_json::Value>;

fn key_err(key: &str, detail: &str) -> Error {
    Error::Config(format!("key `{key}`: {detail}"))
}

fn as_object<'a>(value: &'a serde_json::Value, key: &str) -> Result<&'a JsonMap> {
    value
        .as_object()
        .ok_or_else(|| key_err(key, "expected an object"))
}

fn check_keys(obj: &JsonMap, allowed: &[&str], context: &str) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::Config(format!("unknown key `{key}` in {context}")));
        }
    }
    Ok(())
}

fn required<'a>(obj: &'a JsonMap, key: &str) -> Result<&'a serde_json::Value> {
    obj.get(key)
        .ok_or_else(|| key_err(key, "missing required key"))
}

/// Numbers keep their literal form (`serde_json` arbitrary precision), so
/// both `0.1` and `"1/10"` parse to the same exact rational.
fn rational_value(value: &serde_json::Value, key: &str) -> Result<Rational> {
    let text = match value {
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::String(s) => s.clone(),
        _ => return Err(key_err(key, "expected a number or a rational string")),
    };
    parse_rational(&text).map_err(|_| key_err(key, &format!("cannot parse `{text}` as a rational")))
}

fn rational_field(obj: &JsonMap, key: &str) -> Result<Rational> {
    rational_value(required(obj, key)?, key)
}

fn rational_field_or_zero(obj: &JsonMap, key: &str) -> Result<Rational> {
    match obj.get(key) {
        Some(v) => rational_value(v, key),
        None => Ok(Rational::zero()),
    }
}

fn usize_field(obj: &JsonMap, key: &str) -> Result<usize> {
    let value = required(obj, key)?;
    value
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| key_err(key, "expected a non-negative integer"))
}

fn f64_field(obj: &JsonMap, key: &str) -> Result<f64> {
    let value = required(obj, key)?;
    let text = match value {
        serde_json::Value::Number(n) => n.to_string(),
        _ => return Err(key_err(key, "expected a number")),
    };
    text.parse::<f64>()
        .map_err(|_| key_err(key, &format!("cannot parse `{text}` as a float")))
}

fn bool_field_or_false(obj: &JsonMap, key: &str) -> Result<bool> {
    match obj.get(key) {
        None => Ok(false),
        Some(serde_json::Value::Bool(b)) => Ok(*b),
        Some(_) => Err(key_err(key, "expected true or false")),
    }
}

fn endpoint_field(obj: &JsonMap, key: &str) -> Result<Endpoint> {
    match required(obj, key)?.as_str() {
        Some("left") => Ok(Endpoint::Left),
        Some("right") => Ok(Endpoint::Right),
        _ => Err(key_err(key, "expected \"left\" or \"right\"")),
    }
}

fn boundary_condition_field(obj: &JsonMap, key: &str) -> Result<BoundaryCondition> {
    let bc = as_object(required(obj, key)?, key)?;
    check_keys(bc, &["endpoint", "c1", "c2", "rhs"], key)?;
    BoundaryCondition::new(
        endpoint_field(bc, "endpoint")?,
        rational_field(bc, "c1")?,
        rational_field(bc, "c2")?,
        rational_field(bc, "rhs")?,
    )
    .map_err(|_| key_err(key, "needs c1 or c2 nonzero"))
}

fn forcing_field(obj: &JsonMap, key: &str) -> Result<Vec<Rational>> {
    match obj.get(key) {
        None => Ok(Vec::new()),
        Some(serde_json::Value::Array(items)) => {
            items.iter().map(|item| rational_value(item, key)).collect()
        }
        Some(_) => Err(key_err(key, "expected an array of rationals")),
    }
}

/// Parses one config document. Schema:
///
/// * common: `kind` (`"bvp"` or `"eig"`), `a`, `b`, `alpha`, `order`,
///   optional `compare_oracle`;
/// * bvp: optional `p`, `q` (default 0), optional `forcing` (monomial
///   coefficients, default empty), `bc1`/`bc2` objects with `endpoint`,
///   `c1`, `c2`, `rhs`;
/// * eig: `A11`, `A12`, `A21`, `A22`, `lambda_lo`, `lambda_hi`,
///   `num_roots`, `tol`.
///
/// Every rational field accepts an integer, a finite decimal, or a `"p/q"`
/// string, all converted exactly; unknown keys are rejected.
pub fn parse_config(text: &str) -> Result<ProblemConfig> {
    let root: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid JSON: {e}")))?;
    let obj = as_object(&root, "<top level>")?;
    let kind = required(obj, "kind")?
        .as_str()
        .ok_or_else(|| key_err("kind", "expected \"bvp\" or \"eig\""))?;

    let interval = Interval::new(rational_field(obj, "a")?, rational_field(obj, "b")?)
        .map_err(|_| Error::Config("interval endpoints must satisfy a < b".into()))?;
    let alpha = AlphaParam::new(rational_field(obj, "alpha")?)
        .map_err(|_| key_err("alpha", "must lie in [0, 1]"))?;
    let order = usize_field(obj, "order")?;
    if order < 1 {
        return Err(key_err("order", "must be at least 1"));
    }
    let compare_oracle = bool_field_or_false(obj, "compare_oracle")?;

    match kind {
        "bvp" => {
            check_keys(
                obj,
                &[
                    "kind",
                    "a",
                    "b",
                    "alpha",
                    "order",
                    "p",
                    "q",
                    "forcing",
                    "bc1",
                    "bc2",
                    "compare_oracle",
                ],
                "bvp config",
            )?;
            let ode = LinearOde2::new(
                rational_field_or_zero(obj, "p")?,
                rational_field_or_zero(obj, "q")?,
                forcing_field(obj, "forcing")?,
            );
            if ode.forcing.len() > order + 1 {
                return Err(key_err("forcing", "more coefficients than order + 1"));
            }
            Ok(ProblemConfig::Bvp(BvpConfig {
                bc1: boundary_condition_field(obj, "bc1")?,
                bc2: boundary_condition_field(obj, "bc2")?,
                interval,
                alpha,
                order,
                ode,
                compare_oracle,
            }))
        }
        "eig" => {
            check_keys(
                obj,
                &[
                    "kind",
                    "a",
                    "b",
                    "alpha",
                    "order",
                    "A11",
                    "A12",
                    "A21",
                    "A22",
                    "lambda_lo",
                    "lambda_hi",
                    "num_roots",
                    "tol",
                    "compare_oracle",
                ],
                "eig config",
            )?;
            let problem = EigProblem::new(
                interval,
                rational_field(obj, "A11")?,
                rational_field(obj, "A12")?,
                rational_field(obj, "A21")?,
                rational_field(obj, "A22")?,
                alpha,
                order,
            )
            .map_err(|e| Error::Config(e.to_string()))?;
            let lambda_lo = f64_field(obj, "lambda_lo")?;
            let lambda_hi = f64_field(obj, "lambda_hi")?;
            if !(lambda_lo < lambda_hi) {
                return Err(key_err("lambda_lo", "must be below lambda_hi"));
            }
            let num_roots = usize_field(obj, "num_roots")?;
            if num_roots < 1 {
                return Err(key_err("num_roots", "must be at least 1"));
            }
            let tol = f64_field(obj, "tol")?;
            if !(tol > 0.0) {
                return Err(key_err("tol", "must be positive"));
            }
            Ok(ProblemConfig::Eig(EigConfig {
                problem,
                lambda_lo,
                lambda_hi,
                num_roots,
                tol,
                compare_oracle,
            }))
        }
        other => Err(key_err(
            "kind",
            &format!("expected \"bvp\" or \"eig\", got \"{other}\""),
        )),
    }
}

fn load_config(path: &Path) -> std::result::Result<ProblemConfig, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 3,
        message: format!("cannot read config {}: {e}", path.display()),
    })?;
    parse_config(&text).map_err(config_fail)
}

// ---------------------------------------------------------------------------
// Oracles derived from configs
// ---------------------------------------------------------------------------

/// The BVP oracle `sin(μx)/sin(μ)` exists only for the reference problem:
/// `y'' + μ²y = 0` on `[0, 1]` with `y(0) = 0`, `y(1) = 1`. Returns `μ`.
fn reference_mu(cfg: &BvpConfig) -> Result<f64> {
    let reference = cfg.interval == Interval::unit()
        && cfg.ode.p.is_zero()
        && cfg.ode.forcing.iter().all(Zero::is_zero)
        && cfg.ode.q.is_positive()
        && cfg.bc1.endpoint == Endpoint::Left
        && cfg.bc1.c2.is_zero()
        && cfg.bc1.rhs.is_zero()
        && !cfg.bc1.c1.is_zero()
        && cfg.bc2.endpoint == Endpoint::Right
        && cfg.bc2.c2.is_zero()
        && cfg.bc2.rhs == cfg.bc2.c1
        && !cfg.bc2.c1.is_zero();
    if !reference {
        return Err(Error::Config(
            "oracle comparison requires the reference problem: y'' + q·y = 0 on [0, 1] \
             with q > 0, p = 0, no forcing, y(0) = 0, y(1) = 1"
                .into(),
        ));
    }
    let mu = rational_to_f64(&cfg.ode.q).sqrt();
    if mu.sin().abs() <= 1e-12 {
        return Err(Error::Config(
            "q is numerically a Dirichlet eigenvalue; the oracle has no solution there".into(),
        ));
    }
    Ok(mu)
}

/// Exact eigenvalues (ascending `λ = μ²`) of the config's boundary matrix
/// over the config's `λ` window.
fn oracle_eigenvalues(cfg: &EigConfig) -> Result<Vec<f64>> {
    if cfg.lambda_lo < 0.0 {
        return Err(Error::Config(
            "oracle comparison requires lambda_lo >= 0 (the closed form covers the positive \
             spectrum)"
                .into(),
        ));
    }
    let p = &cfg.problem;
    let f = crate::exact::ExactCharFn::new(
        rational_to_f64(&p.a11),
        rational_to_f64(&p.a12),
        rational_to_f64(&p.a21),
        rational_to_f64(&p.a22),
    )?;
    let mu_lo = cfg.lambda_lo.sqrt().max(1e-9);
    let mu_hi = cfg.lambda_hi.sqrt();
    if !(mu_lo < mu_hi) {
        return Err(Error::Config(
            "lambda window leaves no positive mu range for the oracle".into(),
        ));
    }
    let roots = f.exact_eigenvalues(mu_lo, mu_hi, DEFAULT_SCAN_STEPS, cfg.tol)?;
    Ok(roots.into_iter().map(|r| r.lambda).collect())
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// Floats at 17 significant digits: round-trip safe for `f64`.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// An exactly-known cell: `num/den` under `--exact-rationals`, decimal
/// otherwise.
fn fmt_rat(r: &Rational, exact: bool) -> String {
    if exact {
        r.to_string()
    } else {
        fmt_f64(rational_to_f64(r))
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> CliResult {
    let result = match out {
        Some(path) => fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    };
    result.map_err(|e| Failure {
        code: 2,
        message: format!("cannot write output: {e}"),
    })
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn expect_bvp(cfg: ProblemConfig, subcommand: &str) -> std::result::Result<BvpConfig, Failure> {
    match cfg {
        ProblemConfig::Bvp(bvp) => Ok(bvp),
        ProblemConfig::Eig(_) => Err(config_fail(Error::Config(format!(
            "{subcommand} requires a config with kind = \"bvp\""
        )))),
    }
}

fn solve_bvp_config(cfg: &BvpConfig, alpha: &AlphaParam, order: usize) -> Result<BvpSolution> {
    solve_bvp(&cfg.ode, &cfg.bc1, &cfg.bc2, alpha, &cfg.interval, order)
}

fn run_solve_bvp(args: SolveBvpArgs) -> CliResult {
    let cfg = expect_bvp(load_config(&args.common.config)?, "solve-bvp")?;
    let compare = args.compare_oracle || cfg.compare_oracle;
    let mu = if compare {
        Some(reference_mu(&cfg).map_err(config_fail)?)
    } else {
        None
    };
    let sol = solve_bvp_config(&cfg, &cfg.alpha, cfg.order).map_err(solver_fail)?;

    let samples = args.samples as usize;
    let span = cfg.interval.b() - cfg.interval.a();
    let denominator = Rational::from_integer((samples as i64 - 1).into());
    let mut csv = String::new();
    csv.push_str(if compare {
        "x,approx,exact,abs_err\n"
    } else {
        "x,approx\n"
    });
    for i in 0..samples {
        let x = cfg.interval.a() + &span * Rational::from_integer((i as i64).into()) / &denominator;
        let approx = sol.series.evaluate(&x);
        let exact_flag = args.common.exact_rationals;
        write!(
            csv,
            "{},{}",
            fmt_rat(&x, exact_flag),
            fmt_rat(&approx, exact_flag)
        )
        .unwrap();
        if let Some(mu) = mu {
            let exact = dirichlet_solution(mu, rational_to_f64(&x)).map_err(solver_fail)?;
            let abs_err = (rational_to_f64(&approx) - exact).abs();
            write!(csv, ",{},{}", fmt_f64(exact), fmt_f64(abs_err)).unwrap();
        }
        csv.push('\n');
    }
    write_output(&args.common.out, &csv)
}

fn run_solve_eig(args: SolveEigArgs) -> CliResult {
    let cfg = match load_config(&args.common.config)? {
        ProblemConfig::Eig(eig) => eig,
        ProblemConfig::Bvp(_) => {
            return Err(config_fail(Error::Config(
                "solve-eig requires a config with kind = \"eig\"".into(),
            )))
        }
    };
    let sol = solve_eig(
        &cfg.problem,
        cfg.lambda_lo,
        cfg.lambda_hi,
        cfg.num_roots,
        DEFAULT_SCAN_STEPS,
        cfg.tol,
    )
    .map_err(solver_fail)?;

    if args.emit_poly {
        return write_output(&args.common.out, &format!("{}\n", sol.determinant));
    }

    let compare = args.compare_oracle || cfg.compare_oracle;
    let oracle = if compare {
        Some(oracle_eigenvalues(&cfg).map_err(config_fail)?)
    } else {
        None
    };
    let mut csv = String::new();
    csv.push_str(if compare {
        "index,lambda_hat,lambda_exact,rel_err,residual\n"
    } else {
        "index,lambda_hat,residual\n"
    });
    for (i, pair) in sol.pairs.iter().enumerate() {
        write!(csv, "{},{}", i + 1, fmt_f64(pair.lambda_hat)).unwrap();
        if let Some(oracle) = &oracle {
            // Both lists ascend over the same λ window, so pairing is by index;
            // an unmatched root reports NaN rather than a bogus comparison.
            let (lambda_exact, rel_err) = match oracle.get(i) {
                Some(&l) => (l, (pair.lambda_hat - l).abs() / l.abs()),
                None => (f64::NAN, f64::NAN),
            };
            write!(csv, ",{},{}", fmt_f64(lambda_exact), fmt_f64(rel_err)).unwrap();
        }
        writeln!(csv, ",{}", fmt_f64(pair.char_residual)).unwrap();
    }
    write_output(&args.common.out, &csv)
}

enum SweepKind {
    Alpha,
    Order,
}

fn run_sweep(args: SweepArgs, kind: SweepKind) -> CliResult {
    let subcommand = match kind {
        SweepKind::Alpha => "sweep-alpha",
        SweepKind::Order => "sweep-order",
    };
    let cfg = expect_bvp(load_config(&args.common.config)?, subcommand)?;
    let mu = reference_mu(&cfg).map_err(config_fail)?;
    let from = parse_rational(&args.from).map_err(|_| {
        usage_fail(format!(
            "--from: cannot parse `{}` as a rational",
            args.from
        ))
    })?;
    let to = parse_rational(&args.to)
        .map_err(|_| usage_fail(format!("--to: cannot parse `{}` as a rational", args.to)))?;
    let steps = args.steps as usize;
    let samples = args.samples as usize;

    // The sweep points interpolate `from..=to` exactly; `steps = 1` degenerates
    // to the single point `from`.
    let point = |i: usize| -> Rational {
        if steps == 1 {
            from.clone()
        } else {
            &from
                + (&to - &from) * Rational::from_integer((i as i64).into())
                    / Rational::from_integer((steps as i64 - 1).into())
        }
    };

    let mut csv = String::new();
    match kind {
        SweepKind::Alpha => {
            for endpoint in [&from, &to] {
                if endpoint.is_negative() || endpoint > &Rational::from_integer(1.into()) {
                    return Err(usage_fail("--from/--to: alpha must lie in [0, 1]".into()));
                }
            }
            csv.push_str("alpha,sup_norm_error\n");
            for i in 0..steps {
                let alpha_value = point(i);
                let alpha = AlphaParam::new(alpha_value.clone()).map_err(solver_fail)?;
                let sol = solve_bvp_config(&cfg, &alpha, cfg.order).map_err(solver_fail)?;
                let report = bvp_oracle_report(&sol, mu, samples, &cfg.interval)?;
                writeln!(
                    csv,
                    "{},{}",
                    fmt_rat(&alpha_value, args.common.exact_rationals),
                    fmt_f64(report)
                )
                .unwrap();
            }
        }
        SweepKind::Order => {
            for endpoint in [&from, &to] {
                if !endpoint.is_integer() || endpoint < &Rational::from_integer(1.into()) {
                    return Err(usage_fail(
                        "--from/--to: order must be an integer >= 1".into(),
                    ));
                }
            }
            csv.push_str("order,sup_norm_error\n");
            for i in 0..steps {
                let order = rational_to_f64(&point(i)).round() as usize;
                let sol = solve_bvp_config(&cfg, &cfg.alpha, order).map_err(solver_fail)?;
                let report = bvp_oracle_report(&sol, mu, samples, &cfg.interval)?;
                writeln!(csv, "{order},{}", fmt_f64(report)).unwrap();
            }
        }
    }
    write_output(&args.common.out, &csv)
}

fn bvp_oracle_report(
    sol: &BvpSolution,
    mu: f64,
    samples: usize,
    interval: &Interval,
) -> std::result::Result<f64, Failure> {
    // `reference_mu` already rejected resonant q, so the oracle is total here.
    let report = error_report(
        sol,
        |x| dirichlet_solution(mu, x).expect("non-resonant mu"),
        samples,
        interval,
    )
    .map_err(solver_fail)?;
    Ok(report.sup_norm)
}

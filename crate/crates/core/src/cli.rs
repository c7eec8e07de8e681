//! Command line front end.
//!
//! Exit codes: `0` every assertion held, `1` an assertion failed, `2` usage,
//! parse or evaluation error, `3` resource limit. Text reports go to stdout;
//! `--out` additionally writes the CSV artifact to a path (a directory for
//! `paper-examples`).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use crate::density::{self, condition_star, density, limit_estimates, ratio, SetPredicate};
use crate::directed::{validate_axioms, DirectedSet, Element, TruncationPolicy};
use crate::error::Error;
use crate::expr::{eval_expr, parse_typed, EvalError, Expr, ParseError, Type, Value};
use crate::fixtures::{self, is_square};
use crate::grid::BoxGrid;
use crate::nets::{self, IndexMode, Net, Scalar, DEFAULT_EPS, DEFAULT_TOL};
use crate::netspace::{self, BalancedNeighborhood, ClassifyOptions, GaugeValue};
use crate::report;

#[derive(Parser, Debug)]
#[command(name = "netdensity", version, about = "Asymptotic density over directed sets and statistical convergence of nets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Density report of a set given by a boolean expression.
    Density(DensityArgs),
    /// Truncated liminf of a real-valued net.
    Liminf(NetArgs),
    /// Truncated limsup of a real-valued net.
    Limsup(NetArgs),
    /// Statistical convergence of a net to a given limit.
    Converge(ConvergeArgs),
    /// Statistical Cauchyness of a net.
    Cauchy(CauchyArgs),
    /// Upper density of the up-set of an element.
    Star(StarArgs),
    /// Membership of a net in M, M_cy, M_ct and M_0.
    Classify(ClassifyArgs),
    /// Sampled check of the directed-set axioms.
    Axioms(AxiomsArgs),
    /// Reproduces the worked examples as a pass/fail table.
    PaperExamples(PaperArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Directed set: N, N^d, div, div1, prod(<spec>,<spec>).
    #[arg(long)]
    pub family: String,
    /// Truncation horizon H (default depends on the family).
    #[arg(long)]
    pub horizon: Option<u64>,
    /// Frontier F ≤ H (default H/2, or ⌊√H⌋ with a divisibility factor).
    #[arg(long)]
    pub frontier: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the CSV artifact here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    #[command(flatten)]
    pub common: Common,
    /// Boolean expression over n or x1..xd.
    #[arg(long)]
    pub set: String,
    /// Assert both estimates lie within --tol of this value.
    #[arg(long)]
    pub expect_density: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct NetArgs {
    #[command(flatten)]
    pub common: Common,
    /// Numeric expression over n or x1..xd.
    #[arg(long)]
    pub net: String,
}

#[derive(Args, Debug)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub common: Common,
    /// One numeric expression per component.
    #[arg(long, required = true)]
    pub net: Vec<String>,
    /// Candidate limit, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub limit: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_EPS)]
    pub eps: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct CauchyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, required = true)]
    pub net: Vec<String>,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_EPS)]
    pub eps: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct StarArgs {
    #[command(flatten)]
    pub common: Common,
    /// Element γ, e.g. 3 or (2,2).
    #[arg(long)]
    pub gamma: String,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, required = true)]
    pub net: Vec<String>,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_EPS)]
    pub eps: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Radius of the ball used for the gauge.
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
}

#[derive(Args, Debug)]
pub struct AxiomsArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct PaperArgs {
    /// Directory for the golden CSV files.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// First seed of the generated fixtures.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::ResourceLimit { .. }) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Density(a) => run_density(a, out),
        Command::Liminf(a) | Command::Limsup(a) => run_estimates(a, matches!(command, Command::Liminf(_)), out),
        Command::Converge(a) => run_converge(a, out),
        Command::Cauchy(a) => run_cauchy(a, out),
        Command::Star(a) => run_star(a, out),
        Command::Classify(a) => run_classify(a, out),
        Command::Axioms(a) => run_axioms(a, out),
        Command::PaperExamples(a) => run_paper_examples(a, out),
    }
}

/// Default horizon for a family: resolves the worked examples within seconds.
pub fn default_horizon(ds: &DirectedSet) -> u64 {
    match ds.arity() {
        1 => 10_000,
        2 => 200,
        3 => 50,
        _ => 20,
    }
}

struct Setup {
    ds: DirectedSet,
    policy: TruncationPolicy,
}

fn setup(c: &Common) -> CliResult<Setup> {
    let ds: DirectedSet = c.family.parse()?;
    let horizon = c.horizon.unwrap_or_else(|| default_horizon(&ds));
    let policy = match c.frontier {
        Some(f) => TruncationPolicy::new(f, horizon)?,
        None => TruncationPolicy::for_family(&ds, horizon)?,
    };
    Ok(Setup { ds, policy })
}

/// Expression values over the horizon box, looked up by index; elements
/// outside the box are evaluated on demand.
struct Tabulated {
    grid: BoxGrid,
    exprs: Vec<Expr>,
    values: Vec<Value>,
}

impl Tabulated {
    fn new(exprs: Vec<Expr>, ds: &DirectedSet, policy: &TruncationPolicy) -> CliResult<Arc<Self>> {
        let grid = BoxGrid::new(ds, policy.horizon(), policy.element_cap())?;
        let mut values = Vec::with_capacity(grid.len() * exprs.len());
        let mut failure = None;
        grid.for_each(|_, coords| {
            if failure.is_some() {
                return;
            }
            let e = Element::new(coords);
            for x in &exprs {
                match eval_expr(x, &e) {
                    Ok(v) => values.push(v),
                    Err(err) => failure = Some(err),
                }
            }
        });
        if let Some(err) = failure {
            return Err(err.into());
        }
        Ok(Arc::new(Tabulated { grid, exprs, values }))
    }

    fn get(&self, e: &Element, k: usize) -> Value {
        match self.grid.index_of(e.coords()) {
            Some(i) => self.values[i * self.exprs.len() + k],
            None => eval_expr(&self.exprs[k], e).unwrap_or(Value::Real(f64::NAN)),
        }
    }
}

fn set_from_expr(src: &str, s: &Setup) -> CliResult<SetPredicate> {
    let expr = parse_typed(src, s.ds.arity(), Type::Bool)?;
    let table = Tabulated::new(vec![expr], &s.ds, &s.policy)?;
    Ok(SetPredicate::new(move |e| table.get(e, 0).as_bool()))
}

fn net_from_exprs(srcs: &[String], s: &Setup) -> CliResult<Net> {
    let exprs = srcs
        .iter()
        .map(|src| parse_typed(src, s.ds.arity(), Type::Num))
        .collect::<Result<Vec<_>, _>>()?;
    let dim = exprs.len();
    let table = Tabulated::new(exprs, &s.ds, &s.policy)?;
    Ok(Net::new(s.ds.clone(), dim, move |e| (0..dim).map(|k| table.get(e, k).as_f64()).collect()))
}

fn write_out(path: &Option<PathBuf>, f: impl FnOnce(&mut Vec<u8>) -> csv::Result<()>) -> CliResult<()> {
    if let Some(p) = path {
        let mut buf = Vec::new();
        f(&mut buf)?;
        fs::write(p, buf)?;
    }
    Ok(())
}

fn emit(
    format: Format,
    text: &report::TextReport,
    out: &mut dyn Write,
    csv: impl Fn(&mut Vec<u8>) -> csv::Result<()>,
) -> CliResult<()> {
    match format {
        Format::Text => write!(out, "{text}")?,
        Format::Csv => {
            let mut buf = Vec::new();
            csv(&mut buf)?;
            out.write_all(&buf)?;
        }
    }
    Ok(())
}

fn run_density(a: &DensityArgs, out: &mut dyn Write) -> CliResult<i32> {
    let s = setup(&a.common)?;
    let set = set_from_expr(&a.set, &s)?;
    let r = density(&set, &s.ds, &s.policy)?;
    let arity = s.ds.arity();
    let mut text = report::density_text(&r);
    let mut code = EXIT_OK;
    if let Some(x) = a.expect_density {
        let ok = (r.lower_est - x).abs() <= a.tol && (r.upper_est - x).abs() <= a.tol;
        text.push("expected", x).push("assertion", if ok { "pass" } else { "fail" });
        if !ok {
            code = EXIT_ASSERTION;
        }
    }
    emit(a.common.format, &text, out, |b| report::write_density_csv(&r, arity, b))?;
    write_out(&a.common.out, |b| report::write_density_csv(&r, arity, b))?;
    Ok(code)
}

fn run_estimates(a: &NetArgs, lower: bool, out: &mut dyn Write) -> CliResult<i32> {
    let s = setup(&a.common)?;
    let expr = parse_typed(&a.net, s.ds.arity(), Type::Num)?;
    let table = Tabulated::new(vec![expr], &s.ds, &s.policy)?;
    let (lo, hi) = limit_estimates(|e| table.get(e, 0).as_f64(), &s.ds, &s.policy)?;
    let mut text = report::TextReport::new();
    let (name, est) = if lower { ("liminf_est", &lo) } else { ("limsup_est", &hi) };
    text.push(name, report::decimal(est.value));
    for (i, st) in est.steps.iter().enumerate() {
        text.push(format!("step.{i}"), format!("F={} H={} value={}", st.frontier, st.horizon, report::decimal(st.value)));
    }
    emit(a.common.format, &text, out, |b| report::write_estimates_csv(&lo, &hi, b))?;
    write_out(&a.common.out, |b| report::write_estimates_csv(&lo, &hi, b))?;
    Ok(EXIT_OK)
}

fn run_converge(a: &ConvergeArgs, out: &mut dyn Write) -> CliResult<i32> {
    let s = setup(&a.common)?;
    let net = net_from_exprs(&a.net, &s)?;
    if a.limit.len() != net.dim() {
        return Err(CliError::Usage(format!(
            "--limit has {} components but the net has {}",
            a.limit.len(),
            net.dim()
        )));
    }
    let v = nets::stat_converges_to(&net, &a.limit, &a.eps, &s.policy, a.tol)?;
    emit(a.common.format, &report::convergence_text(&v), out, |b| report::write_per_eps_csv(&v.per_eps, b))?;
    write_out(&a.common.out, |b| report::write_per_eps_csv(&v.per_eps, b))?;
    Ok(if v.converges { EXIT_OK } else { EXIT_ASSERTION })
}

fn run_cauchy(a: &CauchyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let s = setup(&a.common)?;
    let net = net_from_exprs(&a.net, &s)?;
    let mut all = true;
    let mut per_eps = Vec::new();
    let mut text = report::TextReport::new();
    for &eps in &a.eps {
        let v = nets::stat_cauchy(&net, eps, &s.policy, a.tol)?;
        all &= v.cauchy;
        text.push(
            format!("eps.{eps}"),
            format!(
                "cauchy={} witness={} upper={}",
                v.cauchy,
                v.witness.as_ref().map_or_else(|| "none".into(), |w| w.to_string()),
                v.per_eps.first().map_or_else(|| "n/a".into(), |(_, r)| report::decimal(r.upper_est))
            ),
        );
        per_eps.extend(v.per_eps);
    }
    text.push("cauchy", all);
    emit(a.common.format, &text, out, |b| report::write_per_eps_csv(&per_eps, b))?;
    write_out(&a.common.out, |b| report::write_per_eps_csv(&per_eps, b))?;
    Ok(if all { EXIT_OK } else { EXIT_ASSERTION })
}

fn run_star(a: &StarArgs, out: &mut dyn Write) -> CliResult<i32> {
    let s = setup(&a.common)?;
    let gamma: Element = a.gamma.parse()?;
    let r = condition_star(&gamma, &s.ds, &s.policy)?;
    let arity = s.ds.arity();
    emit(a.common.format, &report::star_text(&r), out, |b| report::write_density_csv(&r.report, arity, b))?;
    write_out(&a.common.out, |b| report::write_density_csv(&r.report, arity, b))?;
    Ok(if r.holds { EXIT_OK } else { EXIT_ASSERTION })
}

fn run_classify(a: &ClassifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let s = setup(&a.common)?;
    let net = net_from_exprs(&a.net, &s)?;
    let opts = ClassifyOptions {
        eps: a.eps.clone(),
        tol: a.tol,
        ..ClassifyOptions::default()
    };
    let c = netspace::classify(&net, &s.policy, &opts)?;
    let u = BalancedNeighborhood::new(a.radius)?;
    let mut text = report::classification_text(&c);
    let g = netspace::gauge(&net, &u, &s.policy)?;
    text.push("gauge", g).push("in_n_u", g.value() < 1.0);
    let rows = vec![(a.net.join(";"), c)];
    emit(a.common.format, &text, out, |b| report::write_classifications_csv(&rows, b))?;
    write_out(&a.common.out, |b| report::write_classifications_csv(&rows, b))?;
    Ok(EXIT_OK)
}

fn run_axioms(a: &AxiomsArgs, out: &mut dyn Write) -> CliResult<i32> {
    let s = setup(&a.common)?;
    let r = validate_axioms(&s.ds, &s.policy)?;
    let text = report::axioms_text(&r);
    emit(a.common.format, &text, out, |b| write_kv_csv(&text, b))?;
    write_out(&a.common.out, |b| write_kv_csv(&text, b))?;
    Ok(if r.passed() { EXIT_OK } else { EXIT_ASSERTION })
}

fn write_kv_csv(t: &report::TextReport, w: &mut Vec<u8>) -> csv::Result<()> {
    let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
    out.write_record(["key", "value"])?;
    for (k, v) in t.lines() {
        out.write_record([k, v])?;
    }
    out.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Worked examples

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail,
}

impl std::fmt::Display for RowStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "pass",
            RowStatus::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExampleRow {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub status: RowStatus,
}

fn row(name: &str, expected: impl Into<String>, observed: impl Into<String>, ok: bool) -> ExampleRow {
    ExampleRow {
        name: name.into(),
        expected: expected.into(),
        observed: observed.into(),
        status: if ok { RowStatus::Pass } else { RowStatus::Fail },
    }
}

fn d(v: f64) -> String {
    format!("{v:.6}")
}

fn inv_n() -> Net {
    Net::scalar(DirectedSet::Naturals, |e| 1.0 / e.coords()[0] as f64)
}

fn alternating() -> Net {
    Net::scalar(DirectedSet::Naturals, |e| if e.coords()[0] % 2 == 0 { 1.0 } else { -1.0 })
}

fn diagonal3(e: &Element) -> bool {
    let c = e.coords();
    c[0] == c[1] && c[1] == c[2]
}

#[derive(Clone, Debug, PartialEq)]
pub struct PaperExamples {
    pub rows: Vec<ExampleRow>,
    /// Reference values printed under the table, not asserted.
    pub notes: Vec<String>,
    /// `(file name, contents)` of the golden CSV files.
    pub golden: Vec<(String, String)>,
}

impl PaperExamples {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.status == RowStatus::Pass)
    }
}

/// Runs every worked example; `seed` offsets the generated fixtures.
pub fn paper_examples(seed: u64) -> crate::Result<PaperExamples> {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    let mut golden = Vec::new();
    let tol = DEFAULT_TOL;

    // Diagonal of N^3.
    let n3 = DirectedSet::Grid(3);
    let p50 = TruncationPolicy::new(25, 50)?;
    let r = density(&SetPredicate::new(diagonal3), &n3, &p50)?;
    rows.push(row(
        "diagonal of N^3 has density 0",
        "upper <= 0.03, lower <= upper",
        format!("lower={} upper={}", d(r.lower_est), d(r.upper_est)),
        r.upper_est <= 0.03 && r.lower_est <= r.upper_est,
    ));
    golden.push(("density_diagonal_n3.csv".to_string(), csv_string(|b| report::write_density_csv(&r, 3, b))?));

    // Evens.
    let evens = SetPredicate::new(|e| e.coords()[0] % 2 == 0);
    let r = density(&evens, &DirectedSet::Naturals, &TruncationPolicy::new(5000, 10_000)?)?;
    rows.push(row(
        "even numbers have density 1/2",
        "both within 0.01 of 0.5, exists",
        format!("lower={} upper={} {}", d(r.lower_est), d(r.upper_est), r.exists),
        (r.lower_est - 0.5).abs() <= 0.01 && (r.upper_est - 0.5).abs() <= 0.01 && r.exists == density::Existence::Exists,
    ));
    golden.push(("density_evens.csv".to_string(), csv_string(|b| report::write_density_csv(&r, 1, b))?));

    // Odd numbers under divisibility.
    let odd = SetPredicate::new(|e| e.coords()[0] % 2 == 1);
    let at_pow2 = ratio(&odd, &Element::single(1 << 20), &DirectedSet::Divisibility)?;
    let at_pow3 = ratio(&odd, &Element::single(3u64.pow(13)), &DirectedSet::Divisibility)?;
    rows.push(row(
        "odd numbers under divisibility: ratio at 2^20 and 3^13",
        "1/21 and 1",
        format!("{at_pow2} and {at_pow3}"),
        at_pow2 == Ratio::new(1, 21) && at_pow3 == Ratio::from_integer(1),
    ));
    let r = density(
        &odd,
        &DirectedSet::Divisibility,
        &TruncationPolicy::for_family(&DirectedSet::Divisibility, 1 << 20)?,
    )?;
    notes.push(format!(
        "odd numbers under divisibility, truncated estimates at H=2^20 (F={}): lower={} upper={} ({})",
        r.policy_used.frontier(),
        d(r.lower_est),
        d(r.upper_est),
        r.exists
    ));

    // Up-set of (2,2).
    let n2 = DirectedSet::Grid(2);
    let gamma = Element::new(&[2, 2]);
    let up = SetPredicate::up_set(&n2, &gamma);
    let r = density(&up, &n2, &TruncationPolicy::new(100, 200)?)?;
    let corner = ratio(&up, &Element::new(&[200, 200]), &n2)?;
    rows.push(row(
        "up-set of (2,2) in N^2 has density 1",
        "lower >= 0.95, ratio at (200,200) = 39601/40000",
        format!("lower={} corner={corner}", d(r.lower_est)),
        r.lower_est >= 0.95 && corner == Ratio::new(199 * 199, 200 * 200),
    ));

    // Up-sets in div1 have positive upper density.
    let div1 = DirectedSet::DivisibilityExcludingOne;
    let p = TruncationPolicy::for_family(&div1, 10_000)?;
    let mut obs = Vec::new();
    let mut ok = true;
    for g in [2u64, 3, 5] {
        let s = condition_star(&Element::single(g), &div1, &p)?;
        ok &= s.holds && s.limsup_est >= 0.5;
        obs.push(format!("{g}:{}", d(s.limsup_est)));
    }
    rows.push(row(
        "up-sets in div1 have positive upper density",
        "holds with limsup >= 0.5 for 2, 3, 5",
        obs.join(" "),
        ok,
    ));

    // Statistical convergence.
    let pn = TruncationPolicy::new(5000, 10_000)?;
    let v = nets::stat_converges_to(&inv_n(), &[0.0], &DEFAULT_EPS, &pn, tol)?;
    rows.push(row("1/n converges statistically to 0", "converges", verdict_str(&v), v.converges));

    let bumped = Net::scalar(DirectedSet::Naturals, |e| {
        let n = e.coords()[0];
        if is_square(n) {
            1.0
        } else {
            1.0 / n as f64
        }
    });
    let v = nets::stat_converges_to(&bumped, &[0.0], &DEFAULT_EPS, &pn, tol)?;
    rows.push(row("1/n bumped to 1 on squares converges to 0", "converges", verdict_str(&v), v.converges));

    let diag_net = Net::scalar(n3.clone(), |e| {
        let c = e.coords();
        if diagonal3(e) {
            1.0
        } else {
            1.0 / (c[0] + c[1] + c[2]) as f64
        }
    });
    let v = nets::stat_converges_to(&diag_net, &[0.0], &[0.5, 0.1], &p50, tol)?;
    rows.push(row(
        "N^3 net equal to 1 on the diagonal converges to 0",
        "converges",
        verdict_str(&v),
        v.converges,
    ));

    let pu = TruncationPolicy::new(2000, 4000)?;
    let u1 = nets::uniqueness_check(&inv_n(), &[0.0], &[0.0], &DEFAULT_EPS, &pu, tol)?;
    let u2 = nets::uniqueness_check(&alternating(), &[1.0], &[-1.0], &[1.0], &pu, tol)?;
    rows.push(row(
        "statistical limits are unique",
        "1/n: 0 and 0 consistent; (-1)^n: 1 and -1 not applicable",
        format!("{} / {}", u1.applicable && u1.consistent, u2.applicable),
        u1.applicable && u1.consistent && !u2.applicable,
    ));

    // Pairs: on N^2 a strip {a ≤ 1/eps} has ratio about 1/(eps·m).
    let p500 = TruncationPolicy::new(250, 500)?;
    let pair = nets::pair_net(&inv_n(), &inv_n());
    let v = nets::stat_converges_to(&pair, &[0.0, 0.0], &[0.5, 0.2], &p500, tol)?;
    let (vx, vy) = nets::project_verdict(&pair, &v)?;
    let direct = nets::stat_converges_to(&inv_n(), &[0.0], &[0.5, 0.2], &p500, tol)?;
    let agree = vx.converges == direct.converges
        && vy.converges == direct.converges
        && vx.per_eps.iter().zip(&direct.per_eps).all(|((_, a), (_, b))| (a.upper_est - b.upper_est).abs() <= 1e-12);
    rows.push(row(
        "(1/n, 1/m) on N^2 converges to (0,0); components agree",
        "converges, projections equal direct verdicts",
        format!("{} / {agree}", verdict_str(&v)),
        v.converges && agree,
    ));

    let sq = nets::map_net(|t| vec![t[0] * t[0]], 1, &inv_n());
    let v = nets::stat_converges_to(&sq, &[0.0], &DEFAULT_EPS, &pn, tol)?;
    rows.push(row("continuous image t^2 of 1/n converges to 0", "converges", verdict_str(&v), v.converges));

    let sum = nets::add_nets(&inv_n(), &inv_n(), IndexMode::Product)?;
    let v = nets::stat_converges_to(&sum, &[0.0], &[0.5, 0.2], &p500, tol)?;
    rows.push(row("1/n + 1/m on N^2 converges to 0", "converges", verdict_str(&v), v.converges));

    let a = Net::scalar(DirectedSet::Naturals, |e| 2.0 + 1.0 / e.coords()[0] as f64);
    let y = Net::scalar(DirectedSet::Naturals, |e| 3.0 + 1.0 / e.coords()[0] as f64);
    let prod = nets::scale_nets(&Scalar::Net(a), &y, IndexMode::Shared)?;
    let v = nets::stat_converges_to(&prod, &[6.0], &DEFAULT_EPS, &TruncationPolicy::new(10_000, 20_000)?, tol)?;
    rows.push(row("(2 + 1/n)(3 + 1/n) converges to 6", "converges", verdict_str(&v), v.converges));

    // Cauchy.
    let c1 = nets::stat_cauchy(&inv_n(), 0.1, &pu, tol)?;
    let c2 = nets::stat_cauchy(&alternating(), 1.0, &pu, tol)?;
    rows.push(row(
        "1/n is statistically Cauchy, (-1)^n is not",
        "true / false",
        format!("{} / {}", c1.cauchy, c2.cauchy),
        c1.cauchy && !c2.cauchy,
    ));

    let mut all = true;
    let mut n_checked = 0;
    for s in seed..seed + 10 {
        let f = fixtures::stat_convergent(s);
        let r = nets::convergent_implies_cauchy(&f.net, &f.limit, 0.1, &f.policy, tol)?;
        all &= r.applicable && r.passed;
        n_checked += 1;
    }
    let r = nets::convergent_implies_cauchy(&inv_n(), &[0.0], 0.1, &pu, tol)?;
    all &= r.passed;
    rows.push(row(
        "statistically convergent nets are statistically Cauchy",
        format!("1/n and {n_checked} fixtures pass"),
        all.to_string(),
        all,
    ));

    let pw = nets::pairwise_cauchy_density(&inv_n(), &Element::single(10), 0.1, &p500)?;
    rows.push(row(
        "pairs (a,b) >= (10,10) with |1/a - 1/b| >= 0.1",
        "upper <= 0.05",
        format!("upper={}", d(pw.upper_est)),
        pw.upper_est <= 0.05,
    ));

    let pc = nets::cauchy_product_checks(&inv_n(), &inv_n(), IndexMode::Product, 0.5, &TruncationPolicy::new(60, 120)?, tol)?;
    let zc = nets::cauchy_product_checks(&inv_n(), &alternating(), IndexMode::Shared, 1.0, &pu, tol)?;
    rows.push(row(
        "Cauchy pairs: (1/n, 1/m) and zipped (1/n, (-1)^n)",
        "pair Cauchy; zip not Cauchy, 1/n Cauchy, (-1)^n not",
        format!("{} / {} {} {}", pc.combined.cauchy, zc.combined.cauchy, zc.x.cauchy, zc.y.cauchy),
        pc.combined.cauchy && pc.consistent && !zc.combined.cauchy && zc.x.cauchy && !zc.y.cauchy && zc.consistent,
    ));

    let uc = nets::uc_map_cauchy(|t| vec![2.0 * t[0]], 1, |e| e / 2.0, &inv_n(), 0.1, &pu, tol)?;
    rows.push(row("2t maps the Cauchy net 1/n to a Cauchy net", "passes", uc.passed.to_string(), uc.passed));

    // Gauge and classification.
    let ball = BalancedNeighborhood::new(1.0)?;
    let g0 = netspace::gauge(&Net::constant(DirectedSet::Naturals, vec![0.0]), &ball, &pu)?;
    let g2 = netspace::gauge(&Net::constant(DirectedSet::Naturals, vec![2.0]), &ball, &pu)?;
    rows.push(row(
        "gauge of the zero net and of the constant 2",
        "inf and 0.5",
        format!("{g0} and {g2}"),
        g0 == GaugeValue::Infinite && g2 == GaugeValue::Finite(0.5),
    ));

    let opts = ClassifyOptions::default();
    let ci = netspace::classify(&inv_n(), &pn, &opts)?;
    let ca = netspace::classify(&alternating(), &pn, &opts)?;
    rows.push(row(
        "classification of 1/n and (-1)^n",
        "1/n in M_0; (-1)^n in M but not M_cy",
        format!(
            "{}{}{}{} / {}{}",
            u8::from(ci.in_m),
            u8::from(ci.in_m_cy),
            u8::from(ci.in_m_ct),
            u8::from(ci.in_m_0),
            u8::from(ca.in_m),
            u8::from(ca.in_m_cy)
        ),
        ci.in_m_0 && ci.chain_holds() && ca.in_m && !ca.in_m_cy && ca.chain_holds(),
    ));

    golden.push(("paper_examples.csv".to_string(), csv_string(|b| write_rows_csv(&rows, b))?));
    Ok(PaperExamples { rows, notes, golden })
}

fn verdict_str(v: &nets::ConvergenceVerdict) -> String {
    let uppers: Vec<String> = v.per_eps.iter().map(|(e, r)| format!("{e}:{}", d(r.upper_est))).collect();
    format!("{} [{}]", v.converges, uppers.join(" "))
}

fn csv_string(f: impl FnOnce(&mut Vec<u8>) -> csv::Result<()>) -> crate::Result<String> {
    let mut buf = Vec::new();
    f(&mut buf).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}

pub fn write_rows_csv<W: Write>(rows: &[ExampleRow], w: W) -> csv::Result<()> {
    let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
    out.write_record(["example", "expected", "observed", "status"])?;
    for r in rows {
        out.write_record([&r.name, &r.expected, &r.observed, &r.status.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

fn run_paper_examples(a: &PaperArgs, out: &mut dyn Write) -> CliResult<i32> {
    let ex = paper_examples(a.seed)?;
    match a.format {
        Format::Csv => write_rows_csv(&ex.rows, &mut *out)?,
        Format::Text => {
            let width = ex.rows.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
            for r in &ex.rows {
                let pad = width - r.name.chars().count();
                writeln!(out, "{:<4} {}{}  {}", r.status, r.name, " ".repeat(pad), r.observed)?;
            }
            for n in &ex.notes {
                writeln!(out, "note: {n}")?;
            }
        }
    }
    if let Some(dir) = &a.out {
        write_golden(dir, &ex.golden)?;
    }
    Ok(if ex.all_passed() { EXIT_OK } else { EXIT_ASSERTION })
}

fn write_golden(dir: &Path, files: &[(String, String)]) -> CliResult<()> {
    fs::create_dir_all(dir)?;
    for (name, body) in files {
        fs::write(dir.join(name), body)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("netdensity").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn density_of_evens() {
        let (code, out, _) = run_args(&["density", "--family", "N", "--set", "n % 2 == 0", "--horizon", "10000"]);
        assert_eq!(code, 0);
        assert!(out.contains("exists: exists"), "{out}");
        let (code, _, _) = run_args(&[
            "density", "--family", "N", "--set", "n % 2 == 0", "--expect-density", "0.3", "--tol", "0.01",
        ]);
        assert_eq!(code, EXIT_ASSERTION);
    }

    #[test]
    fn diagonal_of_cube() {
        let (code, out, _) = run_args(&["density", "--family", "N^3", "--set", "x1==x2 && x2==x3", "--horizon", "50"]);
        assert_eq!(code, 0);
        let upper: f64 = out
            .lines()
            .find_map(|l| l.strip_prefix("upper_est: "))
            .unwrap()
            .parse()
            .unwrap();
        assert!(upper <= 0.02, "{upper}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["density", "--family", "N", "--set", "n +"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["density", "--family", "Q", "--set", "n > 1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["density", "--family", "N", "--set", "n"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        let (code, _, err) = run_args(&["liminf", "--family", "N", "--net", "1/(n-3)", "--horizon", "100"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("division by zero at 3"), "{err}");
        assert_eq!(
            run_args(&["density", "--family", "N^3", "--set", "x1 > 1", "--horizon", "1000"]).0,
            EXIT_RESOURCE
        );
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn other_subcommands() {
        let (code, out, _) = run_args(&["liminf", "--family", "N", "--net", "abs(pow(-1, n))/n", "--horizon", "1000"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("liminf_est: 0.00"));
        let (code, _, _) = run_args(&["converge", "--family", "N", "--net", "1/n", "--limit", "0"]);
        assert_eq!(code, 0);
        let (code, _, _) = run_args(&["converge", "--family", "N", "--net", "pow(-1, n)", "--limit", "1"]);
        assert_eq!(code, EXIT_ASSERTION);
        let (code, _, _) = run_args(&["converge", "--family", "N", "--net", "1/n", "--net", "2", "--limit", "0,2"]);
        assert_eq!(code, 0);
        let (code, _, _) = run_args(&["cauchy", "--family", "N", "--net", "1/n", "--horizon", "2000"]);
        assert_eq!(code, 0);
        let (code, _, _) = run_args(&["star", "--family", "div1", "--gamma", "3"]);
        assert_eq!(code, 0);
        let (code, out, _) = run_args(&["classify", "--family", "N", "--net", "pow(-1, n)", "--horizon", "2000"]);
        assert_eq!(code, 0);
        assert!(out.contains("in_m_cy: false"));
        let (code, out, _) = run_args(&["axioms", "--family", "prod(N,div)", "--horizon", "12", "--frontier", "3"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn csv_output_is_deterministic() {
        let args = ["density", "--family", "N^2", "--set", "x1 < x2", "--horizon", "40", "--format", "csv"];
        let (c1, a, _) = run_args(&args);
        let (c2, b, _) = run_args(&args);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
        assert!(a.starts_with("x1,x2,numerator,denominator,ratio\n"));
    }
}

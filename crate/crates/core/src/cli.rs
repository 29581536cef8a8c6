//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::Value;

use crate::errata::errata_ledger;
use crate::error::{Error, Result};
use crate::quadrature::IntegralSpec;
use crate::record::VerificationRecord;
use crate::series::{
    convergence_report, eval_phi_da, eval_phi_da_direct, eval_psi_general, EvalResult, Method, Regime, SeriesParams,
};
use crate::special::{hurwitz_zeta_with_bound, lerch_phi, s_prime};
use crate::triangle::CoeffTriangle;
use crate::verify::{run_suite, Suite, Summary};

#[derive(Parser, Debug)]
#[command(name = "ramseries", version, about = "Binomial-weighted series, their integrals and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Tolerance override (must be positive).
    #[arg(long, global = true, value_parser = positive)]
    pub tol: Option<f64>,

    /// Worker threads for verify and table [env: RAMSERIES_WORKERS; default 1].
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
}

/// Environment variable read when `--workers` is absent.
pub const WORKERS_ENV: &str = "RAMSERIES_WORKERS";

impl Cli {
    /// Worker count: the flag, else the environment, else 1.
    pub fn resolve_workers(&self) -> std::result::Result<u32, String> {
        if let Some(w) = self.workers {
            return Ok(w);
        }
        match std::env::var(WORKERS_ENV) {
            Ok(v) => match v.trim().parse::<u32>() {
                Ok(w) if w >= 1 => Ok(w),
                _ => Err(format!("{WORKERS_ENV}={v} must be a positive integer")),
            },
            Err(_) => Ok(1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Jsonl,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one series, special function or integral.
    Eval {
        #[arg(value_enum)]
        quantity: Quantity,
        #[command(flatten)]
        params: Params,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = |s: &str| s.parse::<Suite>(), default_value = "all")]
        suite: Suite,
    },
    /// Tabulate a series over parameter ranges (`x`, `lo:hi:step` or `lo..hi`).
    Table {
        #[arg(value_enum)]
        quantity: Quantity,
        #[command(flatten)]
        params: Params,
    },
    /// Print the coefficient triangle rows 1..=m as (m, k, A).
    Coeffs {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long)]
        m: usize,
    },
    /// Print the errata ledger with live evidence.
    Errata,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Phi,
    Phitilde,
    Psi,
    Phida,
    Zeta,
    Lerch,
    Sprime,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Part {
    Cos,
    Sin,
}

/// Parameter flags; each takes a number (eval) or a range (table).
#[derive(Args, Debug, Clone)]
pub struct Params {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Integral form for `eval integral`.
    #[arg(long, value_enum)]
    pub form: Option<Form>,
    /// cos or sin part for F11.
    #[arg(long, value_enum, default_value_t = Part::Cos)]
    pub part: Part,
}

fn positive(s: &str) -> std::result::Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("{s} is not a positive number"))
    }
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    /// The reader went away (e.g. `| head`).
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        if let csv::ErrorKind::Io(io) = e.kind() {
            if io.kind() == std::io::ErrorKind::BrokenPipe {
                return Failure::Closed;
            }
        }
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        if e.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe) {
            return Failure::Closed;
        }
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` and runs the command, writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let workers = match cli.resolve_workers() {
        Ok(w) => w,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let result = match &cli.command {
        Command::Eval { quantity, params } => cmd_eval(&cli, *quantity, params, out),
        Command::Verify { suite } => cmd_verify(&cli, *suite, workers, out, err),
        Command::Table { quantity, params } => cmd_table(&cli, *quantity, params, workers, out),
        Command::Coeffs { p, b, m } => cmd_coeffs(&cli, *p, *b, *m, out),
        Command::Errata => cmd_errata(&cli, out),
    };
    let _ = out.flush();
    match result {
        Ok(()) | Err(Failure::Closed) => 0,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

// ---------------------------------------------------------------- parameters

/// Values of a parameter flag: `x`, `lo:hi:step` (inclusive) or `lo..hi` (unit step).
pub fn parse_range(s: &str) -> std::result::Result<Vec<f64>, String> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("`{t}` is not a number"));
    let (lo, hi, step) = if let Some((lo, hi)) = s.split_once("..") {
        (num(lo)?, num(hi)?, 1.0)
    } else if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range `{s}` must be lo:hi:step"));
        }
        (num(parts[0])?, num(parts[1])?, num(parts[2])?)
    } else {
        let x = num(s)?;
        return Ok(vec![x]);
    };
    if !(step > 0.0) || !(hi >= lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(format!("range `{s}` needs lo ≤ hi and a positive step"));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err(format!("range `{s}` has too many points"));
    }
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}

/// Parameter names used by a quantity, in column order.
fn param_names(q: Quantity, params: &Params) -> Vec<&'static str> {
    match q {
        Quantity::Phi | Quantity::Phitilde => {
            if params.n.is_some() && params.alpha.is_none() {
                vec!["a", "b", "n"]
            } else {
                vec!["a", "b", "alpha"]
            }
        }
        Quantity::Psi => vec!["a", "b", "beta", "alpha"],
        Quantity::Phida => {
            if params.alpha.is_some() && params.n.is_none() {
                vec!["a", "b", "alpha"]
            } else {
                vec!["a", "b", "n"]
            }
        }
        Quantity::Zeta => vec!["s", "q"],
        Quantity::Lerch => vec!["beta", "s", "b"],
        Quantity::Sprime => vec!["r"],
        Quantity::Integral => match params.form {
            Some(Form::F1 | Form::F5) => vec!["a", "b", "alpha"],
            Some(Form::F2 | Form::F3 | Form::F4) => vec!["a", "b", "n"],
            Some(Form::F6) => vec!["a", "b", "beta", "alpha"],
            Some(Form::F7 | Form::F8 | Form::F11) => vec!["a", "w", "alpha"],
            Some(Form::F9 | Form::F10) => vec!["a", "v", "alpha"],
            Some(Form::F12) => vec!["b", "beta", "m"],
            None => vec![],
        },
    }
}

fn raw_param<'a>(params: &'a Params, name: &str) -> Option<&'a str> {
    let v = match name {
        "a" => &params.a,
        "b" => &params.b,
        "beta" => &params.beta,
        "alpha" => &params.alpha,
        "n" => &params.n,
        "m" => &params.m,
        "s" => &params.s,
        "q" => &params.q,
        "r" => &params.r,
        "w" => &params.w,
        "v" => &params.v,
        "p" => &params.p,
        "mu" => &params.mu,
        _ => return None,
    };
    v.as_deref()
}

fn param_grid(q: Quantity, params: &Params) -> std::result::Result<(Vec<&'static str>, Vec<Vec<f64>>), Failure> {
    if q == Quantity::Integral && params.form.is_none() {
        return Err(Failure::Usage("`integral` needs --form F1..F12".into()));
    }
    let names = param_names(q, params);
    let mut axes = Vec::with_capacity(names.len());
    for &name in &names {
        let raw = raw_param(params, name).ok_or_else(|| Failure::Usage(format!("missing --{name}")))?;
        axes.push(parse_range(raw).map_err(|e| Failure::Usage(format!("--{name}: {e}")))?);
    }
    Ok((names, axes))
}

/// Cartesian product in lexicographic order of the given axes.
fn cartesian(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut rows = vec![Vec::new()];
    for axis in axes {
        let mut sorted = axis.clone();
        sorted.sort_by(|x, y| x.total_cmp(y));
        sorted.dedup();
        rows = rows
            .into_iter()
            .flat_map(|row| {
                sorted.iter().map(move |&x| {
                    let mut r = row.clone();
                    r.push(x);
                    r
                })
            })
            .collect();
    }
    rows
}

fn as_count(x: f64, name: &str) -> Result<u32> {
    if x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
        Ok(x as u32)
    } else {
        Err(Error::domain("cli", format!("{name} = {x} must be a non-negative integer")))
    }
}

fn integral_spec(form: Form, part: Part, v: &[f64]) -> Result<IntegralSpec> {
    Ok(match form {
        Form::F1 => IntegralSpec::F1 {
            a: v[0],
            b: v[1],
            alpha: v[2],
        },
        Form::F2 => IntegralSpec::F2 {
            a: v[0],
            b: v[1],
            n: as_count(v[2], "n")?,
        },
        Form::F3 => IntegralSpec::F3 {
            a: v[0],
            b: v[1],
            n: as_count(v[2], "n")?,
        },
        Form::F4 => IntegralSpec::F4 {
            a: v[0],
            b: v[1],
            n: as_count(v[2], "n")?,
        },
        Form::F5 => IntegralSpec::F5 {
            a: v[0],
            b: v[1],
            alpha: v[2],
        },
        Form::F6 => IntegralSpec::F6 {
            a: v[0],
            b: v[1],
            beta: v[2],
            alpha: v[3],
        },
        Form::F7 => IntegralSpec::F7 {
            a: as_count(v[0], "a")?,
            w: v[1],
            alpha: v[2],
        },
        Form::F8 => IntegralSpec::F8 {
            a: as_count(v[0], "a")?,
            w: v[1],
            alpha: v[2],
        },
        Form::F9 => IntegralSpec::F9 {
            a: as_count(v[0], "a")?,
            v: v[1],
            alpha: v[2],
        },
        Form::F10 => IntegralSpec::F10 {
            a: as_count(v[0], "a")?,
            v: v[1],
            alpha: v[2],
        },
        Form::F11 => IntegralSpec::F11 {
            a: as_count(v[0], "a")?,
            w: v[1],
            alpha: v[2],
            sine: part == Part::Sin,
        },
        Form::F12 => IntegralSpec::F12 {
            b: v[0],
            beta: v[1],
            m: as_count(v[2], "m")?,
        },
    })
}

/// Convergence regime where one is defined, for the divergent-row status.
fn regime(q: Quantity, v: &[f64]) -> Option<Regime> {
    let p = match q {
        Quantity::Phi => SeriesParams::phi(v[0], v[1], v[2]),
        Quantity::Phitilde => SeriesParams::phi_tilde(v[0], v[1], v[2]),
        Quantity::Psi => SeriesParams::new(v[0], v[1], v[2], v[3]),
        _ => return None,
    };
    Some(convergence_report(p))
}

fn evaluate(q: Quantity, names: &[&str], v: &[f64], params: &Params) -> Result<EvalResult> {
    match q {
        Quantity::Phi => eval_psi_general(SeriesParams::phi(v[0], v[1], v[2])),
        Quantity::Phitilde => eval_psi_general(SeriesParams::phi_tilde(v[0], v[1], v[2])),
        Quantity::Psi => eval_psi_general(SeriesParams::new(v[0], v[1], v[2], v[3])),
        Quantity::Phida => {
            if names[2] == "n" {
                eval_phi_da_direct(v[0], v[1], as_count(v[2], "n")?)
            } else {
                eval_phi_da(v[0], v[1], v[2])
            }
        }
        Quantity::Zeta => {
            let (z, bound) = hurwitz_zeta_with_bound(v[0], v[1])?;
            Ok(EvalResult::new(z, bound, 0, Method::ClosedForm))
        }
        Quantity::Lerch => {
            let x = lerch_phi(v[0], v[1], v[2])?;
            Ok(EvalResult::new(x, 1e-14 * x.abs().max(1.0), 0, Method::Direct))
        }
        Quantity::Sprime => {
            let x = s_prime(as_count(v[0], "r")?)?;
            Ok(EvalResult::new(x, 4.0 * f64::EPSILON * x.abs(), 0, Method::ClosedForm))
        }
        Quantity::Integral => {
            let form = params.form.expect("checked by param_grid");
            integral_spec(form, params.part, v)?.oracle_value()
        }
    }
}

// ---------------------------------------------------------------- output

/// JSON object with keys in insertion order.
struct Ordered(Vec<(String, Value)>);

impl Serialize for Ordered {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Writes rows of (key, value) pairs sharing one header.
fn write_rows(format: Format, header: &[String], rows: &[Vec<Value>], out: &mut dyn Write) -> CmdResult {
    match format {
        Format::Jsonl => {
            for row in rows {
                let obj = Ordered(header.iter().cloned().zip(row.iter().cloned()).collect());
                writeln!(out, "{}", serde_json::to_string(&obj)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header)?;
            for row in rows {
                w.write_record(row.iter().map(cell))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            out.write_all(&bytes)?;
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(cell).collect()).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].chars().count())
                        .chain([header[i].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |items: &[String]| {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(header))?;
            for r in &cells {
                writeln!(out, "{}", line(r))?;
            }
        }
    }
    Ok(())
}

fn result_columns(r: &EvalResult) -> Vec<Value> {
    vec![
        num(r.value),
        num(r.abs_error_bound),
        Value::String(r.method.as_str().into()),
        Value::from(r.terms_used),
    ]
}

// ---------------------------------------------------------------- commands

fn cmd_eval(cli: &Cli, q: Quantity, params: &Params, out: &mut dyn Write) -> CmdResult {
    let (names, axes) = param_grid(q, params)?;
    if axes.iter().any(|a| a.len() != 1) {
        return Err(Failure::Usage("eval takes single values; use `table` for ranges".into()));
    }
    let v: Vec<f64> = axes.iter().map(|a| a[0]).collect();
    let r = evaluate(q, &names, &v, params)?;
    match cli.format {
        Format::Text => {
            let args: Vec<String> = names.iter().zip(&v).map(|(n, x)| format!("{n}={x}")).collect();
            writeln!(out, "{:?} {}", q, args.join(" "))?;
            writeln!(out, "value        {}", r.value)?;
            writeln!(out, "error bound  {:e}", r.abs_error_bound)?;
            if let Some(e) = r.est_error {
                writeln!(out, "estimate     {e:e}")?;
            }
            writeln!(out, "method       {}", r.method)?;
            writeln!(out, "terms        {}", r.terms_used)?;
        }
        format => {
            let mut header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
            header.extend(["value", "error_bound", "method", "terms"].map(String::from));
            let mut row: Vec<Value> = v.iter().map(|&x| num(x)).collect();
            row.extend(result_columns(&r));
            write_rows(format, &header, &[row], out)?;
        }
    }
    if let Some(tol) = cli.tol {
        if !(r.abs_error_bound <= tol) {
            return Err(Failure::Verification(format!(
                "error bound {:e} exceeds tolerance {tol:e}",
                r.abs_error_bound
            )));
        }
    }
    Ok(())
}

fn in_pool<T: Send>(workers: u32, f: impl FnOnce() -> T + Send) -> std::result::Result<T, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers as usize)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(pool.install(f))
}

fn cmd_table(cli: &Cli, q: Quantity, params: &Params, workers: u32, out: &mut dyn Write) -> CmdResult {
    let (names, axes) = param_grid(q, params)?;
    let grid = cartesian(&axes);
    let tol = cli.tol;
    let row_of = |v: &Vec<f64>| -> Vec<Value> {
        let mut row: Vec<Value> = v.iter().map(|&x| num(x)).collect();
        let status = if matches!(regime(q, v), Some(Regime::Divergent)) {
            Err("divergent".to_string())
        } else {
            evaluate(q, &names, v, params).map_err(|e| match e {
                Error::Divergent(_) => "divergent".to_string(),
                _ => "error".to_string(),
            })
        };
        match status {
            Ok(r) => {
                let inexact = tol.is_some_and(|t| !(r.abs_error_bound <= t));
                row.extend(result_columns(&r));
                row.push(Value::String(if inexact { "inexact" } else { "ok" }.into()));
            }
            Err(s) => {
                row.extend([Value::Null, Value::Null, Value::Null, Value::Null]);
                row.push(Value::String(s));
            }
        }
        row
    };
    let rows: Vec<Vec<Value>> = if workers == 1 {
        grid.iter().map(row_of).collect()
    } else {
        in_pool(workers, || grid.par_iter().map(row_of).collect())?
    };
    let mut header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    header.extend(["value", "error_bound", "method", "terms", "status"].map(String::from));
    write_rows(cli.format, &header, &rows, out)
}

fn record_line(r: &VerificationRecord) -> String {
    let mut s = format!(
        "{} {}  lhs={} rhs={} residual={:e} tol={:e}",
        if r.passed() { "PASS" } else { "FAIL" },
        r.id,
        r.lhs,
        r.rhs,
        r.residual,
        r.tol
    );
    if !r.passed() {
        if let Some(n) = &r.note {
            s.push_str(&format!("  ({n})"));
        }
    }
    s
}

fn cmd_verify(cli: &Cli, suite: Suite, workers: u32, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut records = run_suite(suite, workers as usize)?;
    if let Some(tol) = cli.tol {
        records = records.into_iter().map(|r| r.with_tol(tol)).collect();
    }
    let summary = Summary::of(&records);
    match cli.format {
        Format::Text => {
            for r in &records {
                writeln!(out, "{}", record_line(r))?;
            }
            writeln!(
                out,
                "summary: suite={suite} total={} passed={} failed={}",
                summary.total, summary.passed, summary.failed
            )?;
        }
        Format::Jsonl => {
            for r in &records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
            #[derive(Serialize)]
            struct Line<'a> {
                summary: &'a Summary,
                suite: Suite,
            }
            writeln!(
                out,
                "{}",
                serde_json::to_string(&Line {
                    summary: &summary,
                    suite
                })?
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &records {
                w.serialize(r)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            out.write_all(&bytes)?;
            writeln!(
                err,
                "summary: suite={suite} total={} passed={} failed={}",
                summary.total, summary.passed, summary.failed
            )?;
        }
    }
    if summary.total == 0 {
        return Err(Failure::Verification(format!("suite {suite} produced no records")));
    }
    if summary.failed > 0 {
        return Err(Failure::Verification(format!(
            "{} of {} records failed",
            summary.failed, summary.total
        )));
    }
    Ok(())
}

fn cmd_coeffs(cli: &Cli, p: f64, b: f64, m: usize, out: &mut dyn Write) -> CmdResult {
    let tri = CoeffTriangle::build(p, b, m)?;
    let header = ["m", "k", "A"].map(String::from);
    let mut rows = Vec::new();
    for row in 1..=m {
        for (k, &a) in tri.row(row).iter().enumerate() {
            rows.push(vec![Value::from(row as u64), Value::from(k as u64 + 1), num(a)]);
        }
    }
    write_rows(cli.format, &header, &rows, out)
}

fn cmd_errata(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let ledger = errata_ledger()?;
    match cli.format {
        Format::Text => {
            for e in &ledger {
                writeln!(out, "{}", e.key)?;
                writeln!(out, "  printed:   {}", e.printed)?;
                writeln!(out, "  corrected: {}", e.corrected)?;
                for c in &e.checks {
                    writeln!(
                        out,
                        "  {}: printed {} | corrected {} | {} {} | tol {:e} | {}",
                        c.point,
                        c.printed,
                        c.corrected,
                        c.reference_kind,
                        c.reference,
                        c.tol,
                        if c.printed_fails() && c.corrected_holds() {
                            "reproduces"
                        } else {
                            "does not reproduce"
                        }
                    )?;
                }
            }
        }
        format => {
            let header: Vec<String> = [
                "key",
                "point",
                "printed",
                "corrected",
                "reference",
                "reference_kind",
                "tol",
                "reproduces",
            ]
            .map(String::from)
            .to_vec();
            let mut rows = Vec::new();
            for e in &ledger {
                for c in &e.checks {
                    rows.push(vec![
                        Value::String(e.key.into()),
                        Value::String(c.point.clone()),
                        num(c.printed),
                        num(c.corrected),
                        num(c.reference),
                        Value::String(c.reference_kind.into()),
                        num(c.tol),
                        Value::Bool(c.printed_fails() && c.corrected_holds()),
                    ]);
                }
            }
            write_rows(format, &header, &rows, out)?;
        }
    }
    Ok(())
}

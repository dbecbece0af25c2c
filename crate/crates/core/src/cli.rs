//! Record formatting, parameter sweeps and argument parsing for `hermell`.
//!
//! Every evaluation produces an [`OutputRecord`]. Records are written as
//! JSON lines or as CSV with a header row; both carry the same fields and
//! print floating-point numbers with 17 significant digits.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;

use crate::integrals::{self, IntegralKind, IntegralSpec};
use crate::{EvalOptions, EvalReport, MethodChoice, Result, DEFAULT_TOL};

/// Environment variable overriding the default `--tol`.
pub const TOL_ENV: &str = "HERMELL_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ForceMethod {
    Auto,
    Series,
    Quadrature,
}

impl From<ForceMethod> for MethodChoice {
    fn from(f: ForceMethod) -> Self {
        match f {
            ForceMethod::Auto => MethodChoice::Auto,
            ForceMethod::Series => MethodChoice::Series,
            ForceMethod::Quadrature => MethodChoice::Quadrature,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hermell",
    version,
    about = "Elliptic-type integrals via generalized Hermite and Gamma functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one integral.
    Eval(CommonArgs),
    /// Evaluate by series or closed form and by quadrature, and report the difference.
    Compare(CommonArgs),
    /// Sweep a Cartesian grid of parameters. Ranges are `lo:hi:count` or `v1,v2,...`.
    Table(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: IntegralKind,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Upper limit of the incomplete integral.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, env = TOL_ENV, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = crate::series::DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = ForceMethod::Auto)]
    pub force_method: ForceMethod,
}

fn parse_kind(s: &str) -> std::result::Result<IntegralKind, String> {
    IntegralKind::from_name(s).ok_or_else(|| {
        let names: Vec<_> = IntegralKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown kind `{s}`, expected one of {}", names.join(", "))
    })
}

/// Parses a parameter value: a number, `lo:hi:count` with inclusive
/// endpoints, or a comma-separated list.
pub fn parse_values(s: &str) -> std::result::Result<Vec<f64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("bad number `{t}`: {e}"))
    };
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [lo, hi, count] => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            let count: usize = count
                .trim()
                .parse()
                .map_err(|e| format!("bad count `{count}`: {e}"))?;
            match count {
                0 => Err(format!("range `{s}` has zero points")),
                1 => Ok(vec![lo]),
                _ => Ok((0..count)
                    .map(|i| {
                        if i == count - 1 {
                            hi
                        } else {
                            lo + (hi - lo) * i as f64 / (count - 1) as f64
                        }
                    })
                    .collect()),
            }
        }
        [single] => single.split(',').map(num).collect(),
        _ => Err(format!(
            "expected a number, `lo:hi:count` or a comma list, got `{s}`"
        )),
    }
}

/// Parameter grid: one list of values per field, in the order
/// `a, b, a1, a2, a3, nu, m, x`.
#[derive(Debug, Clone, PartialEq)]
pub struct TableTemplate {
    pub kind: IntegralKind,
    pub axes: [Vec<f64>; 8],
}

impl TableTemplate {
    pub fn single(spec: &IntegralSpec) -> Self {
        TableTemplate {
            kind: spec.kind,
            axes: spec_fields(spec).map(|v| vec![v]),
        }
    }

    pub fn from_args(args: &CommonArgs) -> std::result::Result<Self, String> {
        let defaults = spec_fields(&IntegralSpec::new(args.kind));
        let given = [
            &args.a, &args.b, &args.a1, &args.a2, &args.a3, &args.nu, &args.m, &args.x,
        ];
        let mut axes: [Vec<f64>; 8] = Default::default();
        for (i, (g, d)) in given.iter().zip(defaults).enumerate() {
            axes[i] = match g {
                Some(s) => parse_values(s).map_err(|e| format!("--{}: {e}", FIELD_NAMES[i]))?,
                None => vec![d],
            };
        }
        Ok(TableTemplate {
            kind: args.kind,
            axes,
        })
    }

    /// Grid points in lexicographic order, the first field varying slowest.
    pub fn specs(&self) -> Vec<IntegralSpec> {
        let mut out = vec![IntegralSpec::new(self.kind)];
        for (i, axis) in self.axes.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|s| {
                    axis.iter().map(move |&v| {
                        let mut f = spec_fields(&s);
                        f[i] = v;
                        spec_from_fields(s.kind, f)
                    })
                })
                .collect();
        }
        out
    }
}

const FIELD_NAMES: [&str; 8] = ["a", "b", "a1", "a2", "a3", "nu", "m", "x"];

fn spec_fields(s: &IntegralSpec) -> [f64; 8] {
    [s.a, s.b, s.a1, s.a2, s.a3, s.nu, s.m, s.upper]
}

fn spec_from_fields(kind: IntegralKind, f: [f64; 8]) -> IntegralSpec {
    IntegralSpec {
        kind,
        a: f[0],
        b: f[1],
        a1: f[2],
        a2: f[3],
        a3: f[4],
        nu: f[5],
        m: f[6],
        upper: f[7],
    }
}

/// One line of output.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct OutputRecord {
    /// `eval`, `series`, `quadrature`, `difference`, `row` or `error`.
    pub record: String,
    pub kind: String,
    pub a: f64,
    pub b: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub nu: f64,
    pub m: f64,
    pub x: f64,
    pub tol: f64,
    pub value: Option<f64>,
    pub abs_err_est: Option<f64>,
    pub method: Option<String>,
    pub terms_used: Option<usize>,
    pub converged: bool,
    pub warnings: Vec<String>,
    pub abs_diff: Option<f64>,
    pub rel_diff: Option<f64>,
    pub error: Option<String>,
    pub wall_time_us: u64,
}

pub const CSV_HEADER: &str =
    "record,kind,a,b,a1,a2,a3,nu,m,x,tol,value,abs_err_est,method,terms_used,\
converged,warnings,abs_diff,rel_diff,error,wall_time_us";

fn fmt_num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl OutputRecord {
    fn blank(record: &str, spec: &IntegralSpec, tol: f64) -> Self {
        OutputRecord {
            record: record.to_string(),
            kind: spec.kind.name().to_string(),
            a: spec.a,
            b: spec.b,
            a1: spec.a1,
            a2: spec.a2,
            a3: spec.a3,
            nu: spec.nu,
            m: spec.m,
            x: spec.upper,
            tol,
            value: None,
            abs_err_est: None,
            method: None,
            terms_used: None,
            converged: false,
            warnings: Vec::new(),
            abs_diff: None,
            rel_diff: None,
            error: None,
            wall_time_us: 0,
        }
    }

    fn from_result(
        record: &str,
        spec: &IntegralSpec,
        tol: f64,
        res: &Result<EvalReport>,
        micros: u64,
    ) -> Self {
        let mut r = Self::blank(record, spec, tol);
        r.wall_time_us = micros;
        match res {
            Ok(rep) => {
                r.value = Some(rep.value);
                r.abs_err_est = Some(rep.abs_err_est);
                r.method = Some(rep.method.as_str().to_string());
                r.terms_used = Some(rep.terms_used);
                r.converged = rep.converged;
                r.warnings = rep.warnings.clone();
            }
            Err(e) => {
                r.record = "error".to_string();
                r.error = Some(e.to_string());
            }
        }
        r
    }

    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }

    /// Copy with the timing field zeroed, for run-to-run comparisons.
    pub fn without_timing(&self) -> Self {
        OutputRecord {
            wall_time_us: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let opt_num = |v: Option<f64>| v.map_or_else(|| "null".to_string(), fmt_num);
        let opt_str =
            |v: &Option<String>| v.as_deref().map_or_else(|| "null".to_string(), json_str);
        let warnings: Vec<String> = self.warnings.iter().map(|w| json_str(w)).collect();
        format!(
            "{{\"record\":{},\"kind\":{},\"a\":{},\"b\":{},\"a1\":{},\"a2\":{},\"a3\":{},\"nu\":{},\"m\":{},\"x\":{},\
\"tol\":{},\"value\":{},\"abs_err_est\":{},\"method\":{},\"terms_used\":{},\"converged\":{},\"warnings\":[{}],\
\"abs_diff\":{},\"rel_diff\":{},\"error\":{},\"wall_time_us\":{}}}",
            json_str(&self.record),
            json_str(&self.kind),
            fmt_num(self.a),
            fmt_num(self.b),
            fmt_num(self.a1),
            fmt_num(self.a2),
            fmt_num(self.a3),
            fmt_num(self.nu),
            fmt_num(self.m),
            fmt_num(self.x),
            fmt_num(self.tol),
            opt_num(self.value),
            opt_num(self.abs_err_est),
            opt_str(&self.method),
            self.terms_used.map_or_else(|| "null".to_string(), |t| t.to_string()),
            self.converged,
            warnings.join(","),
            opt_num(self.abs_diff),
            opt_num(self.rel_diff),
            opt_str(&self.error),
            self.wall_time_us,
        )
    }

    pub fn from_json(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }

    pub fn to_csv(&self) -> String {
        let opt_num = |v: Option<f64>| v.map_or_else(String::new, fmt_num);
        let fields = [
            csv_field(&self.record),
            csv_field(&self.kind),
            fmt_num(self.a),
            fmt_num(self.b),
            fmt_num(self.a1),
            fmt_num(self.a2),
            fmt_num(self.a3),
            fmt_num(self.nu),
            fmt_num(self.m),
            fmt_num(self.x),
            fmt_num(self.tol),
            opt_num(self.value),
            opt_num(self.abs_err_est),
            self.method.clone().unwrap_or_default(),
            self.terms_used.map(|t| t.to_string()).unwrap_or_default(),
            self.converged.to_string(),
            csv_field(&self.warnings.join("; ")),
            opt_num(self.abs_diff),
            opt_num(self.rel_diff),
            csv_field(self.error.as_deref().unwrap_or("")),
            self.wall_time_us.to_string(),
        ];
        fields.join(",")
    }
}

/// Primary route, except that a forced quadrature also applies to the
/// closed-form kinds.
fn primary(spec: &IntegralSpec, opts: &EvalOptions) -> Result<EvalReport> {
    let closed = matches!(
        spec.kind,
        IntegralKind::FullLineQuadratic
            | IntegralKind::FullLineQuadraticLinear
            | IntegralKind::HalfLineMonomial
    );
    if closed && opts.method == MethodChoice::Quadrature {
        integrals::quadrature(spec, opts.tol)
    } else {
        integrals::evaluate(spec, opts)
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_micros() as u64)
}

pub fn cmd_eval(spec: &IntegralSpec, opts: &EvalOptions) -> Vec<OutputRecord> {
    let (res, us) = timed(|| primary(spec, opts));
    vec![OutputRecord::from_result("eval", spec, opts.tol, &res, us)]
}

/// Series or closed-form record, quadrature record, and a difference record
/// whose `converged` says whether the relative difference is within `tol`.
pub fn cmd_compare(spec: &IntegralSpec, opts: &EvalOptions) -> Vec<OutputRecord> {
    let (first, us1) = timed(|| integrals::evaluate(spec, opts));
    let (second, us2) = timed(|| integrals::quadrature(spec, opts.tol));
    let mut out = vec![
        OutputRecord::from_result("series", spec, opts.tol, &first, us1),
        OutputRecord::from_result("quadrature", spec, opts.tol, &second, us2),
    ];
    if let (Ok(s), Ok(q)) = (&first, &second) {
        let mut d = OutputRecord::blank("difference", spec, opts.tol);
        let abs = (s.value - q.value).abs();
        let rel = if q.value != 0.0 {
            abs / q.value.abs()
        } else {
            abs
        };
        d.abs_diff = Some(abs);
        d.rel_diff = Some(rel);
        d.converged = rel <= opts.tol;
        if !d.converged {
            d.warnings.push(format!(
                "relative difference {rel:e} exceeds tolerance {:e}",
                opts.tol
            ));
        }
        out.push(d);
    }
    out
}

/// One record per grid point, in grid order; points are evaluated in parallel.
pub fn cmd_table(template: &TableTemplate, opts: &EvalOptions) -> Vec<OutputRecord> {
    template
        .specs()
        .par_iter()
        .map(|spec| {
            let (res, us) = timed(|| primary(spec, opts));
            OutputRecord::from_result("row", spec, opts.tol, &res, us)
        })
        .collect()
}

pub fn render(
    records: &[OutputRecord],
    format: Format,
    out: &mut impl Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(out, "{}", r.to_csv())?;
            }
        }
    }
    Ok(())
}

/// Runs the command line and returns the process exit code: 0 iff every
/// record converged and none is an error.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let (command, args) = match &cli.command {
        Command::Eval(a) => ("eval", a),
        Command::Compare(a) => ("compare", a),
        Command::Table(a) => ("table", a),
    };
    let opts = EvalOptions {
        tol: args.tol,
        max_terms: args.max_terms,
        method: args.force_method.into(),
        ..EvalOptions::default()
    };
    let template = match TableTemplate::from_args(args) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "{{\"record\":\"error\",\"error\":{}}}", json_str(&e));
            return 2;
        }
    };
    let records = if command == "table" {
        cmd_table(&template, &opts)
    } else {
        let specs = template.specs();
        if specs.len() != 1 {
            let msg = format!("{command} takes single parameter values; use `table` for ranges");
            let _ = writeln!(err, "{{\"record\":\"error\",\"error\":{}}}", json_str(&msg));
            return 2;
        }
        if command == "eval" {
            cmd_eval(&specs[0], &opts)
        } else {
            cmd_compare(&specs[0], &opts)
        }
    };

    // errors also go to stderr; table keeps error rows in its stream so the grid stays complete
    let errors: Vec<OutputRecord> = records.iter().filter(|r| r.is_error()).cloned().collect();
    let shown: Vec<OutputRecord> = if command == "table" {
        records.clone()
    } else {
        records.iter().filter(|r| !r.is_error()).cloned().collect()
    };
    if render(&shown, args.format, out).is_err() || render(&errors, Format::Json, err).is_err() {
        return 1;
    }
    let ok = records.iter().all(|r| r.converged && !r.is_error());
    if ok {
        0
    } else {
        1
    }
}

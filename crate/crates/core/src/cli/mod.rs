//! Command-line front end. [`run`] returns the text to print and an exit
//! code so the binary stays a thin wrapper.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::error::Error;
use crate::excited::{excited_diagrams, naruse_count};
use crate::formulas::{
    f_rho, fixed_diag_rhs, g_v_hook, s_m_bounded, s_m_factored, s_m_gf, trace_gf_formula, TheoremId,
};
use crate::oracle::{count_syt, gf_bounded, gf_fixed_diag, gf_tableaux, gf_trace, TableauKind};
use crate::shapes::{build_m, build_rho, build_v, Partition, RowIntervals, Shape, ShiftedSkewShape, SkewShape};
use crate::verify::{parse_range, report, run_sweep, Status, Summary, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "tableau-forge",
    version,
    about = "Count tableaux, expand generating functions and verify product formulas"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of standard Young tableaux.
    Count {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Comma-separated engines: oracle, naruse, formula. All must agree.
        #[arg(long, default_value = "oracle")]
        method: String,
    },
    /// Generating function `Σ q^{|T|}` of fillings.
    Gf {
        #[command(flatten)]
        shape: ShapeArgs,
        /// ssyt, rpp or rst.
        #[arg(long, default_value = "ssyt")]
        kind: String,
        /// Truncation order.
        #[arg(long, default_value_t = 8)]
        trunc: i64,
        /// Entries at most this value; prints the full polynomial.
        #[arg(long, visible_alias = "max-entry")]
        bounded: Option<u64>,
        /// Bivariate series in `x^{tr(T)} q^{|T|}` (M-shapes only).
        #[arg(long)]
        trace: bool,
        /// Reverse diagonal of a filling of `(δ_{n+1}+λ)*`; needs --staircase.
        #[arg(long)]
        fixed_diag: Option<String>,
        /// `n` for --fixed-diag.
        #[arg(long)]
        staircase: Option<usize>,
        /// `λ` for --fixed-diag.
        #[arg(long, default_value = "")]
        lam: String,
        /// Comma-separated engines: formula, oracle. All must agree.
        #[arg(long, default_value = "oracle")]
        engine: String,
    },
    /// Compare a formula against the oracle over a parameter grid.
    Verify(VerifyArgs),
    /// Excited diagrams of a skew shape.
    Excited {
        #[arg(long)]
        skew: String,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Debug, Default)]
pub struct ShapeArgs {
    /// Skew shape `outer/inner`, e.g. `4,2/1`.
    #[arg(long, group = "shape_src")]
    pub skew: Option<String>,
    /// Shifted skew shape `outer/inner` with strict parts.
    #[arg(long, group = "shape_src")]
    pub shifted: Option<String>,
    /// Named family: rho (n,a,b,c,d), v (n,a,b,m) or m (n,a,b,c,d,m).
    #[arg(long, group = "shape_src", requires = "params")]
    pub family: Option<String>,
    #[arg(long)]
    pub params: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Theorem id, e.g. thm3.1; optional when --config names one.
    pub theorem: Option<String>,
    /// Config file of `key = value` lines.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Parameter range `name=lo..hi` or `name=v`; repeatable.
    #[arg(long = "range", value_name = "NAME=RANGE")]
    pub ranges: Vec<String>,
    #[arg(long)]
    pub trunc: Option<i64>,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Report path (JSON Lines).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Record wall-clock time per tuple (makes reports run-dependent).
    #[arg(long)]
    pub timings: bool,
}

/// Text for stdout, text for stderr and the exit code.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(s: impl Into<String>) -> Self {
        Outcome { stdout: s.into(), stderr: String::new(), code: EXIT_OK }
    }

    fn err(e: &Error) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}"), code: exit_code(e) }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidParameters(_) | Error::DimensionMismatch { .. } => EXIT_USAGE,
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Mismatch(_) => EXIT_MISMATCH,
        _ => EXIT_FAIL,
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Count { shape, method } => cmd_count(&shape, &method),
        Command::Gf { shape, kind, trunc, bounded, trace, fixed_diag, staircase, lam, engine } => {
            let opts = GfOptions { trunc, bounded, trace, fixed_diag, staircase, lam };
            cmd_gf(&shape, &kind, &opts, &engine)
        }
        Command::Verify(args) => return cmd_verify(&args),
        Command::Excited { skew, count: _, list } => cmd_excited(&skew, list),
    };
    match result {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::err(&e),
    }
}

enum Family {
    Rho([u32; 5]),
    V([u32; 4]),
    M([u32; 6]),
}

fn parse_params<const N: usize>(s: &str) -> Result<[u32; N], Error> {
    let v: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad parameter {t:?}"))))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<u32>| Error::Parse(format!("expected {N} parameters, got {}", v.len())))
}

fn family(args: &ShapeArgs) -> Result<Option<Family>, Error> {
    let Some(name) = &args.family else { return Ok(None) };
    let params = args.params.as_deref().unwrap_or("");
    Ok(Some(match name.as_str() {
        "rho" => Family::Rho(parse_params(params)?),
        "v" => Family::V(parse_params(params)?),
        "m" => Family::M(parse_params(params)?),
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    }))
}

fn shape_of(args: &ShapeArgs) -> Result<Shape, Error> {
    if let Some(s) = &args.skew {
        return Ok(s.parse::<SkewShape>()?.into());
    }
    if let Some(s) = &args.shifted {
        return Ok(s.parse::<ShiftedSkewShape>()?.into());
    }
    match family(args)? {
        Some(Family::Rho([n, a, b, c, d])) => Ok(build_rho(n, a, b, c, d)?.into()),
        Some(Family::V([n, a, b, m])) => Ok(build_v(n, a, b, m)?.into()),
        Some(Family::M([n, a, b, c, d, m])) => Ok(build_m(n, a, b, c, d, m)?.into()),
        None => Err(Error::Parse("give --skew, --shifted or --family".into())),
    }
}

fn engines(s: &str, allowed: &[&str]) -> Result<Vec<String>, Error> {
    let list: Vec<String> = s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect();
    if list.is_empty() {
        return Err(Error::Parse("no engine given".into()));
    }
    for e in &list {
        if !allowed.contains(&e.as_str()) {
            return Err(Error::Parse(format!("unknown engine {e:?}; expected one of {}", allowed.join(", "))));
        }
    }
    Ok(list)
}

/// Runs every engine and insists on a single answer.
fn agree<T: PartialEq + ToString>(results: Vec<(String, T)>) -> Result<String, Error> {
    let (first_name, first) = &results[0];
    for (name, v) in &results[1..] {
        if v != first {
            return Err(Error::Mismatch(format!(
                "{first_name} gives {}, {name} gives {}",
                first.to_string(),
                v.to_string()
            )));
        }
    }
    Ok(first.to_string())
}

fn cmd_count(args: &ShapeArgs, method: &str) -> Result<String, Error> {
    let shape = shape_of(args)?;
    let fam = family(args)?;
    let mut results: Vec<(String, BigInt)> = Vec::new();
    for m in engines(method, &["oracle", "naruse", "formula"])? {
        let v = match m.as_str() {
            "oracle" => count_syt(shape.clone())?,
            "naruse" => match &shape {
                Shape::Skew(s) => naruse_count(s)?,
                Shape::Shifted(_) => return Err(Error::Parse("naruse needs an unshifted skew shape".into())),
            },
            _ => match &fam {
                Some(Family::Rho([n, a, b, c, d])) => f_rho(*n, *a, *b, *c, *d)?,
                Some(Family::V([n, a, b, mm])) => g_v_hook(*n, *a, *b, *mm)?,
                Some(Family::M([n, a, b, c, d, mm])) => {
                    let lim = s_m_factored(*n, *a, *b, *c, *d, *mm)?.limit_q1(shape.size() as u64)?;
                    if !lim.is_integer() {
                        return Err(Error::NonInteger(lim.to_string()));
                    }
                    lim.to_integer()
                }
                None => return Err(Error::Parse("the formula engine needs --family".into())),
            },
        };
        results.push((m, v));
    }
    agree(results)
}

struct GfOptions {
    trunc: i64,
    bounded: Option<u64>,
    trace: bool,
    fixed_diag: Option<String>,
    staircase: Option<usize>,
    lam: String,
}

fn cmd_gf(args: &ShapeArgs, kind: &str, o: &GfOptions, engine: &str) -> Result<String, Error> {
    let kind: TableauKind = kind.parse()?;
    let list = engines(engine, &["formula", "oracle"])?;
    if o.trunc < 0 {
        return Err(Error::Parse("--trunc must be nonnegative".into()));
    }
    if let Some(diag) = &o.fixed_diag {
        let n = o.staircase.ok_or_else(|| Error::Parse("--fixed-diag needs --staircase".into()))?;
        let lam: Partition = o.lam.parse()?;
        let diag: Partition = diag.parse()?;
        let outer = crate::formulas::staircase_plus(&lam, n)?;
        let rdiag: Vec<u64> = diag.padded(n)?.into_iter().map(u64::from).collect();
        let mut results = Vec::new();
        for e in list {
            let s = if e == "formula" {
                fixed_diag_rhs(kind, &lam, &diag, n, o.trunc)?
            } else {
                match gf_fixed_diag(&outer, kind, &rdiag, o.trunc) {
                    Err(Error::InfeasibleDiagonal) => crate::qalg::QSeries::zero(Some(o.trunc)),
                    r => r?,
                }
            };
            results.push((e, s));
        }
        return agree(results);
    }
    let fam = family(args)?;
    let m_params = match fam {
        Some(Family::M(p)) => Some(p),
        _ => None,
    };
    if o.trace {
        let [n, a, b, c, d, m] = m_params.ok_or_else(|| Error::Parse("--trace needs --family m".into()))?;
        let mut results = Vec::new();
        for e in list {
            let s = if e == "formula" {
                trace_gf_formula(n, a, b, c, d, m, o.trunc)?
            } else {
                gf_trace(n, a, b, c, d, m, o.trunc)?
            };
            results.push((e, s));
        }
        return agree(results);
    }
    let shape = shape_of(args)?;
    let mut results = Vec::new();
    for e in list {
        let s = match (e.as_str(), o.bounded) {
            ("oracle", Some(max)) => gf_bounded(shape.clone(), kind, max)?,
            ("oracle", None) => gf_tableaux(shape.clone(), kind, o.trunc, None)?,
            ("formula", bound) => {
                if kind != TableauKind::Ssyt {
                    return Err(Error::Parse("the formula engine covers SSYT only".into()));
                }
                match (m_params, bound, &shape) {
                    (Some([n, a, b, c, d, 1]), Some(max), _) => s_m_bounded(n, a, b, c, d, max as u32)?,
                    (Some(_), Some(_), _) => {
                        return Err(Error::Parse("--bounded with the formula engine needs m = 1".into()))
                    }
                    (Some([n, a, b, c, d, m]), None, _) => s_m_gf(n, a, b, c, d, m, o.trunc)?,
                    (None, None, Shape::Skew(s)) => crate::excited::naruse_q_series(s, o.trunc)?,
                    _ => return Err(Error::Parse("no formula for this shape and option combination".into())),
                }
            }
            _ => unreachable!("engines are validated"),
        };
        results.push((e, s));
    }
    agree(results)
}

fn cmd_excited(skew: &str, list: bool) -> Result<String, Error> {
    let shape: SkewShape = skew.parse()?;
    let fam = excited_diagrams(&shape)?;
    if list {
        Ok(fam.diagrams.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n"))
    } else {
        Ok(fam.len().to_string())
    }
}

fn build_config(args: &VerifyArgs) -> Result<SweepConfig, Error> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let cfg: SweepConfig = text.parse()?;
            if let Some(t) = &args.theorem {
                let id: TheoremId = t.parse()?;
                if id != cfg.theorem {
                    return Err(Error::Parse(format!("config names {}, command line names {id}", cfg.theorem)));
                }
            }
            cfg
        }
        None => {
            let t = args.theorem.as_deref().ok_or_else(|| Error::Parse("name a theorem or pass --config".into()))?;
            SweepConfig::new(t.parse()?)
        }
    };
    for r in &args.ranges {
        let (name, range) = r.split_once('=').ok_or_else(|| Error::Parse(format!("bad range {r:?}")))?;
        cfg.set_range(name.trim(), parse_range(range)?)?;
    }
    if let Some(t) = args.trunc {
        if t < 0 {
            return Err(Error::Parse("--trunc must be nonnegative".into()));
        }
        cfg.trunc = t;
    }
    if let Some(j) = args.jobs {
        cfg.jobs = j;
    }
    if args.output.is_some() {
        cfg.output = args.output.clone();
    }
    Ok(cfg)
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let cfg = match build_config(args) {
        Ok(c) => c,
        Err(e) => return Outcome::err(&e),
    };
    let records = run_sweep(&cfg, args.timings);
    let text = report(&records);
    let summary = Summary::of(&records);
    let mut out = Outcome::default();
    match &cfg.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return Outcome {
                    stderr: format!("error: {}: {e}", path.display()),
                    code: EXIT_FAIL,
                    ..Outcome::default()
                };
            }
        }
        None => out.stdout.push_str(&text),
    }
    out.stdout.push_str(&format!("{}: {} tuples, {summary}", cfg.theorem, records.len()));
    if let Some(first) = records.iter().find(|r| r.status == Status::Fail) {
        out.stderr = format!(
            "first failure at {}: formula {} oracle {}{}",
            first.params_text(),
            first.formula.as_deref().unwrap_or("-"),
            first.oracle.as_deref().unwrap_or("-"),
            first.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
        );
        out.code = EXIT_FAIL;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("tableau-forge").chain(args.iter().copied())).unwrap();
        run(cli)
    }

    #[test]
    fn count_examples() {
        assert_eq!(go(&["count", "--skew", "2,2/1", "--method", "oracle,naruse"]).stdout, "2");
        assert_eq!(
            go(&["count", "--family", "rho", "--params", "1,1,1,1,1", "--method", "formula,oracle"]).stdout,
            "16"
        );
        assert_eq!(go(&["count", "--skew", "1/", "--method", "oracle"]).stdout, "1");
        assert_eq!(go(&["count", "--skew", "2,2/3"]).code, EXIT_USAGE);
    }

    #[test]
    fn gf_examples() {
        assert_eq!(go(&["gf", "--skew", "1/", "--kind", "rpp", "--trunc", "3"]).stdout, "1 + q + q^2 + q^3 (+O(q^4))");
        let o = go(&[
            "gf",
            "--family",
            "m",
            "--params",
            "1,1,0,1,0,1",
            "--kind",
            "ssyt",
            "--bounded",
            "1",
            "--engine",
            "formula",
        ]);
        assert_eq!(o.stdout, "q + q^2");
        let o = go(&["gf", "--family", "m", "--params", "1,0,0,0,0,1", "--trace", "--trunc", "2"]);
        assert_eq!(o.stdout, "1 + x q + x^2 q^2 (+O(q^3))");
    }

    #[test]
    fn disagreement_is_a_mismatch() {
        let e = agree(vec![("oracle".to_string(), 2), ("formula".to_string(), 3)]).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_MISMATCH);
        assert_eq!(agree(vec![("oracle".to_string(), 2), ("naruse".to_string(), 2)]).unwrap(), "2");
    }

    #[test]
    fn excited_examples() {
        assert_eq!(go(&["excited", "--skew", "2,2/1", "--count"]).stdout, "2");
        assert_eq!(go(&["excited", "--skew", "2,1/1", "--list"]).stdout, "(1,1)");
        assert_eq!(go(&["excited", "--skew", "3,2/", "--count"]).stdout, "1");
    }
}

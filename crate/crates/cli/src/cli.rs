//! Argument parsing and command dispatch for the `logfutaki` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use logfutaki::geometry::parse_rational;
use logfutaki::{catalog, r_invariant, RatPoint};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::figure::{render_figure, STYLE};
use crate::job::{parse_job, JobSpec, PolytopeSource, SupportSpec};
use crate::report::{decimal, render_table, run_job, View, DECIMAL_DIGITS};

/// Oracle search box used when `--bound` is not given.
pub const DEFAULT_BOUND: u32 = 25;

#[derive(Parser, Debug)]
#[command(
    name = "logfutaki",
    version,
    about = "Log-Futaki invariants and cone-angle bounds of toric Fano surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in reflexive polygons.
    Catalog(OutputArgs),
    /// Barycenter, volume, Q and R(M) of a polytope.
    R(JobArgs),
    /// Exact threshold r_bar over all one-parameter subgroups.
    Threshold(JobArgs),
    /// Log-Futaki line and feasible cone angles for one subgroup (needs --lambda).
    Futaki(JobArgs),
    /// Brute-force threshold over a box of subgroups, next to the exact one.
    Oracle(JobArgs),
    /// Write an SVG figure of the polytope and divisor support (needs --out).
    Figure(JobArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Suppress the human-readable table.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args, Debug)]
struct JobArgs {
    /// Job file (JSON). Other flags override its fields.
    #[arg(long)]
    job: Option<PathBuf>,
    /// Catalog name: P2, P1xP1, BL1, BL2, BL3.
    #[arg(long)]
    polytope: Option<String>,
    /// Multiple of the anticanonical class.
    #[arg(long)]
    m: Option<u32>,
    /// One-parameter subgroup, `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Cone-angle parameter, `p/q`.
    #[arg(long)]
    beta: Option<String>,
    /// Half-width of the oracle search box.
    #[arg(long)]
    bound: Option<u32>,
    /// Drop a point `x,y` from the support (repeatable).
    #[arg(long, allow_hyphen_values = true)]
    exclude: Vec<String>,
    /// Drop the run along the edge from `vx,vy` towards `wx,wy`: `vx,vy,wx,wy`.
    #[arg(long, allow_hyphen_values = true)]
    edge_run: Option<String>,
    /// Output file for `figure`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

fn split_rationals(
    text: &str,
    count: usize,
    flag: &str,
) -> Result<Vec<logfutaki::Rational>, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(CliError::input(format!(
            "--{flag}: expected {count} comma-separated values, got {text:?}"
        )));
    }
    parts
        .iter()
        .map(|p| parse_rational(p).map_err(|e| CliError::input(format!("--{flag}: {e}"))))
        .collect()
}

fn split_ints(text: &str, flag: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => {
            let parse = |s: &str| {
                s.parse::<i64>()
                    .map_err(|_| CliError::input(format!("--{flag}: {s:?} is not an integer")))
            };
            Ok((parse(a)?, parse(b)?))
        }
        _ => Err(CliError::input(format!(
            "--{flag}: expected `a,b`, got {text:?}"
        ))),
    }
}

impl JobArgs {
    fn to_job(&self) -> Result<JobSpec, CliError> {
        let mut job = match &self.job {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_job(&text)?
            }
            None => {
                let name = self
                    .polytope
                    .as_ref()
                    .ok_or_else(|| CliError::input("either --job or --polytope is required"))?;
                JobSpec::new(PolytopeSource::Catalog(name.clone()), SupportSpec::Generic)
            }
        };
        if let Some(name) = &self.polytope {
            if logfutaki::lookup(name).is_none() {
                return Err(CliError::input(format!(
                    "--polytope: unknown catalog name {name:?}"
                )));
            }
            job.polytope = PolytopeSource::Catalog(name.clone());
        }
        if let Some(m) = self.m {
            if m == 0 {
                return Err(CliError::input("--m: must be a positive integer"));
            }
            job.m = m;
        }
        if !self.exclude.is_empty() && self.edge_run.is_some() {
            return Err(CliError::input(
                "--exclude and --edge-run cannot be combined",
            ));
        }
        if !self.exclude.is_empty() {
            let points = self
                .exclude
                .iter()
                .map(|t| {
                    split_rationals(t, 2, "exclude")
                        .map(|v| RatPoint::new(v[0].clone(), v[1].clone()))
                })
                .collect::<Result<_, _>>()?;
            job.support = SupportSpec::Exclude(points);
        }
        if let Some(text) = &self.edge_run {
            let v = split_rationals(text, 4, "edge-run")?;
            job.support = SupportSpec::EdgeRun {
                v: RatPoint::new(v[0].clone(), v[1].clone()),
                w: RatPoint::new(v[2].clone(), v[3].clone()),
            };
        }
        if let Some(text) = &self.lambda {
            let lambda = split_ints(text, "lambda")?;
            if lambda == (0, 0) {
                return Err(CliError::input("--lambda: must be non-zero"));
            }
            job.lambda = Some(lambda);
        }
        if let Some(text) = &self.beta {
            job.beta =
                Some(parse_rational(text).map_err(|e| CliError::input(format!("--beta: {e}")))?);
        }
        if let Some(bound) = self.bound {
            if bound == 0 {
                return Err(CliError::input("--bound: must be a positive integer"));
            }
            job.oracle_bound = Some(bound);
        }
        Ok(job)
    }
}

fn catalog_json() -> Result<Value, CliError> {
    catalog()
        .iter()
        .map(|e| {
            let r = r_invariant(&e.fano).map_err(CliError::engine(e.name))?;
            let b = e.fano.barycenter();
            Ok(json!({
                "name": e.name,
                "notes": e.notes,
                "vertices": e.fano.vertices().iter().map(|v| [v.x.to_string(), v.y.to_string()]).collect::<Vec<_>>(),
                "volume": e.fano.volume().to_string(),
                "barycenter": [b.x.to_string(), b.y.to_string()],
                "r_of_m": {"exact": r.to_string(), "approx": decimal(&r, DECIMAL_DIGITS)},
            }))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Value::Array)
}

fn catalog_table() -> Result<String, CliError> {
    let mut out = String::new();
    for e in catalog() {
        let r = r_invariant(&e.fano).map_err(CliError::engine(e.name))?;
        let vertices = e
            .fano
            .vertices()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&render_table(&[
            ("name".to_string(), e.name.to_string()),
            ("notes".to_string(), e.notes.to_string()),
            ("vertices".to_string(), vertices),
            ("volume".to_string(), e.fano.volume().to_string()),
            ("barycenter".to_string(), e.fano.barycenter().to_string()),
            ("R(M)".to_string(), r.to_string()),
        ]));
        out.push('\n');
    }
    Ok(out)
}

fn print(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let (args, view, oracle) = match command {
        Command::Catalog(o) => {
            if o.json {
                print(out, &format!("{:#}\n", catalog_json()?))?;
            } else if !o.quiet {
                print(out, &catalog_table()?)?;
            }
            return Ok(());
        }
        Command::Figure(a) => {
            let path = a
                .out
                .clone()
                .ok_or_else(|| CliError::input("figure: --out is required"))?;
            let report = run_job(&a.to_job()?)?;
            let svg = render_figure(&report, &STYLE)?;
            std::fs::write(&path, svg).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            if a.output.json {
                print(out, &format!("{:#}\n", report.to_json()))?;
            } else if !a.output.quiet {
                print(out, &format!("wrote {}\n", path.display()))?;
            }
            return Ok(());
        }
        Command::R(a) => (a, View::Invariant, false),
        Command::Threshold(a) | Command::Futaki(a) => (a, View::Full, false),
        Command::Oracle(a) => (a, View::Full, true),
    };
    let mut job = args.to_job()?;
    if oracle && job.oracle_bound.is_none() {
        job.oracle_bound = Some(DEFAULT_BOUND);
    }
    let report = run_job(&job)?;
    if args.output.json {
        print(out, &format!("{:#}\n", report.to_json()))?;
    } else if !args.output.quiet {
        print(out, &report.to_table(view))?;
    }
    Ok(())
}

fn check(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Futaki(a) if a.lambda.is_none() => {
            let from_job = a.to_job()?.lambda.is_some();
            if !from_job {
                return Err(CliError::input("futaki: --lambda is required"));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code. Diagnostics go to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            if e.use_stderr() {
                let _ = e.print();
            } else {
                let _ = print(out, &e.to_string());
            }
            return code;
        }
    };
    match check(&cli.command).and_then(|()| dispatch(cli.command, out)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

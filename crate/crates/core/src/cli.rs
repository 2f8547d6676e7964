//! The `gzl` command line.
//!
//! ```text
//! gzl graph gen --family torus --d 2 --N 3 --out t.json
//! gzl zeta --family petersen -a 0:0.5:1 -b 1 -u 0.1,0.05i --method series --order 20
//! gzl verify konno-sato
//! gzl torus --d 2 -a 0 -b 1 -u 0.1 --N 4,8,16 --limit --tol 1e-10
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
//! Identical arguments give byte-identical output. `GZL_THREADS` caps the
//! worker pool.
//!
//! Zeta CSV columns:
//! `graph,method,a,b,u_re,u_im,z_inv_re,z_inv_im,zeta_inv,tail_bound,status`.
//! Torus CSV columns:
//! `d,N_or_limit,a,b,u,value,error_estimate,grid,gap,status`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::graph::{
    build_circulant, build_complete, build_cycle, build_petersen, build_random_connected,
    build_random_regular, build_torus, Graph,
};
use crate::grover::CoinParams;
use crate::lattice::{torus_gap, torus_limit_integral, torus_zeta_reciprocal_finite};
use crate::verify::{run_suite, Suite, SuiteOptions};
use crate::zeta::{
    generalized_zeta_reciprocal, grover_spectral_radius, log_zeta_series, series_tail_bound,
    zeta_reciprocal_det, zeta_reciprocal_regular,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const ZETA_CSV_HEADER: [&str; 11] = [
    "graph",
    "method",
    "a",
    "b",
    "u_re",
    "u_im",
    "z_inv_re",
    "z_inv_im",
    "zeta_inv",
    "tail_bound",
    "status",
];
pub const TORUS_CSV_HEADER: [&str; 10] = [
    "d",
    "N_or_limit",
    "a",
    "b",
    "u",
    "value",
    "error_estimate",
    "grid",
    "gap",
    "status",
];

#[derive(Debug, Parser)]
#[command(
    name = "gzl",
    version,
    about = "Generalized Grover matrices and (a,b)-zeta functions of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graph construction.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Evaluate Z_{a,b}(G,u)^{-1} over a parameter grid.
    Zeta(ZetaArgs),
    /// Run a verification suite and emit JSON-lines reports.
    Verify(VerifyArgs),
    /// Finite-torus values and N -> infinity limits.
    Torus(TorusArgs),
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    /// Build a graph and write it in the JSON graph format.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycle,
    Torus,
    Circulant,
    Complete,
    Petersen,
    RandomRegular,
    RandomConnected,
}

/// Graph family and its parameters.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Torus dimension.
    #[arg(long)]
    pub d: Option<usize>,
    /// Cycle, torus or circulant size.
    #[arg(long = "N")]
    pub size: Option<usize>,
    /// Vertex count for complete and random families.
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree for random-regular.
    #[arg(long)]
    pub k: Option<usize>,
    /// Edge probability for random-connected.
    #[arg(long)]
    pub p: Option<f64>,
    /// Circulant offsets, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub offsets: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Output file; JSON goes to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Det,
    Spectral,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct ZetaArgs {
    /// Graph file in the JSON graph format.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Values of a: comma list or start:step:stop.
    #[arg(
        short = 'a',
        long = "a",
        default_value = "1",
        allow_hyphen_values = true
    )]
    pub a: String,
    /// Values of b: comma list or start:step:stop.
    #[arg(
        short = 'b',
        long = "b",
        default_value = "1",
        allow_hyphen_values = true
    )]
    pub b: String,
    /// Values of u; entries may be complex, e.g. 0.1i or 0.13+0.07i.
    #[arg(short = 'u', long = "u", allow_hyphen_values = true)]
    pub u: String,
    #[arg(long, value_enum, default_value_t = Method::Det)]
    pub method: Method,
    /// Series order R.
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// konno-sato, trace-oracle, reduced-cycles, all, or an identity name.
    pub suite: String,
    /// Largest cycle length for the trace oracle.
    #[arg(long, default_value_t = 6)]
    pub rmax: usize,
    /// Series order for series-vs-det.
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TorusArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(
        short = 'a',
        long = "a",
        default_value = "1",
        allow_hyphen_values = true
    )]
    pub a: String,
    #[arg(
        short = 'b',
        long = "b",
        default_value = "1",
        allow_hyphen_values = true
    )]
    pub b: String,
    /// Real values of u.
    #[arg(short = 'u', long = "u", allow_hyphen_values = true)]
    pub u: String,
    /// Finite torus sizes, comma separated.
    #[arg(long = "N", value_delimiter = ',')]
    pub sizes: Vec<usize>,
    /// Also compute the N -> infinity limit.
    #[arg(long)]
    pub limit: bool,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

/// Errors that end a command with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Message(String),
    #[error(transparent)]
    Library(#[from] Error),
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError::Message(msg.into())
}

/// Shortest round-trip decimal.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn parse_f64(s: &str) -> Result<f64, UsageError> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| usage(format!("not a finite number: '{s}'")))
}

/// `start:step:stop`, stop included when hit within rounding.
fn parse_range(s: &str) -> Result<Vec<f64>, UsageError> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, step, stop] = parts[..] else {
        return Err(usage(format!("range must be start:step:stop, got '{s}'")));
    };
    let (start, step, stop) = (parse_f64(start)?, parse_f64(step)?, parse_f64(stop)?);
    let span = (stop - start) / step;
    if step == 0.0 || span < -1e-9 {
        return Err(usage(format!("range '{s}' is empty or has zero step")));
    }
    let count = (span + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err(usage(format!("range '{s}' has more than a million points")));
    }
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

/// Comma list of reals and ranges, sorted ascending without duplicates.
pub fn parse_real_grid(s: &str) -> Result<Vec<f64>, UsageError> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if item.contains(':') {
            out.extend(parse_range(item)?);
        } else {
            out.push(parse_f64(item)?);
        }
    }
    if out.is_empty() {
        return Err(usage("empty grid"));
    }
    out.sort_by(f64::total_cmp);
    out.dedup();
    Ok(out)
}

/// `x`, `yi`, `x+yi`, `x-yi`.
pub fn parse_complex(s: &str) -> Result<Complex64, UsageError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(parse_f64(&t)?, 0.0));
    };
    // split at the last sign that is not leading and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (parse_f64(&body[..i])?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_f64(other)?,
    };
    Ok(Complex64::new(re, im))
}

/// Comma list of complex values and real ranges, sorted by `(re, im)`
/// without duplicates.
pub fn parse_complex_grid(s: &str) -> Result<Vec<Complex64>, UsageError> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if item.contains(':') {
            out.extend(
                parse_range(item)?
                    .into_iter()
                    .map(|x| Complex64::new(x, 0.0)),
            );
        } else {
            out.push(parse_complex(item)?);
        }
    }
    if out.is_empty() {
        return Err(usage("empty grid"));
    }
    crate::linalg::sort_complex(&mut out);
    out.dedup();
    Ok(out)
}

fn coin_grid(a: &str, b: &str) -> Result<Vec<CoinParams>, UsageError> {
    let (a, b) = (parse_real_grid(a)?, parse_real_grid(b)?);
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in &a {
        for &y in &b {
            out.push(CoinParams::new(x, y)?);
        }
    }
    Ok(out)
}

fn need<T>(v: Option<T>, flag: &str, family: Family) -> Result<T, UsageError> {
    v.ok_or_else(|| usage(format!("--{flag} is required for family {family:?}")))
}

/// Builds the graph described by the family flags.
pub fn build_family(args: &FamilyArgs) -> Result<Graph, UsageError> {
    let family = args
        .family
        .ok_or_else(|| usage("--family or --graph is required"))?;
    let g = match family {
        Family::Cycle => build_cycle(need(args.size, "N", family)?)?,
        Family::Torus => build_torus(need(args.d, "d", family)?, need(args.size, "N", family)?)?,
        Family::Circulant => build_circulant(need(args.size, "N", family)?, &args.offsets)?,
        Family::Complete => build_complete(need(args.n, "n", family)?)?,
        Family::Petersen => build_petersen(),
        Family::RandomRegular => build_random_regular(
            need(args.n, "n", family)?,
            need(args.k, "k", family)?,
            args.seed,
        )?,
        Family::RandomConnected => build_random_connected(
            need(args.n, "n", family)?,
            need(args.p, "p", family)?,
            args.seed,
        )?,
    };
    Ok(g)
}

fn summary(g: &Graph) -> String {
    let regular = g
        .regular_degree()
        .map_or("none".to_string(), |k| k.to_string());
    format!(
        "n={} m={} regular={} vertex_transitive={}\n",
        g.n(),
        g.m(),
        regular,
        g.is_vertex_transitive()
    )
}

fn cmd_graph_gen(args: &GenArgs) -> Result<Outcome, UsageError> {
    let g = build_family(&args.family)?;
    match &args.out {
        Some(path) => {
            g.write_json(path)?;
            Ok(Outcome::ok(summary(&g)))
        }
        None => Ok(Outcome {
            stdout: g.to_json() + "\n",
            stderr: summary(&g),
            code: EXIT_OK,
        }),
    }
}

/// One grid point of `gzl zeta`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaRow {
    pub graph: String,
    pub method: &'static str,
    pub a: f64,
    pub b: f64,
    pub u_re: f64,
    pub u_im: f64,
    pub z_inv_re: Option<f64>,
    pub z_inv_im: Option<f64>,
    /// `ζ_{a,b}(G,u)^{-1}` for vertex-transitive graphs at real `u` in domain.
    pub zeta_inv: Option<f64>,
    pub tail_bound: Option<f64>,
    pub status: String,
}

impl ZetaRow {
    fn csv_record(&self) -> Vec<String> {
        let opt = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
        vec![
            self.graph.clone(),
            self.method.to_string(),
            fmt_f64(self.a),
            fmt_f64(self.b),
            fmt_f64(self.u_re),
            fmt_f64(self.u_im),
            opt(self.z_inv_re),
            opt(self.z_inv_im),
            opt(self.zeta_inv),
            opt(self.tail_bound),
            self.status.clone(),
        ]
    }
}

/// Evaluates `Z^{-1}` at every `(a, b, u)` point, ordered by `a`, `b`, `u`.
pub fn zeta_rows(
    g: &Graph,
    method: Method,
    order: usize,
    coins: &[CoinParams],
    us: &[Complex64],
) -> Result<Vec<ZetaRow>, UsageError> {
    if method == Method::Spectral && g.regular_degree().is_none() {
        return Err(Error::NotRegular.into());
    }
    if method == Method::Series && order == 0 {
        return Err(usage("--order must be >= 1"));
    }
    let method_name = match method {
        Method::Det => "det",
        Method::Spectral => "spectral",
        Method::Series => "series",
    };
    let per_coin: Vec<Vec<ZetaRow>> = coins
        .par_iter()
        .map(|p| {
            let series = match method {
                Method::Series => {
                    Some((log_zeta_series(g, p, order)?, grover_spectral_radius(g, p)))
                }
                _ => None,
            };
            us.iter()
                .map(|&u| {
                    let mut row = ZetaRow {
                        graph: g.name().to_string(),
                        method: method_name,
                        a: p.a(),
                        b: p.b(),
                        u_re: u.re,
                        u_im: u.im,
                        z_inv_re: None,
                        z_inv_im: None,
                        zeta_inv: None,
                        tail_bound: None,
                        status: "ok".to_string(),
                    };
                    let z = match &series {
                        None if method == Method::Det => Some(zeta_reciprocal_det(g, p, u)),
                        None => Some(zeta_reciprocal_regular(g, p, u)?),
                        Some((s, rho)) => {
                            let bound = series_tail_bound(g.arc_count(), *rho, u.norm(), order);
                            if bound.is_finite() {
                                row.tail_bound = Some(bound);
                                Some((-s.log_value(u)).exp())
                            } else {
                                row.status = format!(
                                    "outside-domain: |u| rho = {} >= 1",
                                    fmt_f64(u.norm() * rho)
                                );
                                None
                            }
                        }
                    };
                    if let Some(z) = z {
                        // adding 0.0 turns -0.0 into 0.0
                        row.z_inv_re = Some(z.re + 0.0);
                        row.z_inv_im = Some(z.im + 0.0);
                    }
                    if g.is_vertex_transitive() && u.im == 0.0 {
                        row.zeta_inv = generalized_zeta_reciprocal(g, p, u.re).ok();
                    }
                    Ok(row)
                })
                .collect::<Result<Vec<_>, Error>>()
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(per_coin.into_iter().flatten().collect())
}

fn render_json<T: Serialize>(rows: &[T]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(row).expect("rows serialize"));
        out.push('\n');
    }
    out
}

fn render_csv(header: &[&str], records: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("write to memory");
    for rec in records {
        w.write_record(&rec).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

fn load_graph(path: &Option<PathBuf>, family: &FamilyArgs) -> Result<Graph, UsageError> {
    match path {
        Some(p) => Ok(Graph::read_json(p)?),
        None => build_family(family),
    }
}

fn cmd_zeta(args: &ZetaArgs) -> Result<Outcome, UsageError> {
    let g = load_graph(&args.graph, &args.family)?;
    let coins = coin_grid(&args.a, &args.b)?;
    let us = parse_complex_grid(&args.u)?;
    let rows = zeta_rows(&g, args.method, args.order, &coins, &us)?;
    let text = match args.format {
        Format::Json => render_json(&rows),
        Format::Csv => render_csv(&ZETA_CSV_HEADER, rows.iter().map(ZetaRow::csv_record)),
    };
    Ok(Outcome::ok(text))
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, UsageError> {
    let suite: Suite = args.suite.parse()?;
    let opts = SuiteOptions {
        rmax: args.rmax,
        series_order: args.order,
        ..SuiteOptions::default()
    };
    if opts.rmax == 0 || opts.series_order == 0 {
        return Err(usage("--rmax and --order must be >= 1"));
    }
    let reports = run_suite(suite, &opts)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    Ok(Outcome {
        stdout: render_json(&reports),
        stderr: format!("{} reports, {} failed\n", reports.len(), failed),
        code: if failed == 0 { EXIT_OK } else { EXIT_FAILED },
    })
}

/// One line of `gzl torus` output. `N_or_limit` is the torus size or the
/// string `"limit"`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TorusRow {
    pub d: usize,
    #[serde(rename = "N_or_limit")]
    pub n_or_limit: serde_json::Value,
    pub a: f64,
    pub b: f64,
    pub u: f64,
    pub value: Option<f64>,
    pub error_estimate: Option<f64>,
    pub grid: Option<usize>,
    /// `|finite - limit|` on finite rows when the limit was computed.
    pub gap: Option<f64>,
    pub status: String,
}

impl TorusRow {
    fn csv_record(&self) -> Vec<String> {
        let opt = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
        let label = match &self.n_or_limit {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        vec![
            self.d.to_string(),
            label,
            fmt_f64(self.a),
            fmt_f64(self.b),
            fmt_f64(self.u),
            opt(self.value),
            opt(self.error_estimate),
            self.grid.map(|g| g.to_string()).unwrap_or_default(),
            opt(self.gap),
            self.status.clone(),
        ]
    }
}

fn status_of(e: &Error) -> String {
    match e {
        Error::OutsideDomain(msg) => format!("outside-domain: {msg}"),
        Error::NoConvergence { .. } => "no-convergence".to_string(),
        other => other.to_string(),
    }
}

/// Limit row (when requested) followed by finite rows, per `(a, b, u)`.
pub fn torus_rows(
    d: usize,
    coins: &[CoinParams],
    us: &[f64],
    sizes: &[usize],
    limit: bool,
    tol: f64,
) -> Result<Vec<TorusRow>, UsageError> {
    if d == 0 {
        return Err(usage("--d must be >= 1"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(usage("--tol must be positive"));
    }
    if let Some(n) = sizes.iter().find(|&&n| n < 3) {
        return Err(usage(format!("torus needs N >= 3, got {n}")));
    }
    let points: Vec<(CoinParams, f64)> = coins
        .iter()
        .flat_map(|p| us.iter().map(move |&u| (*p, u)))
        .collect();
    let blocks: Vec<Vec<TorusRow>> = points
        .par_iter()
        .map(|&(p, u)| {
            let blank = |label: serde_json::Value| TorusRow {
                d,
                n_or_limit: label,
                a: p.a(),
                b: p.b(),
                u,
                value: None,
                error_estimate: None,
                grid: None,
                gap: None,
                status: "ok".to_string(),
            };
            let mut rows = Vec::new();
            let mut limit_value = None;
            if limit {
                let mut row = blank(serde_json::Value::from("limit"));
                match torus_limit_integral(d, &p, u, tol) {
                    Ok(q) => {
                        row.value = Some(q.value);
                        row.error_estimate = Some(q.error_estimate);
                        row.grid = Some(q.grid_points_per_axis);
                        limit_value = Some(q.value);
                    }
                    Err(Error::NoConvergence {
                        best,
                        error_estimate,
                        grid,
                    }) => {
                        row.value = Some(best);
                        row.error_estimate = Some(error_estimate);
                        row.grid = Some(grid);
                        row.status = "no-convergence".to_string();
                    }
                    Err(e) => row.status = status_of(&e),
                }
                rows.push(row);
            }
            for &n in sizes {
                let mut row = blank(serde_json::Value::from(n));
                row.grid = Some(n);
                match torus_zeta_reciprocal_finite(d, n, &p, u) {
                    Ok(v) => {
                        row.value = Some(v);
                        row.gap = limit_value.and_then(|l| torus_gap(d, n, &p, u, l).ok());
                    }
                    Err(e) => row.status = status_of(&e),
                }
                rows.push(row);
            }
            rows
        })
        .collect();
    Ok(blocks.into_iter().flatten().collect())
}

fn cmd_torus(args: &TorusArgs) -> Result<Outcome, UsageError> {
    if args.sizes.is_empty() && !args.limit {
        return Err(usage("give --N sizes, --limit, or both"));
    }
    let coins = coin_grid(&args.a, &args.b)?;
    let us = parse_real_grid(&args.u)?;
    let mut sizes = args.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    let rows = torus_rows(args.d, &coins, &us, &sizes, args.limit, args.tol)?;
    let text = match args.format {
        Format::Json => render_json(&rows),
        Format::Csv => render_csv(&TORUS_CSV_HEADER, rows.iter().map(TorusRow::csv_record)),
    };
    Ok(Outcome::ok(text))
}

fn write_out(path: &Option<PathBuf>, outcome: &mut Outcome) -> Result<(), UsageError> {
    if let Some(p) = path {
        fs::write(p, &outcome.stdout).map_err(Error::from)?;
        outcome.stdout.clear();
    }
    Ok(())
}

/// Runs a parsed command on a pool capped by `GZL_THREADS`.
pub fn execute(cli: &Cli) -> Result<Outcome, UsageError> {
    let threads = match std::env::var("GZL_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| usage(format!("GZL_THREADS must be a positive integer, got '{v}'")))?,
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Graph(GraphCommand::Gen(args)) => cmd_graph_gen(args),
        Command::Zeta(args) => {
            let mut o = cmd_zeta(args)?;
            write_out(&args.out, &mut o)?;
            Ok(o)
        }
        Command::Verify(args) => {
            let mut o = cmd_verify(args)?;
            write_out(&args.out, &mut o)?;
            Ok(o)
        }
        Command::Torus(args) => {
            let mut o = cmd_torus(args)?;
            write_out(&args.out, &mut o)?;
            Ok(o)
        }
    })
}

/// Parses `args`, runs the command, prints its output and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = std::io::stdout().write_all(o.stdout.as_bytes());
            let _ = std::io::stderr().write_all(o.stderr.as_bytes());
            o.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

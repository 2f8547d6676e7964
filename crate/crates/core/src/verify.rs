//! Identity checks between independent evaluation routes.
//!
//! Each check compares a left and a right value and records the outcome as a
//! [`VerificationReport`]. Reports serialize to one JSON object per line.
//! Suites bundle checks over a standard graph set and parameter grid; they
//! evaluate jobs on the current rayon pool and return reports in the order
//! the jobs were generated, so output does not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    build_complete, build_cycle, build_petersen, build_random_connected, build_torus, Graph,
};
use crate::grover::{spectrum_closed_form, CoinParams};
use crate::matrices::transition_spectrum;
use crate::oracle::{brute_n_r, count_reduced_based_cycles};
use crate::zeta::{
    generalized_zeta_reciprocal, generalized_zeta_reciprocal_det, grover_spectral_radius,
    grover_walk_rhs, ihara_bass_reciprocal, konno_sato_rhs, log_zeta_series, one_parameter_rhs,
    series_tail_bound, zeta_reciprocal_det, zeta_reciprocal_regular,
    zeta_reciprocal_regular_laplacian,
};

pub const DETERMINANT_TOL: f64 = 1e-9;
pub const SPECTRAL_MAP_TOL: f64 = 1e-8;
pub const VT_POWER_TOL: f64 = 1e-10;
pub const SERIES_TOL: f64 = 1e-9;
pub const TRACE_TOL: f64 = 1e-10;
/// Rounding tolerance when reading an integer off a floating trace.
pub const INTEGER_TOL: f64 = 1e-6;
/// Below this `|lhs|`, pass/fail uses the absolute error.
pub const SMALL_LHS: f64 = 1e-8;
pub const DEFAULT_SERIES_ORDER: usize = 20;
/// Series checks only use samples with `|u| ρ(Ũ) <= SERIES_RADIUS_FRACTION`.
pub const SERIES_RADIUS_FRACTION: f64 = 0.5;

pub const A_GRID: [f64; 4] = [0.0, 0.3, 0.7, 1.0];
pub const B_GRID: [f64; 5] = [-1.5, -0.4, 0.5, 1.0, 2.0];

/// `{0.05, 0.1i, 0.13 + 0.07i, 0.2, -0.15}`.
pub fn u_grid() -> Vec<Complex64> {
    vec![
        Complex64::new(0.05, 0.0),
        Complex64::new(0.0, 0.1),
        Complex64::new(0.13, 0.07),
        Complex64::new(0.2, 0.0),
        Complex64::new(-0.15, 0.0),
    ]
}

/// Every `(a, b)` pair of the standard grid.
pub fn coin_grid() -> Vec<CoinParams> {
    A_GRID
        .iter()
        .flat_map(|&a| {
            B_GRID
                .iter()
                .map(move |&b| CoinParams::new(a, b).expect("grid values are valid"))
        })
        .collect()
}

/// Twenty seeded `G(n, 1/2)` graphs with `n = 4..=8`, then `C_3..C_8`, `K_4`,
/// `K_5`, Petersen and `T^2_3`.
pub fn standard_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=20u64)
        .map(|seed| {
            let n = 4 + (seed as usize - 1) % 5;
            build_random_connected(n, 0.5, seed).expect("G(n, 1/2) with n <= 8 connects quickly")
        })
        .collect();
    out.extend((3..=8).map(|n| build_cycle(n).expect("n >= 3")));
    out.push(build_complete(4).expect("n >= 3"));
    out.push(build_complete(5).expect("n >= 3"));
    out.push(build_petersen());
    out.push(build_torus(2, 3).expect("valid torus"));
    out
}

/// Vertex-transitive graphs with min degree 2 used by the reduced-cycle check.
pub fn reduced_cycle_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (4..=8).map(|n| build_cycle(n).expect("n >= 3")).collect();
    out.push(build_complete(4).expect("n >= 3"));
    out.push(build_complete(5).expect("n >= 3"));
    out.push(build_petersen());
    out.push(build_torus(2, 3).expect("valid torus"));
    out
}

/// The checks [`verify_identity`] knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `det(I - uŨ)` against the vertex-side determinant with `A_d`.
    KonnoSatoGeneralized,
    /// `det(I - uŨ)` against the product over `Spec(P)` (regular graphs).
    RegularClosedForm,
    /// `det(I - uŨ)` against the product over `Spec(Δ)` (regular graphs).
    LaplacianForm,
    /// `det(I - uŨ)` against `Π (1 - uλ)` over the closed-form spectrum.
    SpectralMap,
    /// Truncated `exp(Σ N_r u^r / r)` against `1 / det(I - uŨ)`.
    SeriesVsDet,
    /// `det(I - uŨ(0,1))` against the Ihara–Bass determinant.
    IharaBass,
    /// `ζ^{-1}` against `(Z^{-1})^{1/n}` through real logs, on vertex-transitive
    /// graphs. A relative error `ε` here is an absolute error `nε` between
    /// `n log ζ` and `log Z`.
    VtPower,
    /// `det(I - uŨ(1,1))` against `(1-u²)^{m-n} det((1+u²)I - 2uP)`.
    GroverWalk,
    /// `det(I - uŨ(a,1))` against the one-parameter closed form (regular graphs).
    OneParameter,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::KonnoSatoGeneralized,
        Identity::RegularClosedForm,
        Identity::LaplacianForm,
        Identity::SpectralMap,
        Identity::SeriesVsDet,
        Identity::IharaBass,
        Identity::VtPower,
        Identity::GroverWalk,
        Identity::OneParameter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::KonnoSatoGeneralized => "konno-sato-generalized",
            Identity::RegularClosedForm => "regular-closed-form",
            Identity::LaplacianForm => "laplacian-form",
            Identity::SpectralMap => "spectral-map",
            Identity::SeriesVsDet => "series-vs-det",
            Identity::IharaBass => "ihara-bass",
            Identity::VtPower => "vt-power",
            Identity::GroverWalk => "grover-walk",
            Identity::OneParameter => "one-parameter",
        }
    }

    pub fn tolerance(self) -> f64 {
        match self {
            Identity::SpectralMap => SPECTRAL_MAP_TOL,
            Identity::VtPower => VT_POWER_TOL,
            Identity::SeriesVsDet => SERIES_TOL,
            _ => DETERMINANT_TOL,
        }
    }

    /// Identities with fixed coin parameters ignore the ones passed in.
    pub fn fixed_params(self) -> Option<CoinParams> {
        match self {
            Identity::IharaBass => Some(CoinParams::POSITIVE_SUPPORT),
            Identity::GroverWalk => Some(CoinParams::GROVER),
            _ => None,
        }
    }

    /// Whether the identity is stated only for regular graphs.
    pub fn needs_regular(self) -> bool {
        matches!(
            self,
            Identity::RegularClosedForm
                | Identity::LaplacianForm
                | Identity::SpectralMap
                | Identity::OneParameter
        )
    }

    /// Whether the check applies to `g` at all.
    pub fn applies_to(self, g: &Graph) -> bool {
        match self {
            Identity::VtPower => g.is_vertex_transitive() && g.regular_degree().is_some(),
            _ if self.needs_regular() => g.regular_degree().is_some(),
            _ => true,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One comparison between two evaluation routes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub graph: String,
    pub a: f64,
    pub b: f64,
    pub u_re: f64,
    pub u_im: f64,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
    #[serde(skip)]
    pub tol: f64,
}

impl VerificationReport {
    /// Fills in the errors and the pass flag: relative error at most `tol`,
    /// or absolute error at most `tol` once `|lhs| < 1e-8`.
    pub fn new(
        identity: impl Into<String>,
        graph: &str,
        p: &CoinParams,
        u: Complex64,
        lhs: Complex64,
        rhs: Complex64,
        tol: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let rel_err = abs_err / lhs.norm();
        let pass = if lhs.norm() < SMALL_LHS {
            abs_err <= tol
        } else {
            rel_err <= tol
        };
        VerificationReport {
            identity: identity.into(),
            graph: graph.to_string(),
            a: p.a(),
            b: p.b(),
            u_re: u.re,
            u_im: u.im,
            lhs_re: lhs.re,
            lhs_im: lhs.im,
            rhs_re: rhs.re,
            rhs_im: rhs.im,
            abs_err,
            rel_err,
            pass,
            tol,
        }
    }

    /// Single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report fields serialize")
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Runs one identity over `u_samples`. Samples outside the identity's domain
/// (non-real `u` for `vt-power`, `|u| ρ > 1/2` for the series, points off the
/// positive branch) produce no report.
pub fn verify_identity(
    identity: Identity,
    g: &Graph,
    p: &CoinParams,
    u_samples: &[Complex64],
) -> Result<Vec<VerificationReport>> {
    let p = identity.fixed_params().unwrap_or(*p);
    if identity.needs_regular() && g.regular_degree().is_none() {
        return Err(Error::NotRegular);
    }
    if identity == Identity::OneParameter && p.b() != 1.0 {
        return Err(Error::InvalidParameter(format!(
            "one-parameter needs b = 1, got {}",
            p.b()
        )));
    }
    let tol = identity.tolerance();
    let report = |u: Complex64, lhs: Complex64, rhs: Complex64| {
        VerificationReport::new(identity.name(), g.name(), &p, u, lhs, rhs, tol)
    };
    let mut out = Vec::with_capacity(u_samples.len());
    match identity {
        Identity::KonnoSatoGeneralized => {
            for &u in u_samples {
                out.push(report(
                    u,
                    zeta_reciprocal_det(g, &p, u),
                    konno_sato_rhs(g, &p, u),
                ));
            }
        }
        Identity::RegularClosedForm => {
            for &u in u_samples {
                out.push(report(
                    u,
                    zeta_reciprocal_det(g, &p, u),
                    zeta_reciprocal_regular(g, &p, u)?,
                ));
            }
        }
        Identity::LaplacianForm => {
            for &u in u_samples {
                let rhs = zeta_reciprocal_regular_laplacian(g, &p, u)?;
                out.push(report(u, zeta_reciprocal_det(g, &p, u), rhs));
            }
        }
        Identity::SpectralMap => {
            let spectrum = spectrum_closed_form(g, &p, &transition_spectrum(g))?.values();
            for &u in u_samples {
                let rhs: Complex64 = spectrum.iter().map(|&lam| c(1.0) - u * lam).product();
                out.push(report(u, zeta_reciprocal_det(g, &p, u), rhs));
            }
        }
        Identity::SeriesVsDet => {
            out = verify_series(g, &p, u_samples, DEFAULT_SERIES_ORDER)?;
        }
        Identity::IharaBass => {
            for &u in u_samples {
                out.push(report(
                    u,
                    zeta_reciprocal_det(g, &p, u),
                    ihara_bass_reciprocal(g, u),
                ));
            }
        }
        Identity::VtPower => {
            for &u in u_samples.iter().filter(|u| u.im == 0.0) {
                let (Ok(closed), Ok(root)) = (
                    generalized_zeta_reciprocal(g, &p, u.re),
                    generalized_zeta_reciprocal_det(g, &p, u.re),
                ) else {
                    continue;
                };
                out.push(report(u, c(closed), c(root)));
            }
        }
        Identity::GroverWalk => {
            for &u in u_samples {
                out.push(report(
                    u,
                    zeta_reciprocal_det(g, &p, u),
                    grover_walk_rhs(g, u),
                ));
            }
        }
        Identity::OneParameter => {
            for &u in u_samples {
                out.push(report(
                    u,
                    zeta_reciprocal_det(g, &p, u),
                    one_parameter_rhs(g, p.a(), u)?,
                ));
            }
        }
    }
    Ok(out)
}

/// Series against determinant at a chosen order. The tolerance of each report
/// is `1e-9 + (exp(T) - 1)`, where `T` bounds the neglected tail of the log.
pub fn verify_series(
    g: &Graph,
    p: &CoinParams,
    u_samples: &[Complex64],
    order: usize,
) -> Result<Vec<VerificationReport>> {
    let series = log_zeta_series(g, p, order)?;
    let rho = grover_spectral_radius(g, p);
    let mut out = Vec::new();
    for &u in u_samples {
        if u.norm() * rho > SERIES_RADIUS_FRACTION {
            continue;
        }
        let tail = series_tail_bound(g.arc_count(), rho, u.norm(), order);
        let tol = SERIES_TOL + tail.exp_m1();
        let lhs = series.value(u);
        let rhs = zeta_reciprocal_det(g, p, u).inv();
        out.push(VerificationReport::new(
            Identity::SeriesVsDet.name(),
            g.name(),
            p,
            u,
            lhs,
            rhs,
            tol,
        ));
    }
    Ok(out)
}

/// `brute_N_r` against `tr Ũ^r` for `r = 1..=rmax`. Absolute tolerance
/// `1e-10`; the `u` fields carry `r`.
pub fn verify_traces(g: &Graph, p: &CoinParams, rmax: usize) -> Result<Vec<VerificationReport>> {
    let series = log_zeta_series(g, p, rmax)?;
    (1..=rmax)
        .map(|r| {
            let brute = brute_n_r(g, p, r)?;
            let mut rep = VerificationReport::new(
                "trace-oracle",
                g.name(),
                p,
                c(r as f64),
                c(brute),
                c(series.trace(r)),
                TRACE_TOL,
            );
            rep.pass = rep.abs_err <= TRACE_TOL;
            Ok(rep)
        })
        .collect()
}

/// Reduced based-cycle counts at vertex 0 against `tr((U⁺)^r) / n` after
/// rounding, for `r = 1..=rmax`. The `u` fields carry `r`.
pub fn verify_reduced_cycles(g: &Graph, rmax: usize) -> Result<Vec<VerificationReport>> {
    let p = CoinParams::POSITIVE_SUPPORT;
    let series = log_zeta_series(g, &p, rmax)?;
    (1..=rmax)
        .map(|r| {
            let count = count_reduced_based_cycles(g, 0, r)? as f64;
            let per_vertex = series.trace(r) / g.n() as f64;
            let rounded = per_vertex.round();
            let mut rep = VerificationReport::new(
                "reduced-cycles",
                g.name(),
                &p,
                c(r as f64),
                c(count),
                c(per_vertex),
                0.0,
            );
            rep.tol = INTEGER_TOL;
            rep.pass = (per_vertex - rounded).abs() <= INTEGER_TOL && rounded == count;
            Ok(rep)
        })
        .collect()
}

/// Named batches of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identity(Identity),
    TraceOracle,
    ReducedCycles,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "konno-sato" => Ok(Suite::Identity(Identity::KonnoSatoGeneralized)),
            "trace-oracle" => Ok(Suite::TraceOracle),
            "reduced-cycles" => Ok(Suite::ReducedCycles),
            "all" => Ok(Suite::All),
            other => other.parse().map(Suite::Identity),
        }
    }
}

/// Knobs for [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    /// Largest cycle length for the trace oracle.
    pub rmax: usize,
    /// Largest cycle length for reduced-cycle counts.
    pub reduced_rmax: usize,
    /// Only graphs with at most this many edges enter the trace oracle.
    pub trace_max_edges: usize,
    pub series_order: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            rmax: 6,
            reduced_rmax: 8,
            trace_max_edges: 12,
            series_order: DEFAULT_SERIES_ORDER,
        }
    }
}

enum Job<'g> {
    Identity(Identity, &'g Graph, CoinParams),
    Traces(&'g Graph, CoinParams),
    Reduced(&'g Graph),
}

fn identity_jobs<'g>(id: Identity, graphs: &'g [Graph], jobs: &mut Vec<Job<'g>>) {
    let params = match id.fixed_params() {
        Some(p) => vec![p],
        None if id == Identity::OneParameter => A_GRID
            .iter()
            .map(|&a| CoinParams::new(a, 1.0).unwrap())
            .collect(),
        None => coin_grid(),
    };
    for g in graphs.iter().filter(|g| id.applies_to(g)) {
        for p in &params {
            jobs.push(Job::Identity(id, g, *p));
        }
    }
}

/// Runs a suite on the current rayon pool. Reports come back ordered by
/// identity, graph, `a`, `b`, then sample.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let graphs = standard_graphs();
    let reduced = reduced_cycle_graphs();
    let mut jobs = Vec::new();
    match suite {
        Suite::Identity(id) => identity_jobs(id, &graphs, &mut jobs),
        Suite::TraceOracle => trace_jobs(&graphs, opts, &mut jobs),
        Suite::ReducedCycles => jobs.extend(reduced.iter().map(Job::Reduced)),
        Suite::All => {
            for id in Identity::ALL {
                identity_jobs(id, &graphs, &mut jobs);
            }
            trace_jobs(&graphs, opts, &mut jobs);
            jobs.extend(reduced.iter().map(Job::Reduced));
        }
    }
    let u = u_grid();
    let batches: Vec<Result<Vec<VerificationReport>>> = jobs
        .par_iter()
        .map(|job| match *job {
            Job::Identity(Identity::SeriesVsDet, g, p) => {
                verify_series(g, &p, &u, opts.series_order)
            }
            Job::Identity(id, g, p) => verify_identity(id, g, &p, &u),
            Job::Traces(g, p) => verify_traces(g, &p, opts.rmax),
            Job::Reduced(g) => verify_reduced_cycles(g, opts.reduced_rmax),
        })
        .collect();
    let mut out = Vec::new();
    for batch in batches {
        out.extend(batch?);
    }
    Ok(out)
}

fn trace_jobs<'g>(graphs: &'g [Graph], opts: &SuiteOptions, jobs: &mut Vec<Job<'g>>) {
    for g in graphs.iter().filter(|g| g.m() <= opts.trace_max_edges) {
        for p in coin_grid() {
            jobs.push(Job::Traces(g, p));
        }
    }
}

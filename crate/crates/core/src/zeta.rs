//! Evaluation of the `(a,b)`-zeta function `Z_{a,b}(G, u)` and the generalized
//! `(a,b)`-zeta function `ζ_{a,b}(G, u)` along independent routes:
//!
//! * the `2m × 2m` determinant `det(I - u Ũ)`;
//! * the `n × n` vertex determinant with `A_d` (valid on every graph);
//! * spectral products over `Spec(P)` or `Spec(Δ)` (regular graphs);
//! * the trace series `Σ N_r u^r / r` with `N_r = tr Ũ^r`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grover::{build_a_d, build_generalized_grover, CoinParams};
use crate::linalg::{identity_minus_scaled, lu_log_det, LogDet};
use crate::matrices::{laplacian_spectrum, matrices, transition_spectrum};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `det(I_{2m} - u Ũ)` as a log-determinant.
pub fn zeta_reciprocal_log_det(g: &Graph, p: &CoinParams, u: Complex64) -> LogDet {
    let m = build_generalized_grover(g, p);
    lu_log_det(identity_minus_scaled(&m.matrix, u))
}

/// `Z_{a,b}(G, u)^{-1} = det(I_{2m} - u Ũ)`.
pub fn zeta_reciprocal_det(g: &Graph, p: &CoinParams, u: Complex64) -> Complex64 {
    zeta_reciprocal_log_det(g, p, u).value()
}

/// Vertex-side determinant:
/// `(1 - b²u²)^{m-n} / Π deg v · det(D{(1 + b(2a-b)u²) I + b(b-a)u² D} - u A_d)`.
pub fn konno_sato_rhs(g: &Graph, p: &CoinParams, u: Complex64) -> Complex64 {
    let (a, b) = (p.a(), p.b());
    let n = g.n();
    let a_d = build_a_d(g, p);
    let u2 = u * u;
    let m = DMatrix::from_fn(n, n, |i, j| {
        let mut x = -u * a_d[(i, j)];
        if i == j {
            let d = g.degree(i) as f64;
            x += d * (1.0 + b * (2.0 * a - b) * u2 + b * (b - a) * u2 * d);
        }
        x
    });
    let ld = lu_log_det(m);
    let log_deg: f64 = g.degrees().iter().map(|&d| (d as f64).ln()).sum();
    let det = LogDet {
        log_abs: ld.log_abs - log_deg,
        phase: ld.phase,
    };
    let prefactor = (1.0 - b * b * u2).powi(g.m() as i32 - n as i32);
    prefactor * det.value()
}

/// `(1 - u²)^{m-n} det((1 + u²) I - 2u P)`, the Grover-walk special case.
pub fn grover_walk_rhs(g: &Graph, u: Complex64) -> Complex64 {
    let gm = matrices(g);
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| {
        let diag = if i == j { c(1.0) + u * u } else { c(0.0) };
        diag - 2.0 * u * gm.transition[(i, j)]
    });
    (c(1.0) - u * u).powi(g.m() as i32 - n as i32) * lu_log_det(m).value()
}

/// `(1 - u²)^{m-n} det({1 + (q + (1-q)a)u²} I - {1 + q + (1-q)a} u P)` on a
/// `(q+1)`-regular graph: the `b = 1` family.
pub fn one_parameter_rhs(g: &Graph, a: f64, u: Complex64) -> Result<Complex64> {
    let q = g.regular_degree().ok_or(Error::NotRegular)? as f64 - 1.0;
    let gm = matrices(g);
    let n = g.n();
    let quad = q + (1.0 - q) * a;
    let lin = 1.0 + q + (1.0 - q) * a;
    let m = DMatrix::from_fn(n, n, |i, j| {
        let diag = if i == j {
            c(1.0) + quad * u * u
        } else {
            c(0.0)
        };
        diag - lin * u * gm.transition[(i, j)]
    });
    Ok((c(1.0) - u * u).powi(g.m() as i32 - n as i32) * lu_log_det(m).value())
}

fn regular_constants(g: &Graph, p: &CoinParams) -> Result<(f64, f64, f64)> {
    let q = g.regular_degree().ok_or(Error::NotRegular)? as f64 - 1.0;
    Ok((q, p.eta(q), p.sigma(q)))
}

/// Regular-graph spectral product over `Spec(P)`:
/// `(1 - b²u²)^{m-n} Π_μ ((1 + σu²) - ημu)`.
pub fn zeta_reciprocal_regular(g: &Graph, p: &CoinParams, u: Complex64) -> Result<Complex64> {
    let (_, eta, sigma) = regular_constants(g, p)?;
    let spectrum = transition_spectrum(g);
    let prod: Complex64 = spectrum
        .iter()
        .map(|&mu| c(1.0) + sigma * u * u - eta * mu * u)
        .product();
    Ok((c(1.0) - p.b() * p.b() * u * u).powi(g.m() as i32 - g.n() as i32) * prod)
}

/// Same quantity over `Spec(Δ)`:
/// `(1 - b²u²)^{m-n} Π_λ ((1 - ηu + σu²) + ηuλ/(q+1))`.
pub fn zeta_reciprocal_regular_laplacian(
    g: &Graph,
    p: &CoinParams,
    u: Complex64,
) -> Result<Complex64> {
    let (q, eta, sigma) = regular_constants(g, p)?;
    let spectrum = laplacian_spectrum(g);
    let base = c(1.0) - eta * u + sigma * u * u;
    let prod: Complex64 = spectrum
        .iter()
        .map(|&lam| base + eta * u * lam / (q + 1.0))
        .product();
    Ok((c(1.0) - p.b() * p.b() * u * u).powi(g.m() as i32 - g.n() as i32) * prod)
}

/// Ihara–Bass form `(1 - u²)^{r-1} det(I - uA + u²(D - I))`, `r = m - n + 1`.
pub fn ihara_bass_reciprocal(g: &Graph, u: Complex64) -> Complex64 {
    let gm = matrices(g);
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| {
        let mut x = -u * gm.adjacency[(i, j)];
        if i == j {
            x += c(1.0) + u * u * (gm.degree[(i, i)] - 1.0);
        }
        x
    });
    (c(1.0) - u * u).powi((gm.betti - 1) as i32) * lu_log_det(m).value()
}

/// Truncated logarithm of `Z_{a,b}`: coefficients `N_r / r` for
/// `r = 1..=order`, where `N_r = tr Ũ^r`.
#[derive(Debug, Clone)]
pub struct LogZetaSeries {
    pub graph: String,
    pub params: CoinParams,
    /// `N_1, .., N_R`.
    pub traces: Vec<f64>,
}

impl LogZetaSeries {
    pub fn order(&self) -> usize {
        self.traces.len()
    }

    /// `N_r` for `1 <= r <= order`.
    pub fn trace(&self, r: usize) -> f64 {
        self.traces[r - 1]
    }

    /// `c_r = N_r / r`.
    pub fn coefficients(&self) -> Vec<f64> {
        self.traces
            .iter()
            .enumerate()
            .map(|(i, t)| t / (i + 1) as f64)
            .collect()
    }

    /// `Σ_{r ≤ R} N_r u^r / r`, Horner form.
    pub fn log_value(&self, u: Complex64) -> Complex64 {
        self.coefficients()
            .iter()
            .rev()
            .fold(c(0.0), |acc, &cr| (acc + cr) * u)
    }

    /// `exp(Σ_{r ≤ R} N_r u^r / r)`, the truncated `Z_{a,b}(u)`.
    pub fn value(&self, u: Complex64) -> Complex64 {
        self.log_value(u).exp()
    }
}

/// `N_r = tr Ũ^r` by repeated dense multiplication.
pub fn log_zeta_series(g: &Graph, p: &CoinParams, order: usize) -> Result<LogZetaSeries> {
    if order == 0 {
        return Err(Error::InvalidParameter("series order must be >= 1".into()));
    }
    let u = build_generalized_grover(g, p).matrix;
    let mut power = u.clone();
    let mut traces = Vec::with_capacity(order);
    traces.push(power.trace());
    for _ in 1..order {
        power = &power * &u;
        traces.push(power.trace());
    }
    Ok(LogZetaSeries {
        graph: g.name().to_string(),
        params: *p,
        traces,
    })
}

/// Bound on `|log Z - Σ_{r ≤ R} N_r u^r / r|` from `|N_r| ≤ 2m ρ^r`:
/// `2m (ρ|u|)^{R+1} / ((R+1)(1 - ρ|u|))`. Infinite outside `ρ|u| < 1`.
pub fn series_tail_bound(dim: usize, rho: f64, u_abs: f64, order: usize) -> f64 {
    let x = rho * u_abs;
    if x >= 1.0 {
        return f64::INFINITY;
    }
    dim as f64 * x.powi(order as i32 + 1) / ((order + 1) as f64 * (1.0 - x))
}

/// Spectral radius estimate by power iteration.
///
/// Returns the geometric mean growth rate `(|M^k x| / |M^j x|)^{1/(k-j)}`
/// over the second half of the run, which also settles when the dominant
/// eigenvalues form a complex pair or lie on a common circle. Stops after
/// `max_iter` steps or once successive estimates move by less than `tol`.
pub fn spectral_radius(m: &DMatrix<f64>, max_iter: usize, tol: f64) -> f64 {
    let n = m.nrows();
    if n == 0 {
        return 0.0;
    }
    // deterministic start vector with no special structure
    let mut x = DVector::from_fn(n, |i, _| 1.0 + ((i * 7919) % 101) as f64 / 101.0);
    x /= x.norm();
    let mut log_growth = Vec::with_capacity(max_iter);
    let mut last = f64::NAN;
    for k in 0..max_iter {
        let y = m * &x;
        let norm = y.norm();
        if norm == 0.0 {
            return 0.0;
        }
        log_growth.push(norm.ln());
        x = y / norm;
        if k >= 20 && k % 10 == 0 {
            let half = &log_growth[log_growth.len() / 2..];
            let est = (half.iter().sum::<f64>() / half.len() as f64).exp();
            if (est - last).abs() < tol {
                return est;
            }
            last = est;
        }
    }
    let half = &log_growth[log_growth.len() / 2..];
    (half.iter().sum::<f64>() / half.len() as f64).exp()
}

/// Default guard settings: 200 iterations, tolerance `1e-8`.
pub fn grover_spectral_radius(g: &Graph, p: &CoinParams) -> f64 {
    spectral_radius(&build_generalized_grover(g, p).matrix, 200, 1e-8)
}

/// Checks the real positive branch for the vertex-transitive forms: every
/// factor `(1 + σu²) - ημu` and `1 - b²u²` must be strictly positive.
fn vt_domain(g: &Graph, p: &CoinParams, u: f64) -> Result<(f64, f64, f64, Vec<f64>)> {
    if !g.is_vertex_transitive() {
        return Err(Error::UnsupportedGraph(g.name().to_string()));
    }
    let (q, eta, sigma) = regular_constants(g, p)?;
    let pre = 1.0 - p.b() * p.b() * u * u;
    if pre <= 0.0 {
        return Err(Error::OutsideDomain(format!("1 - b²u² = {pre} <= 0")));
    }
    let spectrum = transition_spectrum(g);
    if let Some(mu) = spectrum
        .iter()
        .find(|&&mu| 1.0 + sigma * u * u - eta * mu * u <= 0.0)
    {
        return Err(Error::OutsideDomain(format!(
            "factor non-positive at μ = {mu}"
        )));
    }
    Ok((q, eta, sigma, spectrum))
}

/// `ζ_{a,b}(G, u)^{-1} = (1 - b²u²)^{(q-1)/2} exp[(1/n) Σ_μ log((1 + σu²) - ημu)]`
/// for vertex-transitive regular graphs and real `u` inside the positive
/// branch.
pub fn generalized_zeta_reciprocal(g: &Graph, p: &CoinParams, u: f64) -> Result<f64> {
    let (q, eta, sigma, spectrum) = vt_domain(g, p, u)?;
    let mean_log = spectrum
        .iter()
        .map(|&mu| (1.0 + sigma * u * u - eta * mu * u).ln())
        .sum::<f64>()
        / g.n() as f64;
    Ok((1.0 - p.b() * p.b() * u * u).powf((q - 1.0) / 2.0) * mean_log.exp())
}

/// The same over `Spec(Δ)`.
pub fn generalized_zeta_reciprocal_laplacian(g: &Graph, p: &CoinParams, u: f64) -> Result<f64> {
    let (q, eta, sigma, _) = vt_domain(g, p, u)?;
    let base = 1.0 - eta * u + sigma * u * u;
    let spectrum = laplacian_spectrum(g);
    let mut mean_log = 0.0;
    for &lam in &spectrum {
        let f = base + eta * u * lam / (q + 1.0);
        if f <= 0.0 {
            return Err(Error::OutsideDomain(format!(
                "factor non-positive at λ = {lam}"
            )));
        }
        mean_log += f.ln();
    }
    mean_log /= g.n() as f64;
    Ok((1.0 - p.b() * p.b() * u * u).powf((q - 1.0) / 2.0) * mean_log.exp())
}

/// `Z_{a,b}(G, u)^{-1/n}` from the `2m × 2m` determinant via real logs.
/// Requires a strictly positive determinant.
pub fn generalized_zeta_reciprocal_det(g: &Graph, p: &CoinParams, u: f64) -> Result<f64> {
    zeta_reciprocal_log_det(g, p, c(u))
        .positive_root(g.n())
        .ok_or_else(|| Error::OutsideDomain(format!("det(I - uŨ) not positive at u = {u}")))
}

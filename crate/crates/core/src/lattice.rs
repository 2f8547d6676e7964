//! Torus zeta values and their `N → ∞` limits.
//!
//! On `T^d_N` the spectrum of `P` is `{(1/d) Σ_j cos(2πk_j/N)}`, so
//! `ζ_{a,b}(T^d_N, u)^{-1}` is `(1 - b²u²)^{d-1} exp(I_N)` where `I_N` is the
//! `N`-point tensor rectangle rule applied to
//!
//! ```text
//! f(θ) = log((1 + σu²) - (ηu/d) Σ_j cos θ_j)
//! ```
//!
//! over the uniform measure on `[0, 2π)^d`. The limit replaces `I_N` by the
//! integral itself, which the same rule approximates with geometric
//! convergence because `f` is smooth and periodic.
//!
//! Grid sums run over outer-axis slabs in parallel; each slab uses a
//! compensated sum in a fixed order and slabs are merged in index order, so
//! results do not depend on the number of worker threads.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_cycle, Graph};
use crate::grover::{build_generalized_grover, positive_support, CoinParams};
use crate::linalg::CompensatedSum;

/// Torus dimension together with coin parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusParams {
    pub d: usize,
    pub coin: CoinParams,
}

impl TorusParams {
    pub fn new(d: usize, coin: CoinParams) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "torus dimension must be >= 1".into(),
            ));
        }
        Ok(TorusParams { d, coin })
    }

    /// `η = 2(1 - d)a + 2db`.
    pub fn eta(&self) -> f64 {
        let d = self.d as f64;
        2.0 * (1.0 - d) * self.coin.a() + 2.0 * d * self.coin.b()
    }

    /// `σ = b(2a - b) + 2db(b - a)`.
    pub fn sigma(&self) -> f64 {
        let (a, b, d) = (self.coin.a(), self.coin.b(), self.d as f64);
        b * (2.0 * a - b) + 2.0 * d * b * (b - a)
    }

    /// `(1 - b²u²)^{d-1}`.
    pub fn prefactor(&self, u: f64) -> f64 {
        let b = self.coin.b();
        (1.0 - b * b * u * u).powi(self.d as i32 - 1)
    }

    /// `(1 + σu², ηu/d)`: the integrand is `log(α - β Σ cos θ_j)`.
    fn integrand(&self, u: f64) -> (f64, f64) {
        (1.0 + self.sigma() * u * u, self.eta() * u / self.d as f64)
    }

    fn check_prefactor(&self, u: f64) -> Result<()> {
        let b = self.coin.b();
        if 1.0 - b * b * u * u <= 0.0 {
            return Err(Error::OutsideDomain(format!(
                "1 - b²u² <= 0 at b = {b}, u = {u}"
            )));
        }
        Ok(())
    }
}

/// Outcome of the limit quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub grid_points_per_axis: usize,
    /// Difference between the last two grid doublings.
    pub error_estimate: f64,
    pub converged: bool,
}

/// Mean of `log(α - β Σ_j cos(2πk_j/N))` over `k ∈ {0..N-1}^d`.
fn rectangle_mean_log(d: usize, n: usize, alpha: f64, beta: f64) -> Result<f64> {
    let cosines: Vec<f64> = (0..n)
        .map(|k| (2.0 * PI * k as f64 / n as f64).cos())
        .collect();
    let inner = n.pow(d as u32 - 1);
    let slabs: Vec<Result<CompensatedSum>> = (0..n)
        .into_par_iter()
        .map(|outer| {
            let mut acc = CompensatedSum::default();
            let mut idx = vec![0usize; d - 1];
            for _ in 0..inner {
                let s = cosines[outer] + idx.iter().map(|&k| cosines[k]).sum::<f64>();
                let arg = alpha - beta * s;
                if arg <= 0.0 {
                    return Err(Error::OutsideDomain(format!(
                        "log argument {arg} <= 0 on the grid"
                    )));
                }
                acc.add(arg.ln());
                for k in idx.iter_mut() {
                    *k += 1;
                    if *k < n {
                        break;
                    }
                    *k = 0;
                }
            }
            Ok(acc)
        })
        .collect();
    let mut total = CompensatedSum::default();
    for slab in slabs {
        total.merge(slab?);
    }
    Ok(total.total() / n.pow(d as u32) as f64)
}

/// `ζ_{a,b}(T^d_N, u)^{-1}` from the closed-form torus spectrum.
pub fn torus_zeta_reciprocal_finite(d: usize, n: usize, p: &CoinParams, u: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "torus needs N >= 3, got {n}"
        )));
    }
    let tp = TorusParams::new(d, *p)?;
    tp.check_prefactor(u)?;
    let (alpha, beta) = tp.integrand(u);
    Ok(tp.prefactor(u) * rectangle_mean_log(d, n, alpha, beta)?.exp())
}

/// Largest grid per axis: `2^12` for `d <= 2`, `2^8` for `d = 3`, and
/// `2^⌊24/d⌋` (at least 16) beyond.
pub fn max_grid(d: usize) -> usize {
    1 << (24 / d).clamp(4, 12)
}

/// `lim_{N→∞} ζ_{a,b}(T^d_N, u)^{-1}` by the tensor rectangle rule, doubling
/// `N` from 8 until successive values differ by at most `tol`.
pub fn torus_limit_integral(
    d: usize,
    p: &CoinParams,
    u: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let tp = TorusParams::new(d, *p)?;
    tp.check_prefactor(u)?;
    let (alpha, beta) = tp.integrand(u);
    let worst = alpha - (tp.eta() * u).abs();
    if worst <= 0.0 {
        return Err(Error::OutsideDomain(format!(
            "(1 + σu²) - |ηu| = {worst} <= 0"
        )));
    }
    let pre = tp.prefactor(u);
    let mut n = 8;
    let mut prev = pre * rectangle_mean_log(d, n, alpha, beta)?.exp();
    if beta == 0.0 {
        return Ok(QuadratureResult {
            value: prev,
            grid_points_per_axis: n,
            error_estimate: 0.0,
            converged: true,
        });
    }
    let cap = max_grid(d);
    while n < cap {
        n *= 2;
        let next = pre * rectangle_mean_log(d, n, alpha, beta)?.exp();
        let err = (next - prev).abs();
        if err <= tol {
            return Ok(QuadratureResult {
                value: next,
                grid_points_per_axis: n,
                error_estimate: err,
                converged: true,
            });
        }
        prev = next;
        if n >= cap {
            return Err(Error::NoConvergence {
                best: next,
                error_estimate: err,
                grid: n,
            });
        }
    }
    unreachable!("grid cap is at least 16")
}

/// One line of a convergence table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub finite: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceTable {
    pub limit: QuadratureResult,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    /// Gaps strictly decrease from row to row.
    pub fn strictly_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].gap < w[0].gap)
    }

    /// Gaps never increase after the first row.
    pub fn non_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].gap <= w[0].gap)
    }
}

/// Finite-torus values against the quadrature limit for each `N`.
pub fn torus_convergence_table(
    d: usize,
    p: &CoinParams,
    u: f64,
    sizes: &[usize],
    tol: f64,
) -> Result<ConvergenceTable> {
    let limit = torus_limit_integral(d, p, u, tol)?;
    let rows = sizes
        .iter()
        .map(|&n| {
            Ok(ConvergenceRow {
                n,
                finite: torus_zeta_reciprocal_finite(d, n, p, u)?,
                gap: torus_gap(d, n, p, u, limit.value)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceTable { limit, rows })
}

/// `log(1 - ρ^N)` where `ρ = β / (c + sqrt(c² - β²))`, so that the N-point
/// rule of `log(c - β cos θ)` exceeds its mean by `(2/N)` times this value.
fn one_axis_excess(c: f64, beta: f64, n: usize) -> f64 {
    let rho = beta / (c + (c * c - beta * beta).sqrt());
    (-rho.powi(n as i32)).ln_1p()
}

/// `I_N - I` for the log-integrand on one or two axes, evaluated without
/// subtracting nearly equal numbers. On two axes symmetry gives
/// `I_N - I = (2/N) (R_N[g] + ∫g)` with `g(θ) = log(1 - ρ(α - β cos θ)^N)`,
/// and `g` has one sign, so both terms keep full relative precision.
fn rule_excess(d: usize, n: usize, alpha: f64, beta: f64) -> Option<f64> {
    let scale = 2.0 / n as f64;
    match d {
        1 => Some(scale * one_axis_excess(alpha, beta, n)),
        2 => {
            let mean_g = |points: usize| {
                let mut acc = CompensatedSum::default();
                for k in 0..points {
                    let c = alpha - beta * (2.0 * PI * k as f64 / points as f64).cos();
                    acc.add(one_axis_excess(c, beta, n));
                }
                acc.total() / points as f64
            };
            let mut points = 64;
            let mut integral = mean_g(points);
            while points < 1 << 16 {
                points *= 2;
                let next = mean_g(points);
                let settled = (next - integral).abs() <= 1e-15 * next.abs();
                integral = next;
                if settled {
                    break;
                }
            }
            Some(scale * (mean_g(n) + integral))
        }
        _ => None,
    }
}

/// `|ζ(T^d_N)^{-1} - limit|` given the limit value. For `d <= 2` the gap is
/// computed from the exact rule error, which stays accurate far below the
/// spacing of doubles near the limit; for `d >= 3` it is the plain difference.
pub fn torus_gap(d: usize, n: usize, p: &CoinParams, u: f64, limit: f64) -> Result<f64> {
    let tp = TorusParams::new(d, *p)?;
    tp.check_prefactor(u)?;
    let (alpha, beta) = tp.integrand(u);
    match rule_excess(d, n, alpha, beta) {
        Some(excess) => Ok(limit * excess.exp_m1().abs()),
        None => Ok((torus_zeta_reciprocal_finite(d, n, p, u)? - limit).abs()),
    }
}

/// `Ũ(1,1)` coincides with its positive support on `g`.
pub fn grover_equals_positive_support(g: &Graph) -> bool {
    let u = build_generalized_grover(g, &CoinParams::GROVER).matrix;
    positive_support(&u) == u
}

/// On the cycle `C_N` the Grover matrix is already a 0/1 matrix.
pub fn d1_collapse_check(n: usize) -> Result<bool> {
    Ok(grover_equals_positive_support(&build_cycle(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_petersen;

    #[test]
    fn torus_constants_match_regular_ones() {
        for d in 1..=4 {
            for a in [0.0, 0.25, 0.5, 1.0] {
                for b in [-2.0, -0.4, 0.5, 1.0, 1.7] {
                    let p = CoinParams::new(a, b).unwrap();
                    let tp = TorusParams::new(d, p).unwrap();
                    let q = 2.0 * d as f64 - 1.0;
                    assert!((tp.eta() - p.eta(q)).abs() < 1e-12);
                    assert!((tp.sigma() - p.sigma(q)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn integrand_coefficients() {
        // a = 0, b = 1, d = 2: (1 + 3u²) - 2u Σ cos
        let tp = TorusParams::new(2, CoinParams::POSITIVE_SUPPORT).unwrap();
        assert_eq!((tp.sigma(), tp.eta() / 2.0), (3.0, 2.0));
        // a = b = 1: (1 + u²) - (2u/d) Σ cos
        for d in 1..=3 {
            let tp = TorusParams::new(d, CoinParams::GROVER).unwrap();
            assert_eq!((tp.sigma(), tp.eta()), (1.0, 2.0));
        }
    }

    #[test]
    fn unit_at_zero() {
        let p = CoinParams::new(0.4, 1.3).unwrap();
        assert_eq!(torus_zeta_reciprocal_finite(2, 5, &p, 0.0).unwrap(), 1.0);
        let q = torus_limit_integral(2, &p, 0.0, 1e-12).unwrap();
        assert_eq!(q.value, 1.0);
        assert!(q.converged);
        assert_eq!(q.grid_points_per_axis, 8);
    }

    #[test]
    fn guards() {
        let p = CoinParams::GROVER;
        assert!(matches!(
            torus_limit_integral(2, &p, 1.0, 1e-10),
            Err(Error::OutsideDomain(_))
        ));
        assert!(matches!(
            torus_zeta_reciprocal_finite(2, 4, &p, 1.2),
            Err(Error::OutsideDomain(_))
        ));
        assert!(torus_zeta_reciprocal_finite(2, 2, &p, 0.1).is_err());
        assert!(torus_limit_integral(2, &p, 0.1, 0.0).is_err());
    }

    #[test]
    fn collapse_only_for_cycles() {
        assert!(d1_collapse_check(3).unwrap());
        assert!(d1_collapse_check(10).unwrap());
        assert!(!grover_equals_positive_support(&build_petersen()));
    }

    #[test]
    fn thread_count_does_not_change_sums() {
        let p = CoinParams::new(0.5, 0.8).unwrap();
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let wide = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let a = serial.install(|| torus_zeta_reciprocal_finite(3, 12, &p, 0.1).unwrap());
        let b = wide.install(|| torus_zeta_reciprocal_finite(3, 12, &p, 0.1).unwrap());
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn exact_gap_matches_plain_difference_when_resolvable() {
        for (d, a, b, u) in [
            (1, 0.3, -0.4, 0.3),
            (1, 1.0, 1.0, 0.4),
            (2, 0.0, 1.0, 0.1),
            (2, 1.0, 1.0, 0.2),
            (2, 0.5, -1.5, 0.15),
        ] {
            let p = CoinParams::new(a, b).unwrap();
            let limit = torus_limit_integral(d, &p, u, 1e-14).unwrap().value;
            for n in 3..=6 {
                let plain = (torus_zeta_reciprocal_finite(d, n, &p, u).unwrap() - limit).abs();
                let exact = torus_gap(d, n, &p, u, limit).unwrap();
                assert!(plain > 1e-8, "case too close to resolve: {plain}");
                assert!(
                    (plain - exact).abs() <= 1e-6 * plain,
                    "d={d} N={n}: {plain} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn exact_gaps_keep_shrinking_below_rounding() {
        let p = CoinParams::POSITIVE_SUPPORT;
        let limit = torus_limit_integral(2, &p, 0.1, 1e-10).unwrap().value;
        let gaps: Vec<f64> = [4, 8, 16, 32, 64]
            .iter()
            .map(|&n| torus_gap(2, n, &p, 0.1, limit).unwrap())
            .collect();
        assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
        assert!(gaps[4] > 0.0);
    }
}

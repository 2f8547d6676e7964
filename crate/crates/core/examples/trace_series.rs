//! Weighted cycle sums N_r by brute force against tr(Ũ^r), and the truncated
//! log series against 1 / det(I - uŨ).
//!
//! cargo run --example trace_series

use grover_zeta::graph::build_complete;
use grover_zeta::oracle::brute_n_r;
use grover_zeta::zeta::{
    grover_spectral_radius, log_zeta_series, series_tail_bound, zeta_reciprocal_det,
};
use grover_zeta::{CoinParams, Complex64};

fn main() -> grover_zeta::Result<()> {
    let g = build_complete(4)?;
    let p = CoinParams::new(0.7, 0.5)?;
    let series = log_zeta_series(&g, &p, 20)?;
    println!(" r  brute N_r              tr(Ũ^r)");
    for r in 1..=6 {
        println!(
            "{r:>2}  {:<22.15} {:.15}",
            brute_n_r(&g, &p, r)?,
            series.trace(r)
        );
    }

    let rho = grover_spectral_radius(&g, &p);
    let u = Complex64::new(0.1, 0.05);
    let from_series = series.value(u);
    let from_det = zeta_reciprocal_det(&g, &p, u).inv();
    let tail = series_tail_bound(g.arc_count(), rho, u.norm(), series.order());
    println!("\nρ(Ũ) = {rho:.6}, u = {u}");
    println!("series (order {}) = {from_series:.15}", series.order());
    println!("1/det           = {from_det:.15}");
    println!(
        "difference {:.2e}, tail bound on the log {tail:.2e}",
        (from_series - from_det).norm()
    );
    Ok(())
}

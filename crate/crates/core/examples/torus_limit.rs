//! Finite torus values converging to the N → ∞ limit integral.
//!
//! cargo run --release --example torus_limit -- [d] [a] [b] [u]

use grover_zeta::lattice::{torus_convergence_table, TorusParams};
use grover_zeta::CoinParams;

fn main() -> grover_zeta::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, default: f64| {
        args.get(i)
            .map_or(default, |s| s.parse().expect("numeric argument"))
    };
    let d = num(0, 2.0) as usize;
    let p = CoinParams::new(num(1, 0.0), num(2, 1.0))?;
    let u = num(3, 0.1);

    let tp = TorusParams::new(d, p)?;
    println!(
        "d = {d}, a = {}, b = {}, u = {u}: η = {}, σ = {}",
        p.a(),
        p.b(),
        tp.eta(),
        tp.sigma()
    );
    let table = torus_convergence_table(d, &p, u, &[4, 8, 16, 32, 64], 1e-12)?;
    println!(
        "limit {:.17} (grid {}, error estimate {:.1e})",
        table.limit.value, table.limit.grid_points_per_axis, table.limit.error_estimate
    );
    for row in &table.rows {
        println!("N = {:>3}  {:.17}  gap {:.3e}", row.n, row.finite, row.gap);
    }
    println!("gaps strictly decreasing: {}", table.strictly_decreasing());
    Ok(())
}

//! Closed-form spectrum of Ũ(a, b) on a regular graph against a dense
//! eigensolver.
//!
//! cargo run --example grover_spectrum -- [a] [b]

use grover_zeta::graph::build_petersen;
use grover_zeta::grover::{
    build_generalized_grover, numerical_spectrum, spectrum_closed_form, CoinParams,
};
use grover_zeta::matrices::transition_spectrum;
use grover_zeta::Complex64;

fn main() -> grover_zeta::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("numeric argument"))
        .collect();
    let p = CoinParams::new(*args.first().unwrap_or(&0.3), *args.get(1).unwrap_or(&-0.4))?;
    let g = build_petersen();

    let closed = spectrum_closed_form(&g, &p, &transition_spectrum(&g))?;
    let dense = numerical_spectrum(&build_generalized_grover(&g, &p))?;
    println!(
        "Petersen, a = {}, b = {}: {} eigenvalues",
        p.a(),
        p.b(),
        closed.dim()
    );
    for z in closed.values() {
        println!("  {:>10.6} {:+.6}i  |λ| = {:.6}", z.re, z.im, z.norm());
    }
    println!(
        "max pairing distance to dense: {:.2e}",
        closed.distance(&dense).unwrap()
    );
    let b = Complex64::new(p.b(), 0.0);
    println!(
        "near +b: {}, near -b: {} (m - n = {})",
        dense.count_near(b, 1e-6),
        dense.count_near(-b, 1e-6),
        g.m() - g.n()
    );
    Ok(())
}

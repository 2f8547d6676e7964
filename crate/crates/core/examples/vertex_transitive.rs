//! On vertex-transitive graphs the closed-form ζ_{a,b}^{-1} is the n-th root
//! of det(I - uŨ).
//!
//! cargo run --example vertex_transitive

use grover_zeta::graph::{build_circulant, build_complete, build_torus};
use grover_zeta::zeta::{
    generalized_zeta_reciprocal, generalized_zeta_reciprocal_det,
    generalized_zeta_reciprocal_laplacian,
};
use grover_zeta::CoinParams;

fn main() -> grover_zeta::Result<()> {
    let p = CoinParams::new(0.5, 0.5)?;
    let u = 0.15;
    println!("a = {}, b = {}, u = {u}", p.a(), p.b());
    for g in [
        build_circulant(9, &[1, 2, 4])?,
        build_complete(6)?,
        build_torus(2, 5)?,
    ] {
        let over_p = generalized_zeta_reciprocal(&g, &p, u)?;
        let over_laplacian = generalized_zeta_reciprocal_laplacian(&g, &p, u)?;
        let root = generalized_zeta_reciprocal_det(&g, &p, u)?;
        println!(
            "{:<18} Spec(P) {over_p:.15}  Spec(Δ) {over_laplacian:.15}  det^(1/n) {root:.15}",
            g.name()
        );
    }
    Ok(())
}

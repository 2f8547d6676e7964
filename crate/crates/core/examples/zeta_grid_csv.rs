//! Evaluates det(I - uŨ) over an (a, b, u) grid and writes CSV to stdout.
//!
//! cargo run --example zeta_grid_csv > grid.csv

use grover_zeta::graph::build_petersen;
use grover_zeta::zeta::zeta_reciprocal_det;
use grover_zeta::{CoinParams, Complex64};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = build_petersen();
    let mut out = csv::Writer::from_writer(std::io::stdout().lock());
    out.write_record(["graph", "a", "b", "u", "z_inv_re", "z_inv_im"])?;
    for a in [0.0, 0.5, 1.0] {
        for b in [-1.0, 0.5, 1.0] {
            let p = CoinParams::new(a, b)?;
            for u in [0.0, 0.05, 0.1, 0.15, 0.2] {
                let z = zeta_reciprocal_det(&g, &p, Complex64::new(u, 0.0));
                out.write_record([
                    g.name().to_string(),
                    a.to_string(),
                    b.to_string(),
                    u.to_string(),
                    format!("{:?}", z.re),
                    format!("{:?}", z.im),
                ])?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

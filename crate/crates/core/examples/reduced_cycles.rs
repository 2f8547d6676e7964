//! Reduced closed walks from a vertex, counted by enumeration, against
//! tr((U⁺)^r) / n on vertex-transitive graphs.
//!
//! cargo run --example reduced_cycles

use grover_zeta::graph::{build_complete, build_petersen, build_torus};
use grover_zeta::oracle::count_reduced_based_cycles;
use grover_zeta::zeta::log_zeta_series;
use grover_zeta::CoinParams;

fn main() -> grover_zeta::Result<()> {
    for g in [build_complete(4)?, build_petersen(), build_torus(2, 3)?] {
        let series = log_zeta_series(&g, &CoinParams::POSITIVE_SUPPORT, 8)?;
        println!("{}", g.name());
        for r in 3..=8 {
            let counted = count_reduced_based_cycles(&g, 0, r)?;
            println!(
                "  r = {r}: enumerated {counted:>5}, trace / n {:>10.4}",
                series.trace(r) / g.n() as f64
            );
        }
    }
    Ok(())
}

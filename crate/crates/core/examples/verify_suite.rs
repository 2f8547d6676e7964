//! Runs every identity check and summarizes failures and worst errors.
//!
//! cargo run --release --example verify_suite

use std::collections::BTreeMap;

use grover_zeta::verify::{run_suite, Suite, SuiteOptions};

fn main() -> grover_zeta::Result<()> {
    let reports = run_suite(Suite::All, &SuiteOptions::default())?;
    let mut by_identity: BTreeMap<&str, (usize, usize, f64, f64)> = BTreeMap::new();
    for r in &reports {
        let e = by_identity.entry(r.identity.as_str()).or_default();
        e.0 += 1;
        e.1 += usize::from(!r.pass);
        e.2 = e.2.max(r.rel_err);
        e.3 = e.3.max(r.abs_err);
    }
    println!(
        "{:<24} {:>7} {:>6} {:>10} {:>10}",
        "identity", "reports", "failed", "max rel", "max abs"
    );
    for (id, (n, failed, rel, abs)) in by_identity {
        println!("{id:<24} {n:>7} {failed:>6} {rel:>10.2e} {abs:>10.2e}");
    }
    if let Some(r) = reports.iter().find(|r| !r.pass) {
        println!("first failure: {}", r.to_json());
    }
    Ok(())
}

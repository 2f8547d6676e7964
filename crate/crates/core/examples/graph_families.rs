//! Builds each graph family, prints its size and regularity, and writes one
//! to a JSON graph file.
//!
//! cargo run --example graph_families

use grover_zeta::graph::{
    build_circulant, build_complete, build_cycle, build_petersen, build_random_connected,
    build_random_regular, build_torus,
};
use grover_zeta::Graph;

fn main() -> grover_zeta::Result<()> {
    let graphs: Vec<Graph> = vec![
        build_cycle(6)?,
        build_torus(2, 4)?,
        build_torus(3, 3)?,
        build_circulant(9, &[1, 2, 4])?,
        build_complete(5)?,
        build_petersen(),
        build_random_regular(12, 3, 7)?,
        build_random_connected(8, 0.4, 7)?,
    ];
    println!(
        "{:<24} {:>4} {:>4} {:>8} {:>6}",
        "graph", "n", "m", "regular", "betti"
    );
    for g in &graphs {
        let regular = g
            .regular_degree()
            .map_or("-".to_string(), |k| k.to_string());
        println!(
            "{:<24} {:>4} {:>4} {:>8} {:>6}",
            g.name(),
            g.n(),
            g.m(),
            regular,
            g.betti()
        );
    }

    let path = std::env::temp_dir().join("torus_2_4.json");
    graphs[1].write_json(&path)?;
    let back = Graph::read_json(&path)?;
    println!(
        "\nwrote {} and read back n={} m={}",
        path.display(),
        back.n(),
        back.m()
    );
    Ok(())
}

//! Degree, links, diameter and topological cost for the three families,
//! with the diameter verified by BFS.

use teh_net::{build_graph, diameter_bfs, metrics_report, DiameterConvention, NetworkSpec};

fn main() -> teh_net::Result<()> {
    let specs = [
        NetworkSpec::hypercube(1024)?,
        NetworkSpec::torus(32, 32)?,
        NetworkSpec::teh(16, 16, 4)?,
        NetworkSpec::teh(8, 8, 16)?,
    ];
    println!(
        "{:<18} {:>6} {:>6} {:>7} {:>8} {:>9}",
        "network", "nodes", "degree", "links", "diameter", "cost"
    );
    for spec in &specs {
        let r = metrics_report(spec, DiameterConvention::Exact);
        let bfs = diameter_bfs(&build_graph(spec)?)?;
        assert_eq!(bfs, r.diameter);
        println!(
            "{:<18} {:>6} {:>6} {:>7} {:>8} {:>9}",
            spec.to_string(),
            r.nodes,
            r.degree,
            r.links,
            r.diameter,
            r.cost
        );
    }
    Ok(())
}

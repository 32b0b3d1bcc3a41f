//! Seeded fault injection and the Monte-Carlo connectivity estimate.

use teh_net::reliability::antipode;
use teh_net::{build_graph, inject_faults, monte_carlo_connectivity, NetworkSpec};

fn main() -> teh_net::Result<()> {
    let spec = NetworkSpec::teh(4, 4, 8)?;
    let topology = build_graph(&spec)?;
    let target = antipode(&spec);

    let scenario = inject_faults(&topology, 40, 10, 42)?;
    println!(
        "seed 42: {} failed links, {} failed nodes, node 0 reaches {} ({}): {}",
        scenario.failed_links.len(),
        scenario.failed_nodes.len(),
        target,
        spec.decode(target)?,
        scenario.connected(&topology, 0, target)
    );

    for f in 0..=7 {
        let estimate = monte_carlo_connectivity(&spec, f, 1000, 7)?;
        println!("f = {f}: connectivity {estimate:.3}");
    }
    Ok(())
}

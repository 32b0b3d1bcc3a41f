//! Growing a network by enlarging the torus versus enlarging the hypercube.

use teh_net::{scaling_sequence, NetworkSpec, ScalingMode};

fn main() -> teh_net::Result<()> {
    let base = NetworkSpec::teh(4, 4, 16)?;
    for mode in [ScalingMode::ExpandTorus, ScalingMode::ExpandHypercube] {
        println!("{mode} expansion from {base}");
        for step in scaling_sequence(mode, &base, 4)? {
            println!(
                "  {:<16} nodes {:>6}  degree {:>2}  existing nodes rewired: {}",
                step.spec.to_string(),
                step.spec.node_count(),
                step.degree,
                step.existing_nodes_reconfigured
            );
        }
    }
    Ok(())
}

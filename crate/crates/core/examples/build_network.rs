//! Builds the (2, 2, 8) network, lists a node's neighbors and writes the
//! graph as DOT.
//!
//! ```bash
//! cargo run -p teh-net --example build_network > teh_2_2_8.dot
//! ```

use teh_net::{build_graph, export_topology, neighbors, ExportFormat, NetworkSpec, NodeAddress};

fn main() -> teh_net::Result<()> {
    let spec = NetworkSpec::teh(2, 2, 8)?;
    let topology = build_graph(&spec)?;
    eprintln!(
        "{spec}: {} nodes, {} links",
        topology.node_count(),
        topology.edge_count()
    );

    let origin = NodeAddress::new(0, 0, 0);
    for (addr, kind) in neighbors(&spec, origin)? {
        eprintln!("  {origin} -- {addr}  {kind}");
    }

    let dot = export_topology(&topology, ExportFormat::Dot)?;
    print!("{}", String::from_utf8_lossy(&dot));
    Ok(())
}

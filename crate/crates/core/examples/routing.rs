//! Routes between two nodes with the elementary moves and cross-checks
//! the hop count against breadth-first search.

use teh_net::{bfs_distance, build_graph, distance_closed, route, NetworkSpec, NodeAddress};

fn main() -> teh_net::Result<()> {
    let spec = NetworkSpec::teh(4, 4, 8)?;
    let src = NodeAddress::new(0, 3, 1);
    let dst = NodeAddress::new(2, 0, 6);

    let path = route(&spec, src, dst)?;
    println!("{src} -> {dst} in {spec}");
    for (hop, mv) in path.hops().iter().skip(1).zip(path.moves()) {
        println!("  {mv:<11} -> {hop}  k={}", spec.label_bits(hop.k));
    }

    let topology = build_graph(&spec)?;
    println!(
        "moves {}, closed-form distance {}, BFS distance {}",
        path.len(),
        distance_closed(&spec, src, dst)?,
        bfs_distance(&topology, src, dst)?
    );
    Ok(())
}

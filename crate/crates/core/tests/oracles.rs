//! Closed forms checked against breadth-first search on explicit graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use teh_net::metrics::{diameter_all_pairs, ALL_PAIRS_CAP};
use teh_net::routing::bfs_levels;
use teh_net::*;

fn grid(sides: &[usize], cubes: &[usize]) -> Vec<NetworkSpec> {
    let mut out = Vec::new();
    for &l in sides {
        for &m in sides {
            for &n in cubes {
                out.push(NetworkSpec::teh(l, m, n).unwrap());
            }
        }
    }
    out
}

#[test]
fn degree_is_constant_on_large_rings() {
    for spec in grid(&[3, 4, 5], &[1, 2, 4, 8]) {
        let t = build_graph(&spec).unwrap();
        let want = 4 + spec.cube_dim() as usize;
        assert!((0..t.node_count()).all(|v| t.degree(v) == want), "{spec}");
    }
}

#[test]
fn diameter_grid_with_transitive_shortcut() {
    for spec in grid(&[3, 4, 5, 6], &[1, 2, 4, 8]) {
        let t = build_graph(&spec).unwrap();
        assert_eq!(diameter_bfs(&t).unwrap(), diameter_closed(&spec), "{spec}");
    }
}

#[test]
fn diameter_on_short_rings() {
    for spec in grid(&[1, 2, 3], &[1, 2, 8]) {
        let t = build_graph(&spec).unwrap();
        assert_eq!(
            diameter_all_pairs(&t, ALL_PAIRS_CAP).unwrap(),
            diameter_closed(&spec),
            "{spec}"
        );
    }
}

#[test]
fn sampled_routes_on_larger_networks() {
    let mut rng = ChaCha8Rng::seed_from_u64(2009);
    for spec in [
        NetworkSpec::teh(8, 8, 16).unwrap(),
        NetworkSpec::teh(16, 16, 8).unwrap(),
        NetworkSpec::teh(7, 12, 4).unwrap(),
    ] {
        let t = build_graph(&spec).unwrap();
        let mut sources: Vec<usize> = (0..20)
            .map(|_| rng.gen_range(0..spec.node_count()))
            .collect();
        sources.sort_unstable();
        sources.dedup();
        let mut checked = 0;
        for &s in &sources {
            let levels = bfs_levels(&t, s);
            let src = spec.decode(s).unwrap();
            for _ in 0..(1000 / sources.len() + 1) {
                let d = rng.gen_range(0..spec.node_count());
                let dst = spec.decode(d).unwrap();
                let path = route(&spec, src, dst).unwrap();
                assert!(path.is_valid());
                assert_eq!(Some(path.len()), levels[d], "{spec}: {src} -> {dst}");
                assert_eq!(path.len(), distance_closed(&spec, src, dst).unwrap());
                checked += 1;
            }
        }
        assert!(checked >= 1000);
    }
}

#[test]
fn bfs_distance_reports_unreachable_on_faulted_graph() {
    let t = build_graph(&NetworkSpec::teh(3, 3, 2).unwrap()).unwrap();
    let incident: Vec<_> = t
        .incident_edges(0)
        .into_iter()
        .map(|i| t.edges()[i])
        .collect();
    let scenario = FaultScenario {
        spec: *t.spec(),
        failed_links: incident,
        failed_nodes: vec![],
        seed: 0,
    };
    assert!(!scenario.connected(&t, 0, 10));
    assert_eq!(
        bfs_distance(&t, NodeAddress::new(0, 0, 0), NodeAddress::new(1, 1, 1)),
        Ok(3)
    );
}

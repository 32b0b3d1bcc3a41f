//! Torus embedded hypercube interconnection networks.
//!
//! An `(l, m, N)` network is `N` concurrent `l x m` tori whose nodes at the
//! same torus position form an `N`-node hypercube. This crate builds these
//! networks (and plain hypercubes and tori in the same frame), routes
//! through them, and computes link counts, diameter, topological cost and
//! reliability, each checked against brute-force graph search.
//!
//! ```
//! use teh_net::{build_graph, metrics_report, DiameterConvention, NetworkSpec};
//!
//! let spec = NetworkSpec::teh(4, 4, 8).unwrap();
//! let report = metrics_report(&spec, DiameterConvention::Exact);
//! assert_eq!((report.degree, report.links, report.diameter), (7, 448, 7));
//! assert_eq!(build_graph(&spec).unwrap().edge_count(), 448);
//! ```

pub mod check;
pub mod cli;
pub mod error;
pub mod export;
pub mod metrics;
pub mod reliability;
pub mod routing;
pub mod spec;
pub mod tables;
pub mod topology;

pub use error::{Error, Result};
pub use export::{export_topology, ExportFormat};
pub use metrics::{
    diameter_bfs, diameter_closed, link_count_closed, metrics_report, paper_square_torus_diameter,
    topological_cost, DiameterConvention, MetricsReport,
};
pub use reliability::{
    inject_faults, monte_carlo_connectivity, reliability_percent, reliability_table,
    unreliability_percent, FaultScenario, Percent, ReliabilityRow, ReliabilityTable,
};
pub use routing::{apply_move, bfs_distance, distance_closed, route, Move, Path};
pub use spec::{decode_address, encode_address, validate_spec, Family, NetworkSpec, NodeAddress};
pub use tables::{
    figure_data, scaling_sequence, table1_rows, table2_rows, table3_grid, ComparisonRow, Figure,
    Network, ScalingMode, ScalingStep,
};
pub use topology::{build_graph, neighbors, EdgeKind, Topology};

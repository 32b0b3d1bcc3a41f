//! Degree, link count, diameter and topological cost.
//!
//! Closed forms assume rings of length at least 3. Topological cost is
//! links times diameter.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::routing::bfs_levels;
use crate::spec::{Family, NetworkSpec};
use crate::topology::Topology;

/// Largest graph [`diameter_all_pairs`] accepts by default.
pub const ALL_PAIRS_CAP: usize = 4096;

/// How the torus part of the diameter is measured.
///
/// `PaperSquareApprox` treats the torus part of `P` nodes as a square torus
/// of diameter `2 * floor(sqrt(P) / 2)`, independent of the actual `(l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterConvention {
    Exact,
    PaperSquareApprox,
}

impl DiameterConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            DiameterConvention::Exact => "exact",
            DiameterConvention::PaperSquareApprox => "paper",
        }
    }
}

impl fmt::Display for DiameterConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DiameterConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(DiameterConvention::Exact),
            "paper" => Ok(DiameterConvention::PaperSquareApprox),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Nominal node degree: `n` for a hypercube, 4 for a torus, `4 + n` for the
/// embedded network.
pub fn degree_closed(spec: &NetworkSpec) -> u64 {
    let n = u64::from(spec.cube_dim());
    match spec.family() {
        Family::Hypercube => n,
        Family::Torus => 4,
        Family::Teh => 4 + n,
    }
}

fn ring_degree(len: usize) -> u64 {
    match len {
        1 => 0,
        2 => 1,
        _ => 2,
    }
}

/// Degree in the simple graph, where a ring of two contributes one link.
pub fn simple_degree(spec: &NetworkSpec) -> u64 {
    ring_degree(spec.l()) + ring_degree(spec.m()) + u64::from(spec.cube_dim())
}

pub fn link_count_closed(spec: &NetworkSpec) -> u64 {
    spec.node_count() as u64 * degree_closed(spec) / 2
}

/// Link count of the simple graph; agrees with [`link_count_closed`]
/// whenever `spec.closed_form_exact()`.
pub fn simple_link_count(spec: &NetworkSpec) -> u64 {
    spec.node_count() as u64 * simple_degree(spec) / 2
}

pub fn diameter_closed(spec: &NetworkSpec) -> u64 {
    (spec.l() / 2 + spec.m() / 2) as u64 + u64::from(spec.cube_dim())
}

pub fn paper_square_torus_diameter(torus_nodes: u64) -> u64 {
    2 * (torus_nodes.isqrt() / 2)
}

pub fn diameter_with(spec: &NetworkSpec, convention: DiameterConvention) -> u64 {
    match convention {
        DiameterConvention::Exact => diameter_closed(spec),
        DiameterConvention::PaperSquareApprox => {
            paper_square_torus_diameter(spec.torus_nodes() as u64) + u64::from(spec.cube_dim())
        }
    }
}

pub fn topological_cost(spec: &NetworkSpec, convention: DiameterConvention) -> u64 {
    link_count_closed(spec) * diameter_with(spec, convention)
}

fn eccentricity(topology: &Topology, source: usize) -> Result<u64> {
    let levels = bfs_levels(topology, source);
    let mut worst = 0;
    for (to, d) in levels.into_iter().enumerate() {
        worst = worst.max(d.ok_or(Error::Unreachable { from: source, to })?);
    }
    Ok(worst as u64)
}

/// Maximum BFS eccentricity over every source. Refuses graphs above `cap`.
pub fn diameter_all_pairs(topology: &Topology, cap: usize) -> Result<u64> {
    let nodes = topology.node_count();
    if nodes > cap {
        return Err(Error::ResourceLimit {
            requested: nodes,
            cap,
        });
    }
    (0..nodes).try_fold(0, |acc, s| Ok(acc.max(eccentricity(topology, s)?)))
}

/// BFS diameter. When the translation maps are verified automorphisms of
/// the built edge set, the eccentricity of node 0 is the diameter;
/// otherwise falls back to all pairs under [`ALL_PAIRS_CAP`].
pub fn diameter_bfs(topology: &Topology) -> Result<u64> {
    if topology.translations_are_automorphisms() {
        eccentricity(topology, 0)
    } else {
        diameter_all_pairs(topology, ALL_PAIRS_CAP)
    }
}

pub const METRICS_CSV_HEADER: &str = "family,l,m,N,nodes,degree,links,diameter,cost,convention";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub family: Family,
    pub l: usize,
    pub m: usize,
    #[serde(rename = "N")]
    pub cube_nodes: usize,
    pub nodes: u64,
    pub degree: u64,
    pub links: u64,
    pub diameter: u64,
    pub cost: u64,
    pub convention: DiameterConvention,
    /// False when a ring of length 1 or 2 makes the simple graph smaller
    /// than the closed forms.
    pub closed_form_exact: bool,
    pub simple_degree: u64,
    pub simple_links: u64,
}

pub fn metrics_report(spec: &NetworkSpec, convention: DiameterConvention) -> MetricsReport {
    let links = link_count_closed(spec);
    let diameter = diameter_with(spec, convention);
    MetricsReport {
        family: spec.family(),
        l: spec.l(),
        m: spec.m(),
        cube_nodes: spec.cube_nodes(),
        nodes: spec.node_count() as u64,
        degree: degree_closed(spec),
        links,
        diameter,
        cost: links * diameter,
        convention,
        closed_form_exact: spec.closed_form_exact(),
        simple_degree: simple_degree(spec),
        simple_links: simple_link_count(spec),
    }
}

impl MetricsReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.l,
            self.m,
            self.cube_nodes,
            self.nodes,
            self.degree,
            self.links,
            self.diameter,
            self.cost,
            self.convention
        )
    }
}

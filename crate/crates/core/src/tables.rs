//! Comparison tables across network families, scaling sequences and
//! plot-ready datasets.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{degree_closed, link_count_closed, topological_cost, DiameterConvention};
use crate::reliability::{reliability_table, render_aligned, ReliabilityTable};
use crate::spec::NetworkSpec;
use crate::topology::DEFAULT_NODE_CAP;

/// Processor counts compared in the link and cost tables.
pub const PROCESSOR_COUNTS: [usize; 6] = [512, 1024, 2048, 4096, 8192, 16384];

/// Hypercube sizes of the reliability columns; each uses a 4x4 torus.
pub const RELIABILITY_CUBE_SIZES: [usize; 4] = [8, 16, 32, 64];

/// Failure counts shown in the reliability table.
pub const RELIABILITY_MAX_FAILURES: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Network {
    Hypercube,
    Torus,
    /// `(16, 16, N)`: fixed 16x16 torus, hypercube grows with `P`.
    TehFixedTorus,
    /// `(l, m, 16)`: fixed 16-node hypercube, torus grows with `P`.
    TehFixedCube,
}

impl Network {
    pub const ALL: [Network; 4] = [
        Network::Hypercube,
        Network::Torus,
        Network::TehFixedTorus,
        Network::TehFixedCube,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Network::Hypercube => "hypercube",
            Network::Torus => "torus",
            Network::TehFixedTorus => "teh_16_16_N",
            Network::TehFixedCube => "teh_l_m_16",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Network::Hypercube => "n-cube Hypercube",
            Network::Torus => "Torus",
            Network::TehFixedTorus => "(16,16,N) - Torus embedded Hypercube",
            Network::TehFixedCube => "(l,m,16) - Torus embedded Hypercube",
        }
    }

    /// Concrete network of `processors` nodes. Tori whose size is not a
    /// perfect square use the near-square `l x 2l` shape.
    pub fn spec_for(self, processors: usize) -> Result<NetworkSpec> {
        match self {
            Network::Hypercube => NetworkSpec::hypercube(processors),
            Network::Torus => {
                let (l, m) = near_square(processors)?;
                NetworkSpec::torus(l, m)
            }
            Network::TehFixedTorus => NetworkSpec::teh(16, 16, processors / 256),
            Network::TehFixedCube => {
                let (l, m) = near_square(processors / 16)?;
                NetworkSpec::teh(l, m, 16)
            }
        }
    }
}

fn near_square(nodes: usize) -> Result<(usize, usize)> {
    if !nodes.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(nodes));
    }
    let l = 1usize << (nodes.trailing_zeros() / 2);
    Ok((l, nodes / l))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComparisonCell {
    pub network: Network,
    #[serde(skip)]
    pub spec: NetworkSpec,
    pub value: u64,
    /// The two diameter conventions disagree for this cell.
    pub convention_sensitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub processors: usize,
    pub cells: Vec<ComparisonCell>,
}

impl ComparisonRow {
    pub fn value(&self, network: Network) -> u64 {
        self.cells
            .iter()
            .find(|c| c.network == network)
            .map(|c| c.value)
            .expect("every network has a cell")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Links,
    Cost(DiameterConvention),
}

fn comparison_rows(metric: Metric) -> Vec<ComparisonRow> {
    PROCESSOR_COUNTS
        .iter()
        .map(|&processors| ComparisonRow {
            processors,
            cells: Network::ALL
                .iter()
                .map(|&network| {
                    let spec = network
                        .spec_for(processors)
                        .expect("table networks are valid");
                    let (value, convention_sensitive) = match metric {
                        Metric::Links => (link_count_closed(&spec), false),
                        Metric::Cost(convention) => {
                            let exact = topological_cost(&spec, DiameterConvention::Exact);
                            let approx =
                                topological_cost(&spec, DiameterConvention::PaperSquareApprox);
                            (topological_cost(&spec, convention), exact != approx)
                        }
                    };
                    ComparisonCell {
                        network,
                        spec,
                        value,
                        convention_sensitive,
                    }
                })
                .collect(),
        })
        .collect()
}

/// Total links per network and processor count.
pub fn table1_rows() -> Vec<ComparisonRow> {
    comparison_rows(Metric::Links)
}

/// Topological cost per network and processor count.
pub fn table2_rows(convention: DiameterConvention) -> Vec<ComparisonRow> {
    comparison_rows(Metric::Cost(convention))
}

/// The reliability grid: 4x4 tori with 8 to 64 node hypercubes, 1 to 9
/// failures.
pub fn table3_grid() -> ReliabilityTable {
    let specs: Vec<NetworkSpec> = RELIABILITY_CUBE_SIZES
        .iter()
        .map(|&n| NetworkSpec::teh(4, 4, n).expect("valid"))
        .collect();
    reliability_table(&specs, RELIABILITY_MAX_FAILURES).expect("non-empty")
}

/// Aligned text with networks as rows and processor counts as columns.
/// `(16,16,N)` cells carry their `N`; a trailing `*` marks a cell whose
/// value depends on the diameter convention.
pub fn render_comparison_text(rows: &[ComparisonRow]) -> String {
    let mut grid = vec![std::iter::once("Network".to_string())
        .chain(rows.iter().map(|r| r.processors.to_string()))
        .collect::<Vec<_>>()];
    for network in Network::ALL {
        let mut line = vec![network.title().to_string()];
        for row in rows {
            let cell = row
                .cells
                .iter()
                .find(|c| c.network == network)
                .expect("cell");
            let mut text = cell.value.to_string();
            if network == Network::TehFixedTorus {
                text.push_str(&format!(" N={}", cell.spec.cube_nodes()));
            }
            if cell.convention_sensitive {
                text.push('*');
            }
            line.push(text);
        }
        grid.push(line);
    }
    render_aligned(&grid)
}

pub fn render_comparison_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::from("processors");
    for network in Network::ALL {
        out.push(',');
        out.push_str(network.id());
    }
    out.push('\n');
    for row in rows {
        out.push_str(&row.processors.to_string());
        for cell in &row.cells {
            out.push_str(&format!(",{}", cell.value));
        }
        out.push('\n');
    }
    out
}

pub fn render_comparison_json(rows: &[ComparisonRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingMode {
    /// Grow the torus, keep the hypercube.
    ExpandTorus,
    /// Grow the hypercube, keep the torus.
    ExpandHypercube,
}

impl FromStr for ScalingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "torus" => Ok(ScalingMode::ExpandTorus),
            "hypercube" => Ok(ScalingMode::ExpandHypercube),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

impl fmt::Display for ScalingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalingMode::ExpandTorus => "torus",
            ScalingMode::ExpandHypercube => "hypercube",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScalingStep {
    pub mode: ScalingMode,
    pub spec: NetworkSpec,
    pub degree: u64,
    /// Growing the hypercube adds a link to every existing node.
    pub existing_nodes_reconfigured: bool,
}

pub fn scaling_sequence(
    mode: ScalingMode,
    base: &NetworkSpec,
    steps: usize,
) -> Result<Vec<ScalingStep>> {
    scaling_sequence_capped(mode, base, steps, DEFAULT_NODE_CAP)
}

/// `steps` successive doublings of `base`, excluding `base` itself.
/// Torus growth doubles the smaller side (columns on a tie).
pub fn scaling_sequence_capped(
    mode: ScalingMode,
    base: &NetworkSpec,
    steps: usize,
    node_cap: usize,
) -> Result<Vec<ScalingStep>> {
    if steps == 0 {
        return Err(Error::InvalidArgument("scaling needs at least one step"));
    }
    let mut current = *base;
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let (l, m, n) = (current.l(), current.m(), current.cube_nodes());
        let next = match mode {
            ScalingMode::ExpandTorus if l < m => (l.checked_mul(2), Some(m), Some(n)),
            ScalingMode::ExpandTorus => (Some(l), m.checked_mul(2), Some(n)),
            ScalingMode::ExpandHypercube => (Some(l), Some(m), n.checked_mul(2)),
        };
        let (Some(l), Some(m), Some(n)) = next else {
            return Err(Error::SizeOverflow);
        };
        current = crate::spec::validate_spec(base.family(), l, m, n)?;
        if current.node_count() > node_cap {
            return Err(Error::ResourceLimit {
                requested: current.node_count(),
                cap: node_cap,
            });
        }
        out.push(ScalingStep {
            mode,
            spec: current,
            degree: degree_closed(&current),
            existing_nodes_reconfigured: mode == ScalingMode::ExpandHypercube,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    LinksVsP,
    CostVsP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FigurePoint {
    pub network: &'static str,
    pub processors: usize,
    pub value: u64,
}

/// Long-form `(network, processors, value)` points, network-major. Costs
/// use the square-torus convention, as in [`table2_rows`] for the tables.
pub fn figure_data(figure: Figure) -> Vec<FigurePoint> {
    let rows = match figure {
        Figure::LinksVsP => table1_rows(),
        Figure::CostVsP => table2_rows(DiameterConvention::PaperSquareApprox),
    };
    Network::ALL
        .iter()
        .flat_map(|&network| {
            rows.iter().map(move |row| FigurePoint {
                network: network.id(),
                processors: row.processors,
                value: row.value(network),
            })
        })
        .collect()
}

pub fn render_figure_csv(points: &[FigurePoint]) -> String {
    let mut out = String::from("network,processors,value\n");
    for p in points {
        out.push_str(&format!("{},{},{}\n", p.network, p.processors, p.value));
    }
    out
}

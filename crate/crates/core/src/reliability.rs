//! Incident-link reliability model and a seeded fault-connectivity
//! estimator.
//!
//! A node of degree `d` with `f` failed incident links keeps `(d - f) / d`
//! of its links. Percentages are kept as integer tenths so rounding is exact.

use std::collections::HashSet;
use std::fmt;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::metrics::degree_closed;
use crate::routing::{bfs_levels_filtered, distance_closed};
use crate::spec::NetworkSpec;
use crate::topology::{build_graph, Edge, Topology};

/// A percentage with one decimal place, stored as tenths of a percent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Percent(u32);

impl Percent {
    pub const ZERO: Percent = Percent(0);
    pub const HUNDRED: Percent = Percent(1000);

    pub fn from_tenths(tenths: u32) -> Self {
        Percent(tenths)
    }

    /// `100 * num / den` rounded half away from zero to one decimal.
    pub fn from_ratio(num: u64, den: u64) -> Self {
        assert!(den > 0 && num <= den);
        Percent(((2000 * num + den) / (2 * den)) as u32)
    }

    pub fn tenths(self) -> u32 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 10.0
    }

    /// Table typography: whole numbers drop the decimal, zero prints as `00`.
    pub fn table_text(self) -> String {
        match self.0 {
            0 => "00".to_string(),
            t if t % 10 == 0 => (t / 10).to_string(),
            t => format!("{}.{}", t / 10, t % 10),
        }
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0 / 10, self.0 % 10)
    }
}

impl Serialize for Percent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.as_f64())
    }
}

/// Surviving fraction `(d - f, d)` as an unreduced ratio, or `None` when
/// `f` exceeds the degree.
pub fn reliability_ratio(spec: &NetworkSpec, failures: u32) -> Option<(u64, u64)> {
    let degree = degree_closed(spec);
    let f = u64::from(failures);
    match (f, degree) {
        (0, 0) => Some((1, 1)),
        (f, d) if f > d => None,
        (f, d) => Some((d - f, d)),
    }
}

pub fn reliability_percent(spec: &NetworkSpec, failures: u32) -> Option<Percent> {
    reliability_ratio(spec, failures).map(|(num, den)| Percent::from_ratio(num, den))
}

pub fn unreliability_percent(spec: &NetworkSpec, failures: u32) -> Option<Percent> {
    reliability_ratio(spec, failures).map(|(num, den)| Percent::from_ratio(den - num, den))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReliabilityRow {
    pub failures: u32,
    /// One cell per spec; `None` where failures exceed that spec's degree.
    pub cells: Vec<Option<Percent>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReliabilityTable {
    pub specs: Vec<NetworkSpec>,
    pub rows: Vec<ReliabilityRow>,
}

/// Rows for `failures = 1..=f_max`, one column per spec.
pub fn reliability_table(specs: &[NetworkSpec], f_max: u32) -> Result<ReliabilityTable> {
    if specs.is_empty() {
        return Err(Error::InvalidArgument(
            "reliability table needs at least one network",
        ));
    }
    let rows = (1..=f_max)
        .map(|failures| ReliabilityRow {
            failures,
            cells: specs
                .iter()
                .map(|s| reliability_percent(s, failures))
                .collect(),
        })
        .collect();
    Ok(ReliabilityTable {
        specs: specs.to_vec(),
        rows,
    })
}

fn column_label(spec: &NetworkSpec) -> String {
    format!("({}, {}, {})", spec.l(), spec.m(), spec.cube_nodes())
}

impl ReliabilityTable {
    /// Aligned text: `00` for an exact zero, `—` where the failure count
    /// exceeds the degree.
    pub fn render_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = vec![std::iter::once("failures".to_string())
            .chain(self.specs.iter().map(column_label))
            .collect()];
        for row in &self.rows {
            grid.push(
                std::iter::once(row.failures.to_string())
                    .chain(row.cells.iter().map(|c| match c {
                        Some(p) => p.table_text(),
                        None => "—".to_string(),
                    }))
                    .collect(),
            );
        }
        render_aligned(&grid)
    }

    /// CSV with one decimal per cell and an empty field for absent cells.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("failures");
        for spec in &self.specs {
            out.push_str(&format!(",\"{}\"", column_label(spec)));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.failures.to_string());
            for cell in &row.cells {
                out.push(',');
                if let Some(p) = cell {
                    out.push_str(&p.to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            columns: Vec<String>,
            rows: &'a [ReliabilityRow],
        }
        let doc = Doc {
            columns: self.specs.iter().map(column_label).collect(),
            rows: &self.rows,
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("table serializes");
        out.push('\n');
        out
    }
}

/// Left column left-aligned, the rest right-aligned, two spaces between.
pub(crate) fn render_aligned(grid: &[Vec<String>]) -> String {
    let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            grid.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in grid {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            let pad = widths[c] - cell.chars().count();
            if c == 0 {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            } else {
                line.push_str("  ");
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// A concrete set of failed elements drawn from a topology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaultScenario {
    #[serde(skip)]
    pub spec: NetworkSpec,
    pub failed_links: Vec<Edge>,
    pub failed_nodes: Vec<usize>,
    pub seed: u64,
}

impl FaultScenario {
    pub fn is_empty(&self) -> bool {
        self.failed_links.is_empty() && self.failed_nodes.is_empty()
    }

    /// Whether `dst` is reachable from `src` once the failed elements are
    /// removed. A failed endpoint is unreachable.
    pub fn connected(&self, topology: &Topology, src: usize, dst: usize) -> bool {
        let nodes: HashSet<usize> = self.failed_nodes.iter().copied().collect();
        if nodes.contains(&src) || nodes.contains(&dst) {
            return false;
        }
        let links: HashSet<(usize, usize)> =
            self.failed_links.iter().map(|e| (e.src, e.dst)).collect();
        let levels = bfs_levels_filtered(
            topology,
            src,
            |v| nodes.contains(&v),
            |a, b| links.contains(&(a.min(b), a.max(b))),
        );
        levels[dst].is_some()
    }
}

/// Samples failed links and nodes without replacement using ChaCha8 seeded
/// from `seed`. Node 0 is the reference source and is never failed.
pub fn inject_faults(
    topology: &Topology,
    count_links: usize,
    count_nodes: usize,
    seed: u64,
) -> Result<FaultScenario> {
    let edges = topology.edges();
    if count_links > edges.len() {
        return Err(Error::TooManyFaults {
            requested: count_links,
            available: edges.len(),
        });
    }
    let candidates = topology.node_count() - 1;
    if count_nodes > candidates {
        return Err(Error::TooManyFaults {
            requested: count_nodes,
            available: candidates,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failed_links: Vec<Edge> = sample(&mut rng, edges.len(), count_links)
        .into_iter()
        .map(|i| edges[i])
        .collect();
    failed_links.sort_unstable();
    let mut failed_nodes: Vec<usize> = sample(&mut rng, candidates, count_nodes)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    failed_nodes.sort_unstable();
    Ok(FaultScenario {
        spec: *topology.spec(),
        failed_links,
        failed_nodes,
        seed,
    })
}

/// Node farthest from node 0 by hop distance, lowest index on ties.
pub fn antipode(spec: &NetworkSpec) -> usize {
    let origin = spec.decode(0).expect("node 0 exists");
    let mut best = (0, 0);
    for (idx, addr) in spec.addresses().enumerate() {
        let d = distance_closed(spec, origin, addr).expect("address in range");
        if d > best.0 {
            best = (d, idx);
        }
    }
    best.1
}

/// Fraction of trials in which node 0 still reaches its antipode after `f`
/// of node 0's links fail. Trial `t` draws from ChaCha8 seeded with `seed`
/// on stream `t`, so the estimate does not depend on evaluation order.
pub fn monte_carlo_connectivity(
    spec: &NetworkSpec,
    f: usize,
    trials: u64,
    seed: u64,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trial count must be at least 1"));
    }
    let topology = build_graph(spec)?;
    estimate_connectivity(&topology, f, trials, seed)
}

pub fn estimate_connectivity(topology: &Topology, f: usize, trials: u64, seed: u64) -> Result<f64> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trial count must be at least 1"));
    }
    let source = 0;
    let target = antipode(topology.spec());
    let incident = topology.incident_edges(source);
    if f > incident.len() {
        return Err(Error::TooManyFaults {
            requested: f,
            available: incident.len(),
        });
    }
    let edges = topology.edges();
    let mut reached = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let failed: HashSet<(usize, usize)> = sample(&mut rng, incident.len(), f)
            .into_iter()
            .map(|i| {
                let e = edges[incident[i]];
                (e.src, e.dst)
            })
            .collect();
        let levels = bfs_levels_filtered(
            topology,
            source,
            |_| false,
            |a, b| failed.contains(&(a.min(b), a.max(b))),
        );
        if levels[target].is_some() {
            reached += 1;
        }
    }
    Ok(reached as f64 / trials as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn teh(l: usize, m: usize, n: usize) -> NetworkSpec {
        NetworkSpec::teh(l, m, n).unwrap()
    }

    #[test]
    fn table_cells() {
        assert_eq!(
            reliability_percent(&teh(4, 4, 8), 3),
            Some(Percent::from_tenths(571))
        );
        assert_eq!(
            reliability_percent(&teh(4, 4, 64), 9),
            Some(Percent::from_tenths(100))
        );
        assert_eq!(
            reliability_percent(&teh(4, 4, 16), 0),
            Some(Percent::HUNDRED)
        );
        assert_eq!(reliability_percent(&teh(4, 4, 8), 8), None);
    }

    #[test]
    fn rounding_half_away() {
        assert_eq!(Percent::from_ratio(6, 7).tenths(), 857);
        assert_eq!(Percent::from_ratio(8, 9).tenths(), 889);
        assert_eq!(Percent::from_ratio(1, 2000).tenths(), 1);
        assert_eq!(Percent::from_ratio(1, 2001).tenths(), 0);
    }

    #[test]
    fn unreliability() {
        assert_eq!(
            unreliability_percent(&teh(4, 4, 8), 1),
            Some(Percent::from_tenths(143))
        );
        assert_eq!(unreliability_percent(&teh(3, 3, 2), 0), Some(Percent::ZERO));
        assert_eq!(
            unreliability_percent(&teh(4, 4, 64), 10),
            Some(Percent::HUNDRED)
        );
        assert_eq!(unreliability_percent(&teh(4, 4, 64), 11), None);
    }

    #[test]
    fn typography() {
        assert_eq!(Percent::from_tenths(857).table_text(), "85.7");
        assert_eq!(Percent::from_tenths(750).table_text(), "75");
        assert_eq!(Percent::ZERO.table_text(), "00");
        assert_eq!(Percent::ZERO.to_string(), "0.0");
        assert_eq!(Percent::HUNDRED.to_string(), "100.0");
    }

    #[test]
    fn small_tables() {
        let t = reliability_table(&[teh(4, 4, 8)], 8).unwrap();
        assert_eq!(t.rows.len(), 8);
        assert_eq!(t.rows[6].cells, vec![Some(Percent::ZERO)]);
        assert_eq!(t.rows[7].cells, vec![None]);

        let t = reliability_table(&[teh(4, 4, 16)], 1).unwrap();
        assert_eq!(
            t.rows,
            vec![ReliabilityRow {
                failures: 1,
                cells: vec![Some(Percent::from_tenths(875))]
            }]
        );

        assert!(reliability_table(&[], 3).is_err());
    }

    #[test]
    fn csv_and_text() {
        let t = reliability_table(&[teh(4, 4, 8), teh(4, 4, 16)], 8).unwrap();
        let csv = t.render_csv();
        assert!(csv.starts_with("failures,\"(4, 4, 8)\",\"(4, 4, 16)\"\n1,85.7,87.5\n"));
        assert!(csv.ends_with("7,0.0,12.5\n8,,0.0\n"));
        let text = t.render_text();
        let last = text.lines().last().unwrap();
        assert_eq!(last, "8                 —          00");
    }

    #[test]
    fn empty_scenario() {
        let t = build_graph(&teh(3, 3, 2)).unwrap();
        let s = inject_faults(&t, 0, 0, 99).unwrap();
        assert!(s.is_empty());
        assert!(s.connected(&t, 0, 17));
    }

    #[test]
    fn seeded_injection_repeats() {
        let t = build_graph(&teh(4, 4, 8)).unwrap();
        let a = inject_faults(&t, 3, 2, 42).unwrap();
        let b = inject_faults(&t, 3, 2, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.failed_links.len(), 3);
        assert!(a.failed_links.windows(2).all(|w| w[0] < w[1]));
        assert!(!a.failed_nodes.contains(&0));
        assert!(a
            .failed_links
            .iter()
            .all(|e| t.edges().binary_search(e).is_ok()));
    }

    #[test]
    fn too_many_faults() {
        let t = build_graph(&teh(2, 2, 8)).unwrap();
        assert_eq!(
            inject_faults(&t, 1000, 0, 1),
            Err(Error::TooManyFaults {
                requested: 1000,
                available: 80
            })
        );
        assert_eq!(
            inject_faults(&t, 0, 32, 1),
            Err(Error::TooManyFaults {
                requested: 32,
                available: 31
            })
        );
    }

    #[test]
    fn isolating_all_incident_links_disconnects() {
        let t = build_graph(&teh(3, 3, 2)).unwrap();
        let incident: Vec<Edge> = t
            .incident_edges(0)
            .into_iter()
            .map(|i| t.edges()[i])
            .collect();
        let s = FaultScenario {
            spec: *t.spec(),
            failed_links: incident,
            failed_nodes: vec![],
            seed: 0,
        };
        assert!(!s.connected(&t, 0, 5));
        assert!(s.connected(&t, 1, 5));
    }

    #[test]
    fn antipodes() {
        assert_eq!(
            antipode(&teh(4, 4, 8)),
            teh(4, 4, 8)
                .encode(crate::NodeAddress::new(2, 2, 7))
                .unwrap()
        );
        assert_eq!(antipode(&NetworkSpec::hypercube(8).unwrap()), 7);
    }

    #[test]
    fn estimator_endpoints() {
        let spec = teh(4, 4, 8);
        assert_eq!(monte_carlo_connectivity(&spec, 0, 50, 3), Ok(1.0));
        assert_eq!(monte_carlo_connectivity(&spec, 7, 50, 3), Ok(0.0));
        assert_eq!(
            monte_carlo_connectivity(&spec, 8, 5, 3),
            Err(Error::TooManyFaults {
                requested: 8,
                available: 7
            })
        );
        assert!(monte_carlo_connectivity(&spec, 1, 0, 3).is_err());
    }
}

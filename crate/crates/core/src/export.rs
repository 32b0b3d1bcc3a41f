//! Deterministic DOT, edge-list CSV and JSON renderings of a [`Topology`].

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spec::Family;
use crate::topology::{Edge, EdgeKind, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeListCsv,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "csv" => Ok(ExportFormat::EdgeListCsv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct TopologyDocument<'a> {
    family: Family,
    l: usize,
    m: usize,
    n_cube_nodes: usize,
    node_count: usize,
    edges: &'a [Edge],
}

fn edge_color(kind: EdgeKind) -> &'static str {
    const CUBE: [&str; 8] = [
        "forestgreen",
        "darkorange",
        "purple",
        "firebrick",
        "goldenrod",
        "deeppink",
        "teal",
        "saddlebrown",
    ];
    match kind {
        EdgeKind::TorusRow => "black",
        EdgeKind::TorusColumn => "blue",
        EdgeKind::HypercubeDim(d) => CUBE[d as usize % CUBE.len()],
    }
}

pub fn export_topology(topology: &Topology, format: ExportFormat) -> Result<Vec<u8>> {
    let spec = topology.spec();
    let text = match format {
        ExportFormat::Dot => {
            let mut out = String::new();
            writeln!(out, "graph teh {{").unwrap();
            writeln!(out, "  node [shape=circle];").unwrap();
            for (idx, addr) in spec.addresses().enumerate() {
                writeln!(out, "  {idx} [label=\"{addr}\"];").unwrap();
            }
            for e in topology.edges() {
                writeln!(
                    out,
                    "  {} -- {} [color={}, label=\"{}\"];",
                    e.src,
                    e.dst,
                    edge_color(e.kind),
                    e.kind
                )
                .unwrap();
            }
            out.push_str("}\n");
            out
        }
        ExportFormat::EdgeListCsv => {
            let mut out = String::from("src_index,dst_index,kind\n");
            for e in topology.edges() {
                writeln!(out, "{},{},{}", e.src, e.dst, e.kind).unwrap();
            }
            out
        }
        ExportFormat::Json => {
            let doc = TopologyDocument {
                family: spec.family(),
                l: spec.l(),
                m: spec.m(),
                n_cube_nodes: spec.cube_nodes(),
                node_count: spec.node_count(),
                edges: topology.edges(),
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("topology serializes");
            out.push('\n');
            out
        }
    };
    Ok(text.into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::NetworkSpec;
    use crate::topology::build_graph;

    #[test]
    fn single_edge_csv() {
        let t = build_graph(&NetworkSpec::hypercube(2).unwrap()).unwrap();
        let out = export_topology(&t, ExportFormat::EdgeListCsv).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "src_index,dst_index,kind\n0,1,hypercube_dim_0\n"
        );
    }

    #[test]
    fn torus_csv_rows() {
        let t = build_graph(&NetworkSpec::torus(3, 3).unwrap()).unwrap();
        let out =
            String::from_utf8(export_topology(&t, ExportFormat::EdgeListCsv).unwrap()).unwrap();
        assert_eq!(out.lines().count(), 1 + 18);
    }

    #[test]
    fn json_document() {
        let t = build_graph(&NetworkSpec::teh(2, 2, 8).unwrap()).unwrap();
        let out = export_topology(&t, ExportFormat::Json).unwrap();
        let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(doc["node_count"], 32);
        assert_eq!(doc["family"], "teh");
        assert_eq!(doc["n_cube_nodes"], 8);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 80);
        assert_eq!(doc["edges"][0]["kind"], "hypercube_dim_0");
    }

    #[test]
    fn dot_labels_and_colors() {
        let t = build_graph(&NetworkSpec::teh(2, 2, 2).unwrap()).unwrap();
        let out = String::from_utf8(export_topology(&t, ExportFormat::Dot).unwrap()).unwrap();
        assert!(out.starts_with("graph teh {\n"));
        assert!(out.contains("  7 [label=\"1,1,1\"];\n"));
        assert!(out.contains("  0 -- 1 [color=forestgreen, label=\"hypercube_dim_0\"];\n"));
        assert!(out.contains("  0 -- 2 [color=blue, label=\"torus_col\"];\n"));
        assert!(out.contains("  0 -- 4 [color=black, label=\"torus_row\"];\n"));
    }

    #[test]
    fn unknown_format() {
        assert_eq!(
            "png".parse::<ExportFormat>(),
            Err(Error::UnsupportedFormat("png".into()))
        );
    }

    #[test]
    fn byte_stable() {
        let t = build_graph(&NetworkSpec::teh(3, 3, 4).unwrap()).unwrap();
        for f in [
            ExportFormat::Dot,
            ExportFormat::EdgeListCsv,
            ExportFormat::Json,
        ] {
            assert_eq!(
                export_topology(&t, f).unwrap(),
                export_topology(&t, f).unwrap()
            );
        }
    }
}

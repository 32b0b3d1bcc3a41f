//! Explicit graph construction.
//!
//! Edges are stored once per undirected link with `src < dst`, sorted
//! lexicographically. Where a ring has length 2 the two torus directions
//! reach the same node and produce a single link.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::routing::{apply_move, Move};
use crate::spec::{NetworkSpec, NodeAddress};

/// Default cap on the number of nodes [`build_graph`] will materialize.
pub const DEFAULT_NODE_CAP: usize = 1 << 21;

/// Link class. `TorusRow` links change the row index `i`, `TorusColumn`
/// links change the column index `j`, `HypercubeDim(d)` links flip bit `d`
/// of `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    TorusRow,
    TorusColumn,
    HypercubeDim(u32),
}

impl EdgeKind {
    pub fn of_move(mv: Move) -> Self {
        match mv {
            Move::RowPlus | Move::RowMinus => EdgeKind::TorusRow,
            Move::ColPlus | Move::ColMinus => EdgeKind::TorusColumn,
            Move::CubeDim(d) => EdgeKind::HypercubeDim(d),
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKind::TorusRow => f.write_str("torus_row"),
            EdgeKind::TorusColumn => f.write_str("torus_col"),
            EdgeKind::HypercubeDim(d) => write!(f, "hypercube_dim_{d}"),
        }
    }
}

impl Serialize for EdgeKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub kind: EdgeKind,
}

/// Distinct neighbors of `addr`, in move order: column +/-, row +/-, then
/// hypercube bits ascending.
pub fn neighbors(spec: &NetworkSpec, addr: NodeAddress) -> Result<Vec<(NodeAddress, EdgeKind)>> {
    spec.check(addr)?;
    let mut out: Vec<(NodeAddress, EdgeKind)> = Vec::with_capacity(4 + spec.cube_dim() as usize);
    for mv in Move::all(spec) {
        let next = apply_move(spec, addr, mv)?;
        if next != addr && !out.iter().any(|(seen, _)| *seen == next) {
            out.push((next, EdgeKind::of_move(mv)));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Topology {
    spec: NetworkSpec,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

pub fn build_graph(spec: &NetworkSpec) -> Result<Topology> {
    build_graph_capped(spec, DEFAULT_NODE_CAP)
}

pub fn build_graph_capped(spec: &NetworkSpec, node_cap: usize) -> Result<Topology> {
    let node_count = spec.node_count();
    if node_count > node_cap {
        return Err(Error::ResourceLimit {
            requested: node_count,
            cap: node_cap,
        });
    }
    let mut edges = Vec::new();
    for (src, addr) in spec.addresses().enumerate() {
        for (next, kind) in neighbors(spec, addr)? {
            let dst = spec.encode(next)?;
            if src < dst {
                edges.push(Edge { src, dst, kind });
            }
        }
    }
    edges.sort_unstable();
    Ok(Topology::from_edges(*spec, edges))
}

impl Topology {
    fn from_edges(spec: NetworkSpec, edges: Vec<Edge>) -> Self {
        let node_count = spec.node_count();
        let mut degree = vec![0usize; node_count];
        for e in &edges {
            degree[e.src] += 1;
            degree[e.dst] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; 2 * edges.len()];
        for e in &edges {
            targets[fill[e.src]] = e.dst;
            fill[e.src] += 1;
            targets[fill[e.dst]] = e.src;
            fill[e.dst] += 1;
        }
        Topology {
            spec,
            edges,
            offsets,
            targets,
        }
    }

    pub fn spec(&self) -> &NetworkSpec {
        &self.spec
    }

    pub fn node_count(&self) -> usize {
        self.spec.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Adjacent node indices of `node`, built from the edge list.
    pub fn adjacent(&self, node: usize) -> &[usize] {
        &self.targets[self.offsets[node]..self.offsets[node + 1]]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.offsets[node + 1] - self.offsets[node]
    }

    /// Indices of the edges touching `node`, ascending.
    pub fn incident_edges(&self, node: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.src == node || e.dst == node)
            .map(|(idx, _)| idx)
            .collect()
    }

    /// Image of the edge set under `(i, j, k) -> ((i + di) mod l, (j + dj) mod m, k ^ mask)`,
    /// re-normalized and sorted.
    pub fn translated_edges(&self, di: usize, dj: usize, mask: usize) -> Result<Vec<Edge>> {
        let spec = &self.spec;
        let map = |idx: usize| -> Result<usize> {
            let a = spec.decode(idx)?;
            spec.encode(NodeAddress::new(
                (a.i + di) % spec.l(),
                (a.j + dj) % spec.m(),
                a.k ^ (mask % spec.cube_nodes()),
            ))
        };
        let mut out = self
            .edges
            .iter()
            .map(|e| {
                let (x, y) = (map(e.src)?, map(e.dst)?);
                Ok(Edge {
                    src: x.min(y),
                    dst: x.max(y),
                    kind: e.kind,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }

    /// Checks that unit row/column shifts and every single-bit XOR are
    /// automorphisms. Together they generate a group acting transitively
    /// on the nodes, so eccentricity is the same everywhere.
    pub fn translations_are_automorphisms(&self) -> bool {
        let own: HashSet<Edge> = self.edges.iter().copied().collect();
        let mut generators = vec![(1, 0, 0), (0, 1, 0)];
        generators.extend((0..self.spec.cube_dim()).map(|d| (0, 0, 1usize << d)));
        generators.into_iter().all(|(di, dj, mask)| {
            self.translated_edges(di, dj, mask)
                .map(|mapped| mapped.len() == own.len() && mapped.iter().all(|e| own.contains(e)))
                .unwrap_or(false)
        })
    }
}

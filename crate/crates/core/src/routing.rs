//! Elementary routing functions and the composed shortest-path router.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::spec::{NetworkSpec, NodeAddress};
use crate::topology::Topology;

/// One elementary routing step.
///
/// `ColPlus`/`ColMinus` step the column index `j` around its ring,
/// `RowPlus`/`RowMinus` step the row index `i`, and `CubeDim(d)` complements
/// bit `d` of the hypercube label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    ColPlus,
    ColMinus,
    RowPlus,
    RowMinus,
    CubeDim(u32),
}

impl Move {
    /// Every move defined for `spec`, in neighbor-generation order.
    pub fn all(spec: &NetworkSpec) -> impl Iterator<Item = Move> {
        [Move::ColPlus, Move::ColMinus, Move::RowPlus, Move::RowMinus]
            .into_iter()
            .chain((0..spec.cube_dim()).map(Move::CubeDim))
    }

    pub fn inverse(self) -> Move {
        match self {
            Move::ColPlus => Move::ColMinus,
            Move::ColMinus => Move::ColPlus,
            Move::RowPlus => Move::RowMinus,
            Move::RowMinus => Move::RowPlus,
            Move::CubeDim(d) => Move::CubeDim(d),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::ColPlus => f.write_str("ColPlus"),
            Move::ColMinus => f.write_str("ColMinus"),
            Move::RowPlus => f.write_str("RowPlus"),
            Move::RowMinus => f.write_str("RowMinus"),
            Move::CubeDim(d) => write!(f, "CubeDim({d})"),
        }
    }
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn apply_move(spec: &NetworkSpec, addr: NodeAddress, mv: Move) -> Result<NodeAddress> {
    spec.check(addr)?;
    let NodeAddress { i, j, k } = addr;
    let (l, m) = (spec.l(), spec.m());
    Ok(match mv {
        Move::ColPlus => NodeAddress::new(i, (j + 1) % m, k),
        Move::ColMinus => NodeAddress::new(i, (m + j - 1) % m, k),
        Move::RowPlus => NodeAddress::new((i + 1) % l, j, k),
        Move::RowMinus => NodeAddress::new((l + i - 1) % l, j, k),
        Move::CubeDim(d) => {
            if d >= spec.cube_dim() {
                return Err(Error::InvalidDimension {
                    d,
                    n: spec.cube_dim(),
                });
            }
            NodeAddress::new(i, j, k ^ (1 << d))
        }
    })
}

fn ring_distance(a: usize, b: usize, len: usize) -> usize {
    let fwd = (b + len - a) % len;
    fwd.min(len - fwd)
}

/// Hop distance: ring distance on rows plus ring distance on columns plus
/// Hamming distance of the hypercube labels.
pub fn distance_closed(spec: &NetworkSpec, a: NodeAddress, b: NodeAddress) -> Result<usize> {
    spec.check(a)?;
    spec.check(b)?;
    Ok(ring_distance(a.i, b.i, spec.l())
        + ring_distance(a.j, b.j, spec.m())
        + (a.k ^ b.k).count_ones() as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Path {
    #[serde(skip)]
    spec: NetworkSpec,
    #[serde(serialize_with = "serialize_hops")]
    hops: Vec<NodeAddress>,
    moves: Vec<Move>,
}

fn serialize_hops<S: Serializer>(
    hops: &[NodeAddress],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(hops.iter().map(|h| h.to_string()))
}

impl Path {
    pub fn spec(&self) -> &NetworkSpec {
        &self.spec
    }

    pub fn hops(&self) -> &[NodeAddress] {
        &self.hops
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn source(&self) -> NodeAddress {
        self.hops[0]
    }

    pub fn destination(&self) -> NodeAddress {
        *self.hops.last().unwrap()
    }

    /// Every hop is in range, each recorded move produces the next hop and
    /// no address repeats.
    pub fn is_valid(&self) -> bool {
        if self.hops.is_empty() || self.moves.len() + 1 != self.hops.len() {
            return false;
        }
        if !self.hops.iter().all(|h| self.spec.contains(*h)) {
            return false;
        }
        let steps_ok = self
            .hops
            .windows(2)
            .zip(&self.moves)
            .all(|(pair, mv)| apply_move(&self.spec, pair[0], *mv).ok() == Some(pair[1]));
        let mut seen = self.hops.clone();
        seen.sort_unstable();
        seen.dedup();
        steps_ok && seen.len() == self.hops.len()
    }
}

/// Shortest path from `src` to `dst`.
///
/// Columns are corrected first, then rows, each in the shorter ring
/// direction (`Plus` on a tie), then differing hypercube bits in ascending
/// order.
pub fn route(spec: &NetworkSpec, src: NodeAddress, dst: NodeAddress) -> Result<Path> {
    spec.check(src)?;
    spec.check(dst)?;
    let mut moves = Vec::new();
    let mut ring = |from: usize, to: usize, len: usize, plus: Move, minus: Move| {
        let fwd = (to + len - from) % len;
        let back = (len - fwd) % len;
        if fwd <= back {
            moves.extend(std::iter::repeat_n(plus, fwd));
        } else {
            moves.extend(std::iter::repeat_n(minus, back));
        }
    };
    ring(src.j, dst.j, spec.m(), Move::ColPlus, Move::ColMinus);
    ring(src.i, dst.i, spec.l(), Move::RowPlus, Move::RowMinus);
    let diff = src.k ^ dst.k;
    moves.extend(
        (0..spec.cube_dim())
            .filter(|d| diff >> d & 1 == 1)
            .map(Move::CubeDim),
    );

    let mut hops = Vec::with_capacity(moves.len() + 1);
    hops.push(src);
    let mut at = src;
    for mv in &moves {
        at = apply_move(spec, at, *mv)?;
        hops.push(at);
    }
    debug_assert_eq!(at, dst);
    Ok(Path {
        spec: *spec,
        hops,
        moves,
    })
}

/// Breadth-first search over the explicit edge list. `blocked_node` and
/// `blocked_edge` remove elements from the graph; the source itself is
/// never blocked.
pub(crate) fn bfs_levels_filtered(
    topology: &Topology,
    source: usize,
    blocked_node: impl Fn(usize) -> bool,
    blocked_edge: impl Fn(usize, usize) -> bool,
) -> Vec<Option<usize>> {
    let mut dist = vec![None; topology.node_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in topology.adjacent(u) {
            if dist[v].is_none() && !blocked_node(v) && !blocked_edge(u, v) {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop counts from `source` to every node; `None` for unreachable nodes.
pub fn bfs_levels(topology: &Topology, source: usize) -> Vec<Option<usize>> {
    bfs_levels_filtered(topology, source, |_| false, |_, _| false)
}

pub fn bfs_distance(topology: &Topology, a: NodeAddress, b: NodeAddress) -> Result<usize> {
    let spec = topology.spec();
    let (from, to) = (spec.encode(a)?, spec.encode(b)?);
    bfs_levels(topology, from)[to].ok_or(Error::Unreachable { from, to })
}

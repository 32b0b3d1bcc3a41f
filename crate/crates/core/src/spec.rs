//! Network specifications and node addressing.
//!
//! All three families share one `(l, m, N)` frame: a hypercube is an
//! `(1, 1, N)` network and a 2D torus is an `(l, m, 1)` network. A node is
//! addressed by its torus row `i`, torus column `j` and hypercube label `k`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hypercube,
    Torus,
    Teh,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::Torus => "torus",
            Family::Teh => "teh",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hypercube" => Ok(Family::Hypercube),
            "torus" => Ok(Family::Torus),
            "teh" => Ok(Family::Teh),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// A validated network description. Construct through [`validate_spec`] or
/// the family shortcuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NetworkSpec {
    family: Family,
    l: usize,
    m: usize,
    cube_nodes: usize,
    cube_dim: u32,
}

/// Validates raw dimensions and normalizes the unused ones of the chosen
/// family to 1.
pub fn validate_spec(family: Family, l: usize, m: usize, cube_nodes: usize) -> Result<NetworkSpec> {
    let (l, m, cube_nodes) = match family {
        Family::Hypercube => (1, 1, cube_nodes),
        Family::Torus => (l, m, 1),
        Family::Teh => (l, m, cube_nodes),
    };
    for (name, value) in [("l", l), ("m", m), ("N", cube_nodes)] {
        if value < 1 {
            return Err(Error::NonPositiveDimension { name, value });
        }
    }
    if !cube_nodes.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(cube_nodes));
    }
    l.checked_mul(m)
        .and_then(|p| p.checked_mul(cube_nodes))
        .filter(|&p| p <= u32::MAX as usize)
        .ok_or(Error::SizeOverflow)?;
    Ok(NetworkSpec {
        family,
        l,
        m,
        cube_nodes,
        cube_dim: cube_nodes.trailing_zeros(),
    })
}

impl NetworkSpec {
    pub fn hypercube(cube_nodes: usize) -> Result<Self> {
        validate_spec(Family::Hypercube, 1, 1, cube_nodes)
    }

    pub fn torus(l: usize, m: usize) -> Result<Self> {
        validate_spec(Family::Torus, l, m, 1)
    }

    pub fn teh(l: usize, m: usize, cube_nodes: usize) -> Result<Self> {
        validate_spec(Family::Teh, l, m, cube_nodes)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Torus rows.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Torus columns.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Nodes per hypercube group (`N`).
    pub fn cube_nodes(&self) -> usize {
        self.cube_nodes
    }

    /// Hypercube dimension count `n = log2(N)`.
    pub fn cube_dim(&self) -> u32 {
        self.cube_dim
    }

    pub fn torus_nodes(&self) -> usize {
        self.l * self.m
    }

    pub fn node_count(&self) -> usize {
        self.l * self.m * self.cube_nodes
    }

    /// Whether the ring-based closed forms (degree 4 + n, links P(4+n)/2)
    /// describe the simple graph exactly. Rings of length 1 or 2 collapse
    /// their two directions into fewer distinct links.
    pub fn closed_form_exact(&self) -> bool {
        match self.family {
            Family::Hypercube => true,
            Family::Torus | Family::Teh => self.l >= 3 && self.m >= 3,
        }
    }

    pub fn contains(&self, addr: NodeAddress) -> bool {
        addr.i < self.l && addr.j < self.m && addr.k < self.cube_nodes
    }

    pub fn check(&self, addr: NodeAddress) -> Result<()> {
        if self.contains(addr) {
            Ok(())
        } else {
            Err(Error::AddressOutOfRange { addr, spec: *self })
        }
    }

    /// Layout is `(i * m + j) * N + k`, so each hypercube group occupies a
    /// contiguous block of `N` indices.
    pub fn encode(&self, addr: NodeAddress) -> Result<usize> {
        self.check(addr)?;
        Ok((addr.i * self.m + addr.j) * self.cube_nodes + addr.k)
    }

    pub fn decode(&self, index: usize) -> Result<NodeAddress> {
        let node_count = self.node_count();
        if index >= node_count {
            return Err(Error::IndexOutOfRange { index, node_count });
        }
        let k = index % self.cube_nodes;
        let pos = index / self.cube_nodes;
        Ok(NodeAddress::new(pos / self.m, pos % self.m, k))
    }

    /// Every address in index order.
    pub fn addresses(&self) -> impl Iterator<Item = NodeAddress> + '_ {
        (0..self.node_count()).map(move |idx| {
            let k = idx % self.cube_nodes;
            let pos = idx / self.cube_nodes;
            NodeAddress::new(pos / self.m, pos % self.m, k)
        })
    }

    /// `k` as an `n`-bit binary string, most significant bit first.
    pub fn label_bits(&self, k: usize) -> String {
        if self.cube_dim == 0 {
            return String::new();
        }
        format!("{:0width$b}", k, width = self.cube_dim as usize)
    }
}

impl fmt::Display for NetworkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Hypercube => write!(f, "{}-cube hypercube", self.cube_dim),
            Family::Torus => write!(f, "{}x{} torus", self.l, self.m),
            Family::Teh => write!(f, "({}, {}, {})", self.l, self.m, self.cube_nodes),
        }
    }
}

pub fn encode_address(spec: &NetworkSpec, addr: NodeAddress) -> Result<usize> {
    spec.encode(addr)
}

pub fn decode_address(spec: &NetworkSpec, index: usize) -> Result<NodeAddress> {
    spec.decode(index)
}

/// Node address `(i, j, k)`: torus row, torus column, hypercube label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeAddress {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl NodeAddress {
    pub const fn new(i: usize, j: usize, k: usize) -> Self {
        NodeAddress { i, j, k }
    }
}

impl fmt::Display for NodeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.i, self.j, self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected an address of the form i,j,k, got `{0}`")]
pub struct ParseAddressError(String);

impl FromStr for NodeAddress {
    type Err = ParseAddressError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[i, j, k]) => Ok(NodeAddress::new(i, j, k)),
            _ => Err(ParseAddressError(s.to_string())),
        }
    }
}

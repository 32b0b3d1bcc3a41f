use thiserror::Error;

use crate::spec::{NetworkSpec, NodeAddress};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hypercube size {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("dimension {name} must be at least 1, got {value}")]
    NonPositiveDimension { name: &'static str, value: usize },

    #[error("network size overflows the address space")]
    SizeOverflow,

    #[error("address {addr} is out of range for {spec}")]
    AddressOutOfRange {
        addr: NodeAddress,
        spec: NetworkSpec,
    },

    #[error("node index {index} is out of range (node count {node_count})")]
    IndexOutOfRange { index: usize, node_count: usize },

    #[error("hypercube dimension {d} does not exist (n = {n})")]
    InvalidDimension { d: u32, n: u32 },

    #[error("{requested} nodes exceed the resource cap of {cap}")]
    ResourceLimit { requested: usize, cap: usize },

    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),

    #[error("no path from node {from} to node {to}")]
    Unreachable { from: usize, to: usize },

    #[error("cannot fail {requested} elements, only {available} available")]
    TooManyFaults { requested: usize, available: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

impl Error {
    /// Resource exhaustion, as opposed to a malformed request.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. } | Error::SizeOverflow)
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("invalid graph order {0} (must be 1..=64)")]
    InvalidOrder(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: u64, bound: u64 },
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("kernel dimension {dim} exceeds the enumeration cap {max}")]
    KernelTooLarge { dim: usize, max: usize },
    #[error("subset size {k} exceeds the supported maximum {max}")]
    KTooLarge { k: usize, max: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("{0} is not a prime power congruent to 1 mod 4 (or exceeds 61)")]
    NotPrimePowerOneMod4(u64),
    #[error("construction failed its claimed property: {0}")]
    ClaimFailed(String),
    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

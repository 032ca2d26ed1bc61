//! Hypomorphy and reconstruction of graphs up to complementation.
//!
//! * [`graphkit`]: packed graphs, invariants, isomorphism, graph6
//! * [`algebra`]: exact and prime-field rank and kernels
//! * [`incidence`]: inclusion and Kneser matrices and their rank theorems
//! * [`hypomorphy`]: pairwise decision procedures and identity verifiers
//! * [`constructions`]: the explicit counterexample pairs, Paley graphs, class 𝒢
//! * [`atlas`]: graph catalogues and exhaustive membership sweeps

pub mod algebra;
pub mod atlas;
pub mod constructions;
pub mod error;
pub mod graphkit;
pub mod hypomorphy;
pub mod incidence;

pub use error::{Error, Result};
pub use graphkit::{Graph, Permutation, VertexSet};

/// Version string embedded in reports and atlas logs.
pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

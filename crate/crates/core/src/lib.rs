//! Exact graph homomorphism search, fractional graph powers and the coloring
//! invariants built on them (chromatic and circular chromatic number, odd
//! girth, power thickness, colorful graphs).
//!
//! Everything here is exact: a negative homomorphism answer is an exhausted
//! search, and budget exhaustion is reported as [`Error::Unknown`] rather than
//! as a refutation.

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod hom;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod label;
pub mod powers;
pub mod rational;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, OddGirth};
pub use hom::{exists_hom, hom_equivalent, strictly_below, HomCertificate, HomMap};
pub use iso::are_isomorphic;
pub use label::VertexLabel;
pub use powers::OddFraction;
pub use rational::RationalValue;

/// Search budgets and size caps shared by the expensive operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Branching nodes a single homomorphism search may expand.
    pub node_budget: u64,
    /// Largest vertex count a helical or negative-power construction may produce.
    pub vertex_cap: usize,
    /// Largest graph `core_of` will attempt.
    pub core_cap: usize,
    /// Partial colourings `is_colorful` may expand.
    pub coloring_budget: u64,
    /// Prune symmetric branches in the homomorphism search. Answers are the
    /// same either way; turning it off is only useful for cross-checking.
    pub symmetry_breaking: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_budget: 500_000_000,
            vertex_cap: 200_000,
            core_cap: 14,
            coloring_budget: 10_000_000,
            symmetry_breaking: true,
        }
    }
}

impl Limits {
    /// Defaults overridden by `GPC_NODE_BUDGET` and `GPC_VERTEX_CAP` when set.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = env_number("GPC_NODE_BUDGET") {
            l.node_budget = v;
        }
        if let Some(v) = env_number("GPC_VERTEX_CAP") {
            l.vertex_cap = v as usize;
        }
        l
    }
}

fn env_number(key: &str) -> Option<u64> {
    std::env::var(key).ok()?.trim().parse().ok()
}

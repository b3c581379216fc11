//! Vertex-centric programming model: algorithm definitions.
//!
//! An [`AlgorithmSpec`] bundles the per-algorithm functions of the
//! scatter/apply model: property initialization, the initial frontier,
//! `process_edge`, `reduce`, and `apply`. The reduce operator is
//! commutative and associative over plain integers for every algorithm
//! here, which is what lets the cycle simulator interleave updates across
//! channels in any order and still match the sequential reference bit for
//! bit.
//!
//! PageRank runs in Q32.32 fixed point (exact integer addition) for the
//! same reason: floating-point sums would depend on reduction order.

mod reference;

pub use reference::{
    count_traversed_edges, run_reference, trace_to_csv, IterationRecord, ReferenceResult,
};

use crate::graph::{CsrGraph, VertexId};
use thiserror::Error;

/// Property values for every algorithm live in u64.
pub type Property = u64;

/// Absorbing "unreached" sentinel for min/max reductions.
pub const INF: Property = u64::MAX;

/// One unit in Q32.32 fixed point.
pub const Q32_ONE: u64 = 1 << 32;

#[inline]
pub fn q32_from_f64(x: f64) -> u64 {
    (x * Q32_ONE as f64).round() as u64
}

#[inline]
fn q32_mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) >> 32) as u64
}

#[derive(Debug, Error)]
pub enum VcpmError {
    #[error("root vertex {root} out of range: graph has {num_vertices} vertices")]
    RootOutOfRange { root: VertexId, num_vertices: usize },
    #[error("damping factor {0} must lie strictly between 0 and 1")]
    InvalidDamping(f64),
    #[error("max_iterations must be >= 1")]
    ZeroIterations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Stop when the frontier empties.
    FrontierEmpty,
    /// Run exactly this many iterations.
    FixedIterations(u32),
    /// Stop when no property moved by more than this amount in one apply.
    Epsilon(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Bfs { root: VertexId },
    Sssp { root: VertexId },
    Sswp { root: VertexId },
    PageRank { damping: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmSpec {
    name: &'static str,
    kind: Kind,
    pub termination: Termination,
}

impl AlgorithmSpec {
    /// Breadth-first search: hop counts from `root`.
    pub fn bfs(root: VertexId) -> Self {
        AlgorithmSpec {
            name: "bfs",
            kind: Kind::Bfs { root },
            termination: Termination::FrontierEmpty,
        }
    }

    /// Single-source shortest paths over non-negative integer weights.
    pub fn sssp(root: VertexId) -> Self {
        AlgorithmSpec {
            name: "sssp",
            kind: Kind::Sssp { root },
            termination: Termination::FrontierEmpty,
        }
    }

    /// Single-source widest paths: maximize the minimum edge weight.
    pub fn sswp(root: VertexId) -> Self {
        AlgorithmSpec {
            name: "sswp",
            kind: Kind::Sswp { root },
            termination: Termination::FrontierEmpty,
        }
    }

    /// PageRank in Q32.32 fixed point, run for a fixed iteration count.
    pub fn pagerank(damping: f64, iterations: u32) -> Result<Self, VcpmError> {
        if !(damping > 0.0 && damping < 1.0) {
            return Err(VcpmError::InvalidDamping(damping));
        }
        Ok(AlgorithmSpec {
            name: "pr",
            kind: Kind::PageRank {
                damping: q32_from_f64(damping),
            },
            termination: Termination::FixedIterations(iterations),
        })
    }

    /// PageRank with the default damping 0.85 and 10 iterations.
    pub fn pagerank_default() -> Self {
        Self::pagerank(0.85, 10).expect("default damping is valid")
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn validate(&self, graph: &CsrGraph) -> Result<(), VcpmError> {
        match self.kind {
            Kind::Bfs { root } | Kind::Sssp { root } | Kind::Sswp { root } => {
                if (root as usize) >= graph.num_vertices() {
                    return Err(VcpmError::RootOutOfRange {
                        root,
                        num_vertices: graph.num_vertices(),
                    });
                }
            }
            Kind::PageRank { .. } => {}
        }
        Ok(())
    }

    pub fn init_property(&self, v: VertexId, graph: &CsrGraph) -> Property {
        match self.kind {
            Kind::Bfs { root } | Kind::Sssp { root } => {
                if v == root {
                    0
                } else {
                    INF
                }
            }
            Kind::Sswp { root } => {
                if v == root {
                    INF
                } else {
                    0
                }
            }
            Kind::PageRank { .. } => Q32_ONE / graph.num_vertices() as u64,
        }
    }

    pub fn init_frontier(&self, graph: &CsrGraph) -> Vec<VertexId> {
        match self.kind {
            Kind::Bfs { root } | Kind::Sssp { root } | Kind::Sswp { root } => vec![root],
            Kind::PageRank { .. } => (0..graph.num_vertices() as VertexId).collect(),
        }
    }

    /// Value scattered along every outgoing edge of an active vertex,
    /// computed once per vertex at issue time. PageRank folds the division
    /// by out-degree in here so `process_edge` keeps its two-argument
    /// shape.
    #[inline]
    pub fn scatter_value(&self, prop: Property, out_degree: usize) -> Property {
        match self.kind {
            Kind::PageRank { .. } => {
                if out_degree == 0 {
                    prop
                } else {
                    prop / out_degree as u64
                }
            }
            _ => prop,
        }
    }

    #[inline]
    pub fn process_edge(&self, src_value: Property, weight: u32) -> Property {
        match self.kind {
            Kind::Bfs { .. } => src_value.saturating_add(1),
            Kind::Sssp { .. } => src_value.saturating_add(weight as u64),
            Kind::Sswp { .. } => src_value.min(weight as u64),
            Kind::PageRank { .. } => src_value,
        }
    }

    #[inline]
    pub fn reduce(&self, a: Property, b: Property) -> Property {
        match self.kind {
            Kind::Bfs { .. } | Kind::Sssp { .. } => a.min(b),
            Kind::Sswp { .. } => a.max(b),
            Kind::PageRank { .. } => a.wrapping_add(b),
        }
    }

    #[inline]
    pub fn reduce_identity(&self) -> Property {
        match self.kind {
            Kind::Bfs { .. } | Kind::Sssp { .. } => INF,
            Kind::Sswp { .. } => 0,
            Kind::PageRank { .. } => 0,
        }
    }

    /// Synchronizes one vertex's tProperty into its property. Returns the
    /// new value and whether the vertex becomes active next iteration.
    #[inline]
    pub fn apply(
        &self,
        prop: Property,
        t_prop: Property,
        num_vertices: usize,
    ) -> (Property, bool) {
        match self.kind {
            Kind::Bfs { .. } | Kind::Sssp { .. } => {
                let new = prop.min(t_prop);
                (new, new < prop)
            }
            Kind::Sswp { .. } => {
                let new = prop.max(t_prop);
                (new, new > prop)
            }
            Kind::PageRank { damping } => {
                let base = ((Q32_ONE - damping) as u128 / num_vertices as u128) as u64;
                (base.wrapping_add(q32_mul(damping, t_prop)), true)
            }
        }
    }
}

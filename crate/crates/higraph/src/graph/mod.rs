//! CSR graph storage and bank-interleaving arithmetic.
//!
//! A [`CsrGraph`] is built once and never mutated: the offset array has
//! `num_vertices + 1` entries, `offsets[v]..offsets[v+1]` indexes vertex
//! `v`'s outgoing edges in the edge array. Parallel duplicate edges and
//! self-loops are kept; the structure is a directed multigraph.

mod edge_list;
mod rmat;

pub use edge_list::{load_edge_list, load_edge_list_path};
pub use rmat::{assign_random_weights, generate_rmat, RmatParams};

use thiserror::Error;

/// Dense 0-based vertex identifier.
pub type VertexId = u32;

/// One outgoing edge: destination vertex and a non-negative weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub dst: VertexId,
    pub weight: u32,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: vertex id {value} is negative")]
    NegativeId { line: usize, value: i64 },
    #[error("vertex {vertex} out of range: graph has {num_vertices} vertices")]
    VertexRange { vertex: u64, num_vertices: usize },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsrGraph {
    offsets: Vec<usize>,
    edges: Vec<Edge>,
}

impl CsrGraph {
    /// Empty graph with no vertices and no edges.
    pub fn empty() -> Self {
        CsrGraph {
            offsets: vec![0],
            edges: Vec::new(),
        }
    }

    /// Builds a CSR graph from `(src, edge)` pairs via a stable counting
    /// sort: edges keep their input order within each source vertex.
    pub fn from_pairs(num_vertices: usize, pairs: &[(VertexId, Edge)]) -> Self {
        let mut offsets = vec![0usize; num_vertices + 1];
        for (src, _) in pairs {
            debug_assert!((*src as usize) < num_vertices);
            offsets[*src as usize + 1] += 1;
        }
        for v in 1..=num_vertices {
            offsets[v] += offsets[v - 1];
        }
        let mut cursor = offsets.clone();
        let mut edges = vec![
            Edge {
                dst: 0,
                weight: 0
            };
            pairs.len()
        ];
        for (src, edge) in pairs {
            debug_assert!((edge.dst as usize) < num_vertices);
            let slot = cursor[*src as usize];
            edges[slot] = *edge;
            cursor[*src as usize] += 1;
        }
        CsrGraph { offsets, edges }
    }

    /// Convenience builder from `(src, dst, weight)` triples; the vertex
    /// count is one past the largest id mentioned.
    pub fn from_triples(triples: &[(VertexId, VertexId, u32)]) -> Self {
        let num_vertices = triples
            .iter()
            .map(|&(s, d, _)| s.max(d) as usize + 1)
            .max()
            .unwrap_or(0);
        let pairs: Vec<(VertexId, Edge)> = triples
            .iter()
            .map(|&(s, d, w)| (s, Edge { dst: d, weight: w }))
            .collect();
        Self::from_pairs(num_vertices, &pairs)
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.offsets[v as usize + 1] - self.offsets[v as usize])
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&[Edge], GraphError> {
        self.check_vertex(v)?;
        Ok(&self.edges[self.offsets[v as usize]..self.offsets[v as usize + 1]])
    }

    /// Edge-array index range of vertex `v`. Panics if `v` is out of range;
    /// use [`CsrGraph::neighbors`] for the checked variant.
    #[inline]
    pub fn edge_range(&self, v: VertexId) -> std::ops::Range<usize> {
        self.offsets[v as usize]..self.offsets[v as usize + 1]
    }

    #[inline]
    pub fn degree_unchecked(&self, v: VertexId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Iterates edges back out as `(src, edge)` pairs, in CSR order.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (VertexId, Edge)> + '_ {
        (0..self.num_vertices()).flat_map(move |v| {
            self.edges[self.edge_range(v as VertexId)]
                .iter()
                .map(move |e| (v as VertexId, *e))
        })
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if (v as usize) < self.num_vertices() {
            Ok(())
        } else {
            Err(GraphError::VertexRange {
                vertex: v as u64,
                num_vertices: self.num_vertices(),
            })
        }
    }

    #[cfg(debug_assertions)]
    pub(crate) fn assert_invariants(&self) {
        assert_eq!(self.offsets[0], 0);
        assert_eq!(*self.offsets.last().unwrap(), self.edges.len());
        assert!(self.offsets.windows(2).all(|w| w[0] <= w[1]));
        let n = self.num_vertices();
        assert!(self.edges.iter().all(|e| (e.dst as usize) < n));
    }
}

/// Interleave mapping: array entry `index` lives in buffer bank
/// `index mod num_banks`. `num_banks` must be a power of two of at least 2.
#[inline]
pub fn bank_of(index: usize, num_banks: usize) -> usize {
    debug_assert!(
        num_banks >= 2 && num_banks.is_power_of_two(),
        "bank count must be a power of two >= 2, got {num_banks}"
    );
    index & (num_banks - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bank_of_examples() {
        assert_eq!(bank_of(5, 4), 1);
        assert_eq!(bank_of(0, 32), 0);
        // An offset-4 length-9 run spans banks 4..=12 with 16 banks.
        assert_eq!(bank_of(12, 16), 12);
        let banks: Vec<usize> = (4..4 + 9).map(|i| bank_of(i, 16)).collect();
        assert_eq!(banks, vec![4, 5, 6, 7, 8, 9, 10, 11, 12]);
    }

    #[test]
    fn degrees_and_neighbors() {
        let g = CsrGraph::from_triples(&[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(g.out_degree(1).unwrap(), 1);
        assert_eq!(g.neighbors(1).unwrap(), &[Edge { dst: 2, weight: 1 }]);
        // vertex 2 is a sink
        assert_eq!(g.out_degree(2).unwrap(), 0);
        assert!(g.neighbors(2).unwrap().is_empty());
        assert!(matches!(
            g.out_degree(3),
            Err(GraphError::VertexRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn empty_graph() {
        let g = CsrGraph::empty();
        assert_eq!(g.num_vertices(), 0);
        assert_eq!(g.num_edges(), 0);
    }

    proptest! {
        #[test]
        fn csr_round_trip(triples in proptest::collection::vec((0u32..50, 0u32..50, 0u32..100), 0..200)) {
            let g = CsrGraph::from_triples(&triples);
            let pairs: Vec<(VertexId, Edge)> = g.edge_pairs().collect();
            let rebuilt = CsrGraph::from_pairs(g.num_vertices(), &pairs);
            prop_assert_eq!(g, rebuilt);
        }

        #[test]
        fn banks_of_an_edge_run_are_consecutive_residues(v in 0u32..40, banks_log in 1u32..8,
            triples in proptest::collection::vec((0u32..40, 0u32..40, 1u32..5), 1..300))
        {
            let g = CsrGraph::from_triples(&triples);
            let n = 1usize << banks_log;
            if (v as usize) < g.num_vertices() {
                let r = g.edge_range(v);
                for (k, i) in r.clone().enumerate() {
                    prop_assert_eq!(bank_of(i, n), (bank_of(r.start, n) + k) % n);
                }
            }
        }
    }
}

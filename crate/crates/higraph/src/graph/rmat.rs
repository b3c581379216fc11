//! Synthetic RMAT graph generation and random weight assignment.
//!
//! Edges are drawn by recursive quadrant selection: at each of `scale`
//! levels one quadrant is picked with probabilities (a, b, c, d) and
//! contributes one source bit and one destination bit, most significant
//! first. Duplicates and self-loops are kept, so the edge count is exactly
//! `2^scale * edge_factor`.
//!
//! Following the Graph500 convention, vertex labels are randomly permuted
//! after drawing (`permute: true`). Without the relabeling, low vertex ids
//! soak up most of the degree mass *and* alias onto low bank ids, which
//! turns every interleaved buffer into a single hot bank and hides the
//! interconnect behavior this crate exists to study. Set `permute: false`
//! to observe the raw recursion.
//!
//! All randomness comes from one [`Pcg32`](crate::rng::Pcg32) stream seeded
//! with `params.seed`: first `scale` draws per edge, then the permutation.
//! Output is a pure function of the parameter struct, bit-identical across
//! runs and platforms.

use super::{CsrGraph, Edge, GraphError, VertexId};
use crate::rng::Pcg32;

#[derive(Debug, Clone, PartialEq)]
pub struct RmatParams {
    /// log2 of the vertex count.
    pub scale: u32,
    /// Directed edges per vertex.
    pub edge_factor: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub seed: u64,
    /// Randomly relabel vertices after drawing (Graph500 convention).
    pub permute: bool,
}

impl Default for RmatParams {
    fn default() -> Self {
        RmatParams {
            scale: 14,
            edge_factor: 64,
            a: 0.57,
            b: 0.19,
            c: 0.19,
            d: 0.05,
            seed: 1,
            permute: true,
        }
    }
}

impl RmatParams {
    pub fn new(scale: u32, edge_factor: usize, seed: u64) -> Self {
        RmatParams {
            scale,
            edge_factor,
            seed,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<(), GraphError> {
        if self.scale < 1 {
            return Err(GraphError::InvalidParams("scale must be >= 1".into()));
        }
        if self.scale > 31 {
            return Err(GraphError::Capacity(format!(
                "scale {} exceeds the 32-bit vertex id space",
                self.scale
            )));
        }
        let probs = [self.a, self.b, self.c, self.d];
        if probs.iter().any(|p| *p < 0.0 || !p.is_finite()) {
            return Err(GraphError::InvalidParams(
                "quadrant probabilities must be non-negative".into(),
            ));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(GraphError::InvalidParams(format!(
                "quadrant probabilities sum to {sum}, expected 1"
            )));
        }
        Ok(())
    }
}

pub fn generate_rmat(params: &RmatParams) -> Result<CsrGraph, GraphError> {
    params.validate()?;
    let num_vertices = 1usize << params.scale;
    let num_edges = num_vertices
        .checked_mul(params.edge_factor)
        .filter(|m| *m < usize::MAX / std::mem::size_of::<Edge>())
        .ok_or_else(|| {
            GraphError::Capacity(format!(
                "edge count 2^{} * {} overflows the index type",
                params.scale, params.edge_factor
            ))
        })?;

    let mut rng = Pcg32::new(params.seed);

    // Cumulative quadrant thresholds on the full u64 range, so the
    // per-level pick is a pure integer comparison.
    const TWO64: f64 = 18_446_744_073_709_551_616.0;
    let t_a = (params.a * TWO64) as u128;
    let t_ab = ((params.a + params.b) * TWO64) as u128;
    let t_abc = ((params.a + params.b + params.c) * TWO64) as u128;

    let mut pairs: Vec<(VertexId, Edge)> = Vec::with_capacity(num_edges);
    for _ in 0..num_edges {
        let mut src: u32 = 0;
        let mut dst: u32 = 0;
        for _ in 0..params.scale {
            let r = rng.next_u64() as u128;
            let (s_bit, d_bit) = if r < t_a {
                (0, 0)
            } else if r < t_ab {
                (0, 1)
            } else if r < t_abc {
                (1, 0)
            } else {
                (1, 1)
            };
            src = (src << 1) | s_bit;
            dst = (dst << 1) | d_bit;
        }
        pairs.push((src, Edge { dst, weight: 1 }));
    }

    if params.permute {
        let mut relabel: Vec<VertexId> = (0..num_vertices as VertexId).collect();
        rng.shuffle(&mut relabel);
        for (src, edge) in &mut pairs {
            *src = relabel[*src as usize];
            edge.dst = relabel[edge.dst as usize];
        }
    }

    let graph = CsrGraph::from_pairs(num_vertices, &pairs);
    #[cfg(debug_assertions)]
    graph.assert_invariants();
    Ok(graph)
}

/// Returns a structurally identical graph with every edge weight drawn
/// uniformly from `[lo, hi]`. Weights are assigned in edge-array order
/// from a fresh stream seeded with `seed`.
pub fn assign_random_weights(graph: &CsrGraph, seed: u64, lo: u32, hi: u32) -> CsrGraph {
    assert!(lo <= hi, "weight range is empty: [{lo}, {hi}]");
    let mut rng = Pcg32::new(seed);
    let span = (hi - lo) as u64 + 1;
    let pairs: Vec<(VertexId, Edge)> = graph
        .edge_pairs()
        .map(|(src, mut e)| {
            e.weight = lo + rng.gen_range(span) as u32;
            (src, e)
        })
        .collect();
    CsrGraph::from_pairs(graph.num_vertices(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sized_graphs() {
        // 16K vertices, 1.05M edges, mean degree 64.
        let g = generate_rmat(&RmatParams::new(14, 64, 1)).unwrap();
        assert_eq!(g.num_vertices(), 16_384);
        assert_eq!(g.num_edges(), 1_048_576);
        assert_eq!(g.num_edges() / g.num_vertices(), 64);
    }

    #[test]
    fn rmat16_counts() {
        // 66K vertices, 4.19M edges.
        let g = generate_rmat(&RmatParams::new(16, 64, 1)).unwrap();
        assert_eq!(g.num_vertices(), 65_536);
        assert_eq!(g.num_edges(), 4_194_304);
    }

    #[test]
    fn degenerate_single_quadrant() {
        // With all mass on quadrant (0,0) every level picks bit 0, so both
        // edges collapse onto the self-loop at vertex 0. Relabeling is off
        // here to observe the raw recursion.
        let params = RmatParams {
            scale: 1,
            edge_factor: 1,
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 0.0,
            seed: 7,
            permute: false,
        };
        let g = generate_rmat(&params).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.offsets(), &[0, 2, 2]);
        assert!(g.edges().iter().all(|e| e.dst == 0));

        // With relabeling the two edges are still one repeated self-loop.
        let g = generate_rmat(&RmatParams {
            permute: true,
            ..params
        })
        .unwrap();
        let pairs: Vec<_> = g.edge_pairs().collect();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0], pairs[1]);
        assert_eq!(pairs[0].0, pairs[0].1.dst);
    }

    #[test]
    fn deterministic_across_runs() {
        let p = RmatParams::new(10, 8, 42);
        assert_eq!(generate_rmat(&p).unwrap(), generate_rmat(&p).unwrap());
    }

    #[test]
    fn seed_changes_structure() {
        let a = generate_rmat(&RmatParams::new(8, 8, 1)).unwrap();
        let b = generate_rmat(&RmatParams::new(8, 8, 2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(generate_rmat(&RmatParams::new(0, 4, 1)).is_err());
        assert!(generate_rmat(&RmatParams::new(40, 4, 1)).is_err());
        let mut p = RmatParams::new(4, 4, 1);
        p.a = 0.9;
        assert!(generate_rmat(&p).is_err());
    }

    #[test]
    fn weights_constant_range() {
        let g = generate_rmat(&RmatParams::new(6, 4, 3)).unwrap();
        let w = assign_random_weights(&g, 5, 1, 1);
        assert!(w.edges().iter().all(|e| e.weight == 1));
        assert_eq!(w.offsets(), g.offsets());
    }

    #[test]
    fn weights_deterministic() {
        let g = generate_rmat(&RmatParams::new(6, 4, 3)).unwrap();
        let a = assign_random_weights(&g, 9, 1, 63);
        let b = assign_random_weights(&g, 9, 1, 63);
        assert_eq!(a, b);
        assert_ne!(a, assign_random_weights(&g, 10, 1, 63));
    }

    #[test]
    fn weight_mean_near_midpoint() {
        // 2^11 * 64 = 131072 edges >= 1e5 samples; mean of U[1,63] is 32.
        let g = generate_rmat(&RmatParams::new(11, 64, 3)).unwrap();
        let w = assign_random_weights(&g, 11, 1, 63);
        let mean =
            w.edges().iter().map(|e| e.weight as f64).sum::<f64>() / w.num_edges() as f64;
        assert!((mean - 32.0).abs() < 32.0 * 0.05, "mean {mean}");
    }
}

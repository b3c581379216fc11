//! Golden sequential executor of the scatter/apply model.
//!
//! `run_reference` is the functional oracle the cycle simulator is checked
//! against: single-threaded, deterministic, no machinery — just the
//! per-iteration scatter into the tProperty array followed by a full
//! apply sweep.

use super::{AlgorithmSpec, Property, Termination, VcpmError};
use crate::graph::{CsrGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRecord {
    /// 1-based iteration number.
    pub iteration: u32,
    pub frontier_size: usize,
    pub edges_traversed: u64,
}

#[derive(Debug, Clone)]
pub struct ReferenceResult {
    pub property: Vec<Property>,
    pub trace: Vec<IterationRecord>,
    /// True when the run stopped at `max_iterations` rather than at the
    /// spec's own termination condition.
    pub truncated: bool,
}

/// Runs `spec` on `graph` until its termination condition or
/// `max_iterations`, whichever comes first.
pub fn run_reference(
    graph: &CsrGraph,
    spec: &AlgorithmSpec,
    max_iterations: u32,
) -> Result<ReferenceResult, VcpmError> {
    spec.validate(graph)?;
    if max_iterations == 0 {
        return Err(VcpmError::ZeroIterations);
    }
    let n = graph.num_vertices();
    let mut property: Vec<Property> = (0..n)
        .map(|v| spec.init_property(v as VertexId, graph))
        .collect();
    let mut t_property: Vec<Property> = vec![spec.reduce_identity(); n];
    let mut frontier = spec.init_frontier(graph);
    let mut trace = Vec::new();
    let mut truncated = false;
    let mut iteration = 0u32;

    while !frontier.is_empty() {
        if let Termination::FixedIterations(k) = spec.termination {
            if iteration >= k {
                break;
            }
        }
        if iteration >= max_iterations {
            truncated = true;
            break;
        }
        iteration += 1;

        // Scatter: fold each frontier vertex's influence into tProperty.
        let mut edges_traversed = 0u64;
        for &u in &frontier {
            let degree = graph.degree_unchecked(u);
            let src_value = spec.scatter_value(property[u as usize], degree);
            for e in &graph.edges()[graph.edge_range(u)] {
                let t = &mut t_property[e.dst as usize];
                *t = spec.reduce(*t, spec.process_edge(src_value, e.weight));
            }
            edges_traversed += degree as u64;
        }
        trace.push(IterationRecord {
            iteration,
            frontier_size: frontier.len(),
            edges_traversed,
        });

        // Apply: synchronize tProperty into the property array, reset
        // tProperty to the reduce identity, build the next frontier in
        // ascending vertex order.
        let mut next = Vec::new();
        let mut max_delta = 0u64;
        for v in 0..n {
            let (new, active) = spec.apply(property[v], t_property[v], n);
            max_delta = max_delta.max(new.abs_diff(property[v]));
            property[v] = new;
            t_property[v] = spec.reduce_identity();
            if active {
                next.push(v as VertexId);
            }
        }
        frontier = next;

        if let Termination::Epsilon(eps) = spec.termination {
            if max_delta <= eps {
                break;
            }
        }
    }

    Ok(ReferenceResult {
        property,
        trace,
        truncated,
    })
}

/// Total edges traversed over a run: the numerator of edges-per-cycle.
pub fn count_traversed_edges(trace: &[IterationRecord]) -> u64 {
    trace.iter().map(|r| r.edges_traversed).sum()
}

/// Trace export: `iteration,frontier_size,edges_traversed` per line.
pub fn trace_to_csv(trace: &[IterationRecord]) -> String {
    let mut out = String::from("iteration,frontier_size,edges_traversed\n");
    for r in trace {
        out.push_str(&format!(
            "{},{},{}\n",
            r.iteration, r.frontier_size, r.edges_traversed
        ));
    }
    out
}

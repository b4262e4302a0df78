//! Directed graph with 1-based vertex ids and sorted adjacency in both directions.

use thiserror::Error;

/// Flat 1-based vertex identifier.
pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(VertexId, u32),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(VertexId, VertexId),
}

/// A simple directed graph. Stores both out- and in-adjacency lists, each
/// ascending, so that `in_adj` is always the exact transpose of `out_adj`.
/// Self-loops and parallel arcs are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: u32,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl DiGraph {
    pub fn from_arcs(n: u32, arcs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut out_adj = vec![Vec::new(); n as usize];
        let mut in_adj = vec![Vec::new(); n as usize];
        for &(a, b) in arcs {
            if a < 1 || a > n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b < 1 || b > n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            out_adj[(a - 1) as usize].push(b);
            in_adj[(b - 1) as usize].push(a);
        }
        for v in 0..n as usize {
            out_adj[v].sort_unstable();
            if let Some(w) = out_adj[v].windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateArc(v as u32 + 1, w[0]));
            }
            in_adj[v].sort_unstable();
        }
        Ok(DiGraph { n, out_adj, in_adj })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> u64 {
        self.out_adj.iter().map(|a| a.len() as u64).sum()
    }

    /// Successors of `v`, ascending. Panics if `v` is not a vertex.
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[(v - 1) as usize]
    }

    /// Predecessors of `v`, ascending. Panics if `v` is not a vertex.
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[(v - 1) as usize]
    }

    pub fn has_arc(&self, a: VertexId, b: VertexId) -> bool {
        a >= 1 && a <= self.n && self.out_adj[(a - 1) as usize].binary_search(&b).is_ok()
    }

    /// All arcs in ascending (source, target) order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(v, adj)| adj.iter().map(move |&w| (v as u32 + 1, w)))
    }
}

use crate::error::{Error, Result};
use crate::graph::{EdgeIdx, LabeledGraph, VertexIdx};

/// A closed walk given by its start vertex and consecutive edges.
///
/// Edges may repeat; the walk need not be simple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWalk {
    start: VertexIdx,
    edges: Vec<EdgeIdx>,
}

impl CycleWalk {
    pub fn new(g: &LabeledGraph, start: VertexIdx, edges: Vec<EdgeIdx>) -> Result<Self> {
        if start >= g.vertex_count() {
            return Err(Error::UnknownVertex(start));
        }
        if edges.len() < 2 {
            return Err(Error::InvalidWalk(format!("{} edges, need at least 2", edges.len())));
        }
        let mut at = start;
        for (step, &e) in edges.iter().enumerate() {
            if e >= g.edge_count() {
                return Err(Error::InvalidWalk(format!("edge index {e} out of range")));
            }
            let edge = g.edge(e);
            if !edge.touches(at) {
                return Err(Error::InvalidWalk(format!(
                    "step {step}: edge {e} does not leave vertex {at}"
                )));
            }
            at = edge.other(at);
        }
        if at != start {
            return Err(Error::InvalidWalk(format!("ends at {at}, started at {start}")));
        }
        Ok(CycleWalk { start, edges })
    }

    pub fn start(&self) -> VertexIdx {
        self.start
    }

    pub fn edges(&self) -> &[EdgeIdx] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.edges.len() % 2 == 1
    }

    /// Vertices visited, starting and ending at `start` (length `len() + 1`).
    pub fn vertices(&self, g: &LabeledGraph) -> Vec<VertexIdx> {
        let mut out = Vec::with_capacity(self.edges.len() + 1);
        let mut at = self.start;
        out.push(at);
        for &e in &self.edges {
            at = g.edge(e).other(at);
            out.push(at);
        }
        out
    }

    /// The same closed walk started `k` steps later.
    pub fn rotated(&self, g: &LabeledGraph, k: usize) -> CycleWalk {
        let k = k % self.edges.len();
        let start = self.vertices(g)[k];
        let mut edges = self.edges[k..].to_vec();
        edges.extend_from_slice(&self.edges[..k]);
        CycleWalk { start, edges }
    }

    /// The same closed walk traversed backwards.
    pub fn reversed(&self) -> CycleWalk {
        CycleWalk {
            start: self.start,
            edges: self.edges.iter().rev().copied().collect(),
        }
    }
}

use crate::graph::{EdgeIdx, LabeledGraph, VertexIdx};
use crate::linalg::IntMatrix;
use crate::traversal::ComponentDecomposition;

/// Vertex-by-edge 0/1 incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    // row-major
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    /// The two row indices of column `j`.
    pub fn endpoints(&self, j: usize) -> (usize, usize) {
        let mut it = (0..self.rows).filter(|&i| self.get(i, j) == 1);
        (it.next().unwrap(), it.next().unwrap())
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| i64::from(self.get(i, j)))
    }

    /// `A x` over the integers.
    pub fn apply_i64(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| self.get(i, j) == 1).map(|j| x[j]).sum())
            .collect()
    }

    /// Whether `A x ≡ 0 (mod d)`.
    pub fn annihilates_mod(&self, x: &[u64], d: u64) -> bool {
        assert_eq!(x.len(), self.cols);
        let d = d as u128;
        (0..self.rows).all(|i| {
            (0..self.cols)
                .filter(|&j| self.get(i, j) == 1)
                .map(|j| x[j] as u128)
                .sum::<u128>()
                % d
                == 0
        })
    }
}

/// Incidence matrix of the whole graph: row order = vertex order, column
/// order = edge order.
pub fn incidence_matrix(g: &LabeledGraph) -> IncidenceMatrix {
    let vertices: Vec<VertexIdx> = (0..g.vertex_count()).collect();
    let edges: Vec<EdgeIdx> = (0..g.edge_count()).collect();
    restricted_incidence(g, &vertices, &edges)
}

/// Incidence matrix of one component, rows and columns in the component's
/// ascending vertex and edge order.
pub fn component_incidence(g: &LabeledGraph, comp: &ComponentDecomposition, c: usize) -> IncidenceMatrix {
    restricted_incidence(g, &comp.components[c], &comp.component_edges[c])
}

fn restricted_incidence(g: &LabeledGraph, vertices: &[VertexIdx], edges: &[EdgeIdx]) -> IncidenceMatrix {
    let rows = vertices.len();
    let cols = edges.len();
    let mut row_of = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        row_of[v] = i;
    }
    let mut entries = vec![0u8; rows * cols];
    for (j, &e) in edges.iter().enumerate() {
        let edge = g.edge(e);
        entries[row_of[edge.u] * cols + j] = 1;
        entries[row_of[edge.v] * cols + j] = 1;
    }
    IncidenceMatrix { rows, cols, entries }
}

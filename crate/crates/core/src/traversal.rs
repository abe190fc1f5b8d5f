//! Connected components, BFS spanning trees and odd-cycle witnesses.

use std::collections::VecDeque;

use crate::graph::{EdgeIdx, LabeledGraph, VertexIdx};
use crate::walk::CycleWalk;

/// Components with one rooted BFS tree each.
///
/// Components are numbered in order of their least vertex; the root of each
/// is that least vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Vertices of each component, ascending.
    pub components: Vec<Vec<VertexIdx>>,
    /// Edges of each component, in edge order.
    pub component_edges: Vec<Vec<EdgeIdx>>,
    pub component_of: Vec<usize>,
    pub roots: Vec<VertexIdx>,
    /// Tree edge to the parent; `None` for roots.
    pub parent_edge: Vec<Option<EdgeIdx>>,
    pub depth: Vec<usize>,
    /// Vertices of each component in BFS order (root first).
    pub bfs_order: Vec<Vec<VertexIdx>>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Distance-parity bit from the component root.
    pub fn parity(&self, v: VertexIdx) -> u8 {
        (self.depth[v] % 2) as u8
    }

    pub fn parent(&self, g: &LabeledGraph, v: VertexIdx) -> Option<VertexIdx> {
        self.parent_edge[v].map(|e| g.edge(e).other(v))
    }

    /// Edges walked from `v` up to (excluding) `ancestor`.
    fn climb(&self, g: &LabeledGraph, mut v: VertexIdx, ancestor: VertexIdx) -> Vec<EdgeIdx> {
        let mut path = Vec::new();
        while v != ancestor {
            let e = self.parent_edge[v].expect("ancestor lies on the root path");
            path.push(e);
            v = g.edge(e).other(v);
        }
        path
    }

    fn lowest_common_ancestor(&self, g: &LabeledGraph, mut a: VertexIdx, mut b: VertexIdx) -> VertexIdx {
        while self.depth[a] > self.depth[b] {
            a = self.parent(g, a).unwrap();
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent(g, b).unwrap();
        }
        while a != b {
            a = self.parent(g, a).unwrap();
            b = self.parent(g, b).unwrap();
        }
        a
    }
}

/// BFS from the least unvisited vertex of every component.
pub fn components_and_parity(g: &LabeledGraph) -> ComponentDecomposition {
    let n = g.vertex_count();
    let mut component_of = vec![usize::MAX; n];
    let mut parent_edge = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut components = Vec::new();
    let mut roots = Vec::new();
    let mut bfs_order = Vec::new();
    let mut queue = VecDeque::new();

    for root in 0..n {
        if component_of[root] != usize::MAX {
            continue;
        }
        let c = components.len();
        component_of[root] = c;
        queue.push_back(root);
        let mut order = Vec::new();
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &e in g.incident(x) {
                let y = g.edge(e).other(x);
                if component_of[y] == usize::MAX {
                    component_of[y] = c;
                    parent_edge[y] = Some(e);
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let mut members = order.clone();
        members.sort_unstable();
        components.push(members);
        roots.push(root);
        bfs_order.push(order);
    }

    let mut component_edges = vec![Vec::new(); components.len()];
    for (i, e) in g.edges().iter().enumerate() {
        component_edges[component_of[e.u]].push(i);
    }

    ComponentDecomposition {
        components,
        component_edges,
        component_of,
        roots,
        parent_edge,
        depth,
        bfs_order,
    }
}

/// A closed walk of odd length proving a component is not bipartite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleWitness {
    pub walk: CycleWalk,
}

/// Odd-cycle witness within component `c`, if it is not bipartite.
///
/// Uses the first edge (in edge order) whose endpoints have equal BFS
/// parity. The walk starts at one endpoint, climbs to the lowest common
/// ancestor, descends to the other endpoint and closes along that edge.
pub fn find_odd_cycle_in(
    g: &LabeledGraph,
    comp: &ComponentDecomposition,
    c: usize,
) -> Option<OddCycleWitness> {
    let &e = comp.component_edges[c].iter().find(|&&e| {
        let edge = g.edge(e);
        comp.parity(edge.u) == comp.parity(edge.v)
    })?;
    let edge = g.edge(e);
    let (u, v) = (edge.u, edge.v);
    let lca = comp.lowest_common_ancestor(g, u, v);
    let mut edges = comp.climb(g, u, lca);
    let mut down = comp.climb(g, v, lca);
    down.reverse();
    edges.extend(down);
    edges.push(e);
    let walk = CycleWalk::new(g, u, edges).expect("tree paths plus closing edge form a closed walk");
    debug_assert!(walk.is_odd());
    Some(OddCycleWitness { walk })
}

/// First odd-cycle witness over all components; `None` iff bipartite.
pub fn find_odd_cycle(g: &LabeledGraph, comp: &ComponentDecomposition) -> Option<OddCycleWitness> {
    (0..comp.len()).find_map(|c| find_odd_cycle_in(g, comp, c))
}

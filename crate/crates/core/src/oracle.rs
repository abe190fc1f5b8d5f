//! Brute-force ground truth.
//!
//! Nothing here calls into the engine: edge validity, walk validation,
//! spanning trees and cycle sums are all re-derived from the raw edge list.

use crate::error::{Error, Result};
use crate::exec::{filter_map_range, Strategy};
use crate::graph::{EdgeIdx, LabeledGraph, VLabeling, VertexIdx};
use crate::walk::CycleWalk;

/// Default bound on `d^n` for exhaustive search.
pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

fn raw_labels(g: &LabeledGraph) -> Result<Vec<(usize, usize, u64)>> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| e.label.map(|l| (e.u, e.v, l)).ok_or(Error::UnlabeledEdge(i)))
        .collect()
}

fn state_count(g: &LabeledGraph, max_states: u64) -> Result<u64> {
    let d = g.modulus().get();
    let mut total: u64 = 1;
    for _ in 0..g.vertex_count() {
        total = total
            .checked_mul(d)
            .filter(|&t| t <= max_states)
            .ok_or_else(|| {
                Error::SizeLimit(format!(
                    "{d}^{} assignments exceed the limit of {max_states}",
                    g.vertex_count()
                ))
            })?;
    }
    Ok(total)
}

/// Every valid vertex labeling, by trying all `d^n` assignments.
/// Returned in lexicographic order of `(f(v_0), f(v_1), ...)`.
pub fn brute_force_solutions(g: &LabeledGraph, max_states: u64) -> Result<Vec<VLabeling>> {
    brute_force_solutions_with(g, max_states, Strategy::default())
}

pub fn brute_force_solutions_with(g: &LabeledGraph, max_states: u64, strategy: Strategy) -> Result<Vec<VLabeling>> {
    let edges = raw_labels(g)?;
    let total = state_count(g, max_states)?;
    let d = g.modulus().get();
    let n = g.vertex_count();
    Ok(filter_map_range(strategy, total, |index| {
        let mut values = vec![0u64; n];
        let mut rest = index;
        for slot in values.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        edges
            .iter()
            .all(|&(u, v, l)| (values[u] + values[v]) % d == l)
            .then(|| VLabeling::from_values(&values))
    }))
}

/// Independent closed-walk predicate over raw endpoints.
pub fn is_closed_walk(g: &LabeledGraph, start: VertexIdx, edges: &[EdgeIdx]) -> bool {
    let mut at = start;
    for &e in edges {
        let Some(edge) = g.edges().get(e) else {
            return false;
        };
        at = if edge.u == at {
            edge.v
        } else if edge.v == at {
            edge.u
        } else {
            return false;
        };
    }
    !edges.is_empty() && at == start
}

/// Outcome of the cycle-property test on one walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleCheck {
    Holds,
    Fails,
    /// Odd walk with odd `d`: no condition applies.
    Vacuous,
}

impl CycleCheck {
    pub fn holds(self) -> bool {
        self != CycleCheck::Fails
    }
}

/// Even walks: labels at odd positions and at even positions have equal
/// sums mod `d`. Odd walks (even `d`): `(d/2) * sum of labels ≡ 0`.
pub fn verify_cycle_properties(g: &LabeledGraph, walks: &[CycleWalk]) -> Result<Vec<CycleCheck>> {
    let d = g.modulus().get() as u128;
    walks
        .iter()
        .map(|w| {
            if !is_closed_walk(g, w.start(), w.edges()) {
                return Err(Error::InvalidWalk("not a closed walk".into()));
            }
            let labels = w
                .edges()
                .iter()
                .map(|&e| g.edge(e).label.map(u128::from).ok_or(Error::UnlabeledEdge(e)))
                .collect::<Result<Vec<u128>>>()?;
            let even_walk = labels.len() % 2 == 0;
            let holds = if even_walk {
                // positions counted from 1
                let odd_pos: u128 = labels.iter().step_by(2).sum();
                let even_pos: u128 = labels.iter().skip(1).step_by(2).sum();
                odd_pos % d == even_pos % d
            } else if d % 2 == 1 {
                return Ok(CycleCheck::Vacuous);
            } else {
                ((d / 2) * labels.iter().sum::<u128>()).is_multiple_of(d)
            };
            Ok(if holds { CycleCheck::Holds } else { CycleCheck::Fails })
        })
        .collect()
}

/// Spanning forest by breadth-first search. Each component is rooted at its
/// vertex of largest degree (lowest index on ties); incident edges are taken
/// in edge order.
pub fn bfs_spanning_forest(g: &LabeledGraph) -> Vec<EdgeIdx> {
    let n = g.vertex_count();
    let mut by_degree: Vec<VertexIdx> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.incident(v).len()), v));
    let mut seen = vec![false; n];
    let mut tree = Vec::new();
    for root in by_degree {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident(v) {
                let w = g.edge(e).other(v);
                if !seen[w] {
                    seen[w] = true;
                    tree.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    tree.sort_unstable();
    tree
}

/// Fundamental closed walk of `extra` against a spanning forest: the tree
/// path from one endpoint to the other, closed by `extra`.
fn fundamental_walk(g: &LabeledGraph, tree: &[EdgeIdx], extra: EdgeIdx) -> Result<(VertexIdx, Vec<EdgeIdx>)> {
    let n = g.vertex_count();
    let (u, v) = (g.edge(extra).u, g.edge(extra).v);
    // BFS over tree edges from u
    let mut via: Vec<Option<EdgeIdx>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut frontier = vec![u];
    while let Some(x) = frontier.pop() {
        for &e in tree {
            let edge = g.edge(e);
            let y = if edge.u == x {
                edge.v
            } else if edge.v == x {
                edge.u
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                via[y] = Some(e);
                frontier.push(y);
            }
        }
    }
    if !seen[v] {
        return Err(Error::InvalidWalk(format!("tree does not connect the ends of edge {extra}")));
    }
    let mut path = Vec::new();
    let mut at = v;
    while at != u {
        let e = via[at].unwrap();
        path.push(e);
        at = g.edge(e).other(at);
    }
    // path runs v -> u; walk u -> v along its reverse, then back on `extra`
    path.reverse();
    path.push(extra);
    Ok((u, path))
}

/// Tests the cycle conditions on the fundamental cycles of `tree` only.
///
/// This is NOT a sound additivity test for `d > 2`; it exists as a
/// negative control. `tree` defaults to [`bfs_spanning_forest`].
pub fn naive_fundamental_check(g: &LabeledGraph, tree: Option<&[EdgeIdx]>) -> Result<bool> {
    let forest;
    let tree = match tree {
        Some(t) => t,
        None => {
            forest = bfs_spanning_forest(g);
            &forest
        }
    };
    let mut in_tree = vec![false; g.edge_count()];
    for &e in tree {
        if e >= g.edge_count() || in_tree[e] {
            return Err(Error::InvalidWalk(format!("bad tree edge {e}")));
        }
        in_tree[e] = true;
    }
    let mut walks = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| !in_tree[e]) {
        let (start, edges) = fundamental_walk(g, tree, e)?;
        walks.push(CycleWalk::new(g, start, edges)?);
    }
    Ok(verify_cycle_properties(g, &walks)?.into_iter().all(CycleCheck::holds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    const CHORDED_SQUARE: &str = "d 4\nedge 1 2 1\nedge 2 3 0\nedge 3 4 1\nedge 1 4 0\nedge 2 4 1\n";

    #[test]
    fn single_edge() {
        let g = parse_graph("d 2\nedge a b 1\n").unwrap();
        let all = brute_force_solutions(&g, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(all, vec![VLabeling::from_values(&[0, 1]), VLabeling::from_values(&[1, 0])]);
    }

    #[test]
    fn triangle_mod_three() {
        let g = parse_graph("d 3\nedge a b 0\nedge b c 0\nedge c a 0\n").unwrap();
        let all = brute_force_solutions(&g, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(all, vec![VLabeling::from_values(&[0, 0, 0])]);
    }

    #[test]
    fn chorded_square() {
        let g = parse_graph(CHORDED_SQUARE).unwrap();
        assert!(brute_force_solutions(&g, DEFAULT_MAX_STATES).unwrap().is_empty());
        assert_eq!(bfs_spanning_forest(&g), vec![0, 1, 4]);
        assert!(naive_fundamental_check(&g, None).unwrap());
        // spanning tree {e14, e23, e24}
        assert!(naive_fundamental_check(&g, Some(&[3, 1, 4])).unwrap());
        // the path 1-2-3-4 closes the square, which fails
        assert!(!naive_fundamental_check(&g, Some(&[0, 1, 2])).unwrap());
    }

    #[test]
    fn guard() {
        let g = parse_graph("d 10\nedge a b 0\nedge c d 0\n").unwrap();
        assert!(matches!(brute_force_solutions(&g, 1000), Err(Error::SizeLimit(_))));
        assert_eq!(brute_force_solutions(&g, 10_000).unwrap().len(), 100);
    }

    #[test]
    fn cycle_properties() {
        let sq = parse_graph("d 2\nedge a b 1\nedge b c 0\nedge c d 1\nedge d a 0\n").unwrap();
        let w = CycleWalk::new(&sq, 0, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(verify_cycle_properties(&sq, std::slice::from_ref(&w)).unwrap(), vec![CycleCheck::Holds]);
        let sq4 = sq.with_labels(&[Some(1), Some(0), Some(1), Some(0)]).unwrap();
        let sq4 = LabeledGraph::from_parts(
            crate::modular::Modulus::new(4).unwrap(),
            sq4.vertices().to_vec(),
            sq4.edges().to_vec(),
        )
        .unwrap();
        assert_eq!(verify_cycle_properties(&sq4, &[w]).unwrap(), vec![CycleCheck::Fails]);

        let t = parse_graph("d 4\nedge a b 1\nedge b c 1\nedge c a 1\n").unwrap();
        let w = CycleWalk::new(&t, 0, vec![0, 1, 2]).unwrap();
        assert_eq!(verify_cycle_properties(&t, std::slice::from_ref(&w)).unwrap(), vec![CycleCheck::Fails]);
        let t2 = t.with_labels(&[Some(1), Some(1), Some(0)]).unwrap();
        assert_eq!(verify_cycle_properties(&t2, std::slice::from_ref(&w)).unwrap(), vec![CycleCheck::Holds]);
        let t3 = parse_graph("d 3\nedge a b 1\nedge b c 1\nedge c a 1\n").unwrap();
        assert_eq!(verify_cycle_properties(&t3, &[w]).unwrap(), vec![CycleCheck::Vacuous]);
    }

    #[test]
    fn trees_pass_naive_check() {
        let g = parse_graph("d 6\nedge a b 5\nedge b c 1\nedge b d 3\n").unwrap();
        assert_eq!(bfs_spanning_forest(&g), vec![0, 1, 2]);
        assert!(naive_fundamental_check(&g, None).unwrap());
    }

    #[test]
    fn walk_predicate() {
        let g = parse_graph("d 2\nedge a b 0\nedge b c 0\nedge c a 0\n").unwrap();
        assert!(is_closed_walk(&g, 0, &[0, 1, 2]));
        assert!(!is_closed_walk(&g, 0, &[0, 1]));
        assert!(!is_closed_walk(&g, 0, &[]));
        assert!(!is_closed_walk(&g, 0, &[7]));
    }
}

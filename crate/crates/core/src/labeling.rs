//! Additivity decision, construction, counting, enumeration and extension of
//! vertex labelings.

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::analysis::{analyze, GraphAnalysis};
use crate::cycle_space::{pairing, Provenance};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::graph::{LabeledGraph, VLabeling, VertexIdx};
use crate::modular::Modulus;
use crate::traversal::ComponentDecomposition;
use crate::walk::CycleWalk;

/// A kernel generator whose pairing with the labels is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub component: usize,
    /// Generator in global edge coordinates.
    pub generator: Vec<u64>,
    pub provenance: Provenance,
    pub pairing: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivityVerdict {
    pub additive: bool,
    pub violations: Vec<Violation>,
}

impl AdditivityVerdict {
    fn from_violations(violations: Vec<Violation>) -> Self {
        AdditivityVerdict {
            additive: violations.is_empty(),
            violations,
        }
    }
}

/// Number of valid vertex labelings, per component and in total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionCount {
    pub per_component: Vec<u64>,
    pub total: BigUint,
}

fn labels_of(g: &LabeledGraph) -> Result<Vec<Option<u64>>> {
    g.labels()?;
    Ok(g.edges().iter().map(|e| e.label).collect())
}

fn violations(g: &LabeledGraph, analysis: &GraphAnalysis) -> Result<Vec<Violation>> {
    let labels = labels_of(g)?;
    let d = g.modulus();
    let mut out = Vec::new();
    for ca in &analysis.components {
        let edges = &analysis.decomposition.component_edges[ca.component];
        let local_labels: Vec<Option<u64>> = edges.iter().map(|&e| labels[e]).collect();
        for (gen, provenance) in ca.kernel.iter() {
            let value = pairing(gen, &local_labels, d)?;
            if value != 0 {
                let mut generator = vec![0u64; g.edge_count()];
                for (j, &e) in edges.iter().enumerate() {
                    generator[e] = gen[j];
                }
                out.push(Violation {
                    component: ca.component,
                    generator,
                    provenance,
                    pairing: value,
                });
            }
        }
    }
    Ok(out)
}

/// Decides additivity by pairing the labels with mod-d kernel generators of
/// each component's incidence matrix.
pub fn check(g: &LabeledGraph) -> Result<AdditivityVerdict> {
    check_with(g, Strategy::default())
}

pub fn check_with(g: &LabeledGraph, strategy: Strategy) -> Result<AdditivityVerdict> {
    g.labels()?;
    let analysis = analyze(g, strategy)?;
    Ok(AdditivityVerdict::from_violations(violations(g, &analysis)?))
}

/// All `x` in `0..d` with `2x ≡ rhs (mod d)`, ascending.
pub fn solve_seed(d: Modulus, rhs: u64) -> Vec<u64> {
    let rhs = d.reduce(rhs);
    match d.inverse_of_two() {
        Some(inv) => vec![d.mul(rhs, inv)],
        None if rhs % 2 == 1 => Vec::new(),
        None => vec![rhs / 2, rhs / 2 + d.half()],
    }
}

/// `f(e_1) - f(e_2) + f(e_3) - ...` along a walk; for an odd closed walk
/// from `v` this equals `2 f(v)` under any valid labeling.
pub fn alternating_sum(g: &LabeledGraph, walk: &CycleWalk) -> Result<u64> {
    let d = g.modulus();
    let mut acc = 0u64;
    for (i, &e) in walk.edges().iter().enumerate() {
        let f = g.edge(e).label.ok_or(Error::UnlabeledEdge(e))?;
        acc = if i % 2 == 0 { d.add(acc, f) } else { d.sub(acc, f) };
    }
    Ok(acc)
}

/// Spreads `seed` at `root` over its component along BFS order:
/// `f(v) = f_E(u, v) - f(u)` for each newly reached `v`.
pub fn propagate(
    g: &LabeledGraph,
    comp: &ComponentDecomposition,
    root: VertexIdx,
    seed: u64,
) -> Result<VLabeling> {
    if root >= g.vertex_count() {
        return Err(Error::UnknownVertex(root));
    }
    let d = g.modulus();
    let mut f = VLabeling::new();
    let c = comp.component_of[root];
    if comp.roots[c] == root {
        f.set(root, d.reduce(seed));
        for &v in &comp.bfs_order[c][1..] {
            let e = comp.parent_edge[v].expect("non-root has a tree edge");
            let edge = g.edge(e);
            let label = edge.label.ok_or(Error::UnlabeledEdge(e))?;
            let parent_value = f.get(edge.other(v)).expect("parent precedes child in BFS order");
            f.set(v, d.sub(label, parent_value));
        }
        return Ok(f);
    }
    f.set(root, d.reduce(seed));
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let fu = f.get(u).unwrap();
        for &e in g.incident(u) {
            let edge = g.edge(e);
            let v = edge.other(u);
            if f.get(v).is_none() {
                let label = edge.label.ok_or(Error::UnlabeledEdge(e))?;
                f.set(v, d.sub(label, fu));
                queue.push_back(v);
            }
        }
    }
    Ok(f)
}

/// Labelings of one component, as produced by its admissible seeds.
#[derive(Debug, Clone)]
enum ComponentFamily {
    /// `f_s(v) = base(v) + s` on even-depth vertices and `base(v) - s` on
    /// odd-depth ones, for every seed `s` in `0..d`.
    Free { base: Vec<(VertexIdx, u64, bool)> },
    /// One labeling per admissible seed at an odd-walk vertex.
    Fixed(Vec<VLabeling>),
}

impl ComponentFamily {
    fn size(&self, d: Modulus) -> u64 {
        match self {
            ComponentFamily::Free { .. } => d.get(),
            ComponentFamily::Fixed(v) => v.len() as u64,
        }
    }

    fn write(&self, index: u64, d: Modulus, out: &mut VLabeling) {
        match self {
            ComponentFamily::Free { base } => {
                for &(v, x, odd_depth) in base {
                    out.set(v, if odd_depth { d.sub(x, index) } else { d.add(x, index) });
                }
            }
            ComponentFamily::Fixed(v) => out.extend_from(&v[index as usize]),
        }
    }
}

fn families(g: &LabeledGraph, analysis: &GraphAnalysis) -> Result<Vec<ComponentFamily>> {
    let comp = &analysis.decomposition;
    let d = g.modulus();
    analysis
        .components
        .iter()
        .map(|ca| {
            let c = ca.component;
            match &ca.witness {
                None => {
                    let base = propagate(g, comp, comp.roots[c], 0)?;
                    Ok(ComponentFamily::Free {
                        base: base.iter().map(|(v, x)| (v, x, comp.parity(v) == 1)).collect(),
                    })
                }
                Some(w) => {
                    let rhs = alternating_sum(g, &w.walk)?;
                    let seeds = solve_seed(d, rhs);
                    if seeds.is_empty() {
                        return Err(Error::InternalInconsistency(format!(
                            "component {c} passed the kernel test but 2x = {rhs} (mod {d}) has no solution"
                        )));
                    }
                    let labelings = seeds
                        .into_iter()
                        .map(|s| propagate(g, comp, w.walk.start(), s))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(ComponentFamily::Fixed(labelings))
                }
            }
        })
        .collect()
}

/// One valid vertex labeling, or `None` if the labels are not additive.
pub fn solve_one(g: &LabeledGraph) -> Result<Option<VLabeling>> {
    solve_one_with(g, Strategy::default())
}

pub fn solve_one_with(g: &LabeledGraph, strategy: Strategy) -> Result<Option<VLabeling>> {
    g.labels()?;
    let analysis = analyze(g, strategy)?;
    if !violations(g, &analysis)?.is_empty() {
        return Ok(None);
    }
    let d = g.modulus();
    let mut f = VLabeling::new();
    for family in families(g, &analysis)? {
        family.write(0, d, &mut f);
    }
    if !f.is_valid_for(g) {
        return Err(Error::InternalInconsistency(
            "constructed labeling violates an edge".into(),
        ));
    }
    Ok(Some(f))
}

/// Solution counts: `d` per bipartite component, otherwise 1 (odd `d`) or
/// 2 (even `d`); `None` if not additive.
pub fn count(g: &LabeledGraph) -> Result<Option<SolutionCount>> {
    count_with(g, Strategy::default())
}

pub fn count_with(g: &LabeledGraph, strategy: Strategy) -> Result<Option<SolutionCount>> {
    g.labels()?;
    let analysis = analyze(g, strategy)?;
    if !violations(g, &analysis)?.is_empty() {
        return Ok(None);
    }
    let d = g.modulus();
    let per_component: Vec<u64> = analysis
        .components
        .iter()
        .map(|ca| match (ca.is_bipartite(), d.is_even()) {
            (true, _) => d.get(),
            (false, false) => 1,
            (false, true) => 2,
        })
        .collect();
    let total = per_component.iter().map(|&c| BigUint::from(c)).product();
    Ok(Some(SolutionCount { per_component, total }))
}

/// Stream of valid labelings: the cartesian product of per-component seed
/// choices in lexicographic order (first component slowest), truncated at
/// `limit`.
#[derive(Debug, Clone)]
pub struct Enumeration {
    modulus: Modulus,
    families: Vec<ComponentFamily>,
    // odometer over per-component seed indices; None once exhausted
    next: Option<Vec<u64>>,
    remaining: usize,
}

impl Iterator for Enumeration {
    type Item = VLabeling;

    fn next(&mut self) -> Option<VLabeling> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next.take()?;
        let mut f = VLabeling::new();
        for (family, &i) in self.families.iter().zip(&current) {
            family.write(i, self.modulus, &mut f);
        }
        self.remaining -= 1;

        let mut odometer = current;
        let mut k = odometer.len();
        self.next = loop {
            if k == 0 {
                break None;
            }
            k -= 1;
            odometer[k] += 1;
            if odometer[k] < self.families[k].size(self.modulus) {
                break Some(odometer);
            }
            odometer[k] = 0;
        };
        Some(f)
    }
}

pub fn enumerate(g: &LabeledGraph, limit: usize) -> Result<Enumeration> {
    enumerate_with(g, limit, Strategy::default())
}

pub fn enumerate_with(g: &LabeledGraph, limit: usize, strategy: Strategy) -> Result<Enumeration> {
    g.labels()?;
    let analysis = analyze(g, strategy)?;
    let additive = violations(g, &analysis)?.is_empty();
    let families = if additive { families(g, &analysis)? } else { Vec::new() };
    Ok(Enumeration {
        modulus: g.modulus(),
        next: additive.then(|| vec![0; families.len()]),
        families,
        remaining: limit,
    })
}

/// Completes the `?` labels so the result is additive, or `None` when the
/// already-labeled edges are not additive on their own.
///
/// Vertices touched by no labeled edge get 0; each `?` edge then gets
/// `f(u) + f(v)`.
pub fn extend(g: &LabeledGraph) -> Result<Option<LabeledGraph>> {
    let (labeled, _) = g.labeled_subgraph();
    let Some(f) = solve_one(&labeled)? else {
        return Ok(None);
    };
    let d = g.modulus();
    let labels: Vec<Option<u64>> = g
        .edges()
        .iter()
        .map(|e| {
            Some(e.label.unwrap_or_else(|| {
                d.add(f.get(e.u).expect("labeling is total"), f.get(e.v).expect("labeling is total"))
            }))
        })
        .collect();
    let completed = g.with_labels(&labels)?;
    if !check(&completed)?.additive {
        return Err(Error::InternalInconsistency("completion is not additive".into()));
    }
    Ok(Some(completed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::traversal::components_and_parity;

    const CHORDED_SQUARE: &str = "d 4\nedge 1 2 1\nedge 2 3 0\nedge 3 4 1\nedge 1 4 0\nedge 2 4 1\n";

    fn md(d: u64) -> Modulus {
        Modulus::new(d).unwrap()
    }

    #[test]
    fn seed_equation() {
        assert_eq!(solve_seed(md(5), 3), vec![4]);
        assert_eq!(solve_seed(md(6), 4), vec![2, 5]);
        assert_eq!(solve_seed(md(6), 3), Vec::<u64>::new());
        assert_eq!(solve_seed(md(2), 0), vec![0, 1]);
        assert_eq!(solve_seed(md(1), 0), vec![0]);
    }

    #[test]
    fn propagation_examples() {
        let g = parse_graph("d 5\nedge a b 3\n").unwrap();
        let comp = components_and_parity(&g);
        assert_eq!(propagate(&g, &comp, 0, 1).unwrap(), VLabeling::from_values(&[1, 2]));

        let g = parse_graph("d 2\nedge a b 1\nedge b c 1\n").unwrap();
        let comp = components_and_parity(&g);
        assert_eq!(propagate(&g, &comp, 0, 0).unwrap(), VLabeling::from_values(&[0, 1, 0]));

        let g = parse_graph("d 6\nedge x y 2\nedge x z 4\n").unwrap();
        let comp = components_and_parity(&g);
        assert_eq!(propagate(&g, &comp, 0, 0).unwrap(), VLabeling::from_values(&[0, 2, 4]));
        // from a non-root vertex
        assert_eq!(propagate(&g, &comp, 2, 4).unwrap(), VLabeling::from_values(&[0, 2, 4]));
    }

    #[test]
    fn square_with_bad_alternating_sum() {
        let g = parse_graph("d 4\nedge a b 1\nedge b c 0\nedge c d 1\nedge d a 0\n").unwrap();
        let v = check(&g).unwrap();
        assert!(!v.additive);
        assert_eq!(v.violations.len(), 1);
        assert_eq!(solve_one(&g).unwrap(), None);
    }

    #[test]
    fn trees_are_always_additive() {
        let g = parse_graph("d 7\nedge a b 3\nedge b c 6\nedge b d 1\nedge d e 0\n").unwrap();
        assert!(check(&g).unwrap().additive);
        assert_eq!(count(&g).unwrap().unwrap().per_component, vec![7]);
    }

    #[test]
    fn chorded_square_not_additive() {
        let g = parse_graph(CHORDED_SQUARE).unwrap();
        assert!(!check(&g).unwrap().additive);
        assert_eq!(solve_one(&g).unwrap(), None);
        assert_eq!(count(&g).unwrap(), None);
        assert_eq!(enumerate(&g, 10).unwrap().count(), 0);
    }

    #[test]
    fn triangle_solutions() {
        let g = parse_graph("d 3\nedge a b 0\nedge b c 0\nedge c a 0\n").unwrap();
        assert_eq!(solve_one(&g).unwrap(), Some(VLabeling::from_values(&[0, 0, 0])));
        assert_eq!(count(&g).unwrap().unwrap().per_component, vec![1]);

        let g = parse_graph("d 2\nedge a b 0\nedge b c 0\nedge c a 0\n").unwrap();
        assert_eq!(solve_one(&g).unwrap(), Some(VLabeling::from_values(&[0, 0, 0])));
        let all: Vec<_> = enumerate(&g, 10).unwrap().collect();
        assert_eq!(all, vec![VLabeling::from_values(&[0, 0, 0]), VLabeling::from_values(&[1, 1, 1])]);
        assert_eq!(count(&g).unwrap().unwrap().total, BigUint::from(2u32));
    }

    #[test]
    fn counts() {
        let g = parse_graph("d 7\nedge a b 5\n").unwrap();
        assert_eq!(count(&g).unwrap().unwrap().total, BigUint::from(7u32));
        let g = parse_graph("d 3\nedge a b 1\nedge c d 2\n").unwrap();
        let c = count(&g).unwrap().unwrap();
        assert_eq!(c.per_component, vec![3, 3]);
        assert_eq!(c.total, BigUint::from(9u32));
    }

    #[test]
    fn enumerate_path() {
        let g = parse_graph("d 3\nedge a b 0\n").unwrap();
        let all: Vec<_> = enumerate(&g, 100).unwrap().collect();
        assert_eq!(
            all,
            vec![
                VLabeling::from_values(&[0, 0]),
                VLabeling::from_values(&[1, 2]),
                VLabeling::from_values(&[2, 1])
            ]
        );
        assert_eq!(enumerate(&g, 2).unwrap().count(), 2);
        assert_eq!(enumerate(&g, 0).unwrap().count(), 0);
    }

    #[test]
    fn enumerate_orders_components_lexicographically() {
        let g = parse_graph("d 2\nedge a b 1\nedge c d 0\n").unwrap();
        let all: Vec<_> = enumerate(&g, 100).unwrap().collect();
        let values: Vec<Vec<u64>> = all.iter().map(|f| f.to_values(4).unwrap()).collect();
        assert_eq!(values, vec![vec![0, 1, 0, 0], vec![0, 1, 1, 1], vec![1, 0, 0, 0], vec![1, 0, 1, 1]]);
    }

    #[test]
    fn unlabeled_edges_are_rejected() {
        let g = parse_graph("d 3\nedge a b ?\n").unwrap();
        assert_eq!(check(&g), Err(Error::UnlabeledEdge(0)));
        assert_eq!(count(&g), Err(Error::UnlabeledEdge(0)));
        assert!(enumerate(&g, 1).is_err());
    }

    #[test]
    fn modulus_one() {
        let g = parse_graph("d 1\nedge a b 0\nedge b c 0\nedge c a 0\n").unwrap();
        assert!(check(&g).unwrap().additive);
        assert_eq!(count(&g).unwrap().unwrap().total, BigUint::from(1u32));
        assert_eq!(solve_one(&g).unwrap(), Some(VLabeling::from_values(&[0, 0, 0])));
    }

    #[test]
    fn extend_all_unknown() {
        let g = parse_graph("d 5\nedge a b ?\nedge b c ?\nedge c a ?\n").unwrap();
        let h = extend(&g).unwrap().unwrap();
        assert!(h.edges().iter().all(|e| e.label == Some(0)));
    }

    #[test]
    fn extend_triangle() {
        let g = parse_graph("d 3\nedge a b 1\nedge b c 1\nedge c a ?\n").unwrap();
        let h = extend(&g).unwrap().unwrap();
        assert!(check(&h).unwrap().additive);
        assert_eq!(h.edge(0).label, Some(1));
        assert_eq!(h.edge(1).label, Some(1));
    }

    #[test]
    fn extend_chorded_square_plus_unknown() {
        let g = parse_graph(&format!("{CHORDED_SQUARE}edge 1 5 ?\n")).unwrap();
        assert_eq!(extend(&g).unwrap(), None);
    }
}

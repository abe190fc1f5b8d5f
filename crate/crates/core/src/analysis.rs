//! Per-component algebraic analysis shared by the engine and the toric adapter.

use crate::cycle_space::{kernel_generators, KernelBasis};
use crate::error::Result;
use crate::exec::{map_range, Strategy};
use crate::graph::LabeledGraph;
use crate::incidence::{component_incidence, IncidenceMatrix};
use crate::linalg::{incidence_snf_summary, snf, IncidenceSnfSummary, SnfResult};
use crate::traversal::{components_and_parity, find_odd_cycle_in, ComponentDecomposition, OddCycleWitness};

/// Incidence matrix, Smith form and kernel generators of one component.
#[derive(Debug, Clone)]
pub struct ComponentAnalysis {
    pub component: usize,
    pub incidence: IncidenceMatrix,
    pub snf: SnfResult,
    pub summary: IncidenceSnfSummary,
    pub witness: Option<OddCycleWitness>,
    /// Generators in component-local edge coordinates.
    pub kernel: KernelBasis,
}

impl ComponentAnalysis {
    pub fn is_bipartite(&self) -> bool {
        self.summary.is_bipartite()
    }
}

pub fn analyze_component(g: &LabeledGraph, comp: &ComponentDecomposition, c: usize) -> Result<ComponentAnalysis> {
    let incidence = component_incidence(g, comp, c);
    let snf = snf(&incidence.to_int_matrix());
    let summary = incidence_snf_summary(g, comp, c, &snf)?;
    let witness = find_odd_cycle_in(g, comp, c);
    let kernel = kernel_generators(&incidence, &snf, &summary, g.modulus(), witness.as_ref())?;
    Ok(ComponentAnalysis {
        component: c,
        incidence,
        snf,
        summary,
        witness,
        kernel,
    })
}

/// The whole graph.
#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub decomposition: ComponentDecomposition,
    pub components: Vec<ComponentAnalysis>,
}

impl GraphAnalysis {
    /// Kernel generators of the full incidence matrix, lifted to global edge
    /// coordinates, component by component.
    pub fn global_kernel(&self, g: &LabeledGraph) -> KernelBasis {
        let m = g.edge_count();
        let mut generators = Vec::new();
        let mut provenance = Vec::new();
        for ca in &self.components {
            let edges = &self.decomposition.component_edges[ca.component];
            for (local, prov) in ca.kernel.iter() {
                let mut gen = vec![0u64; m];
                for (j, &e) in edges.iter().enumerate() {
                    gen[e] = local[j];
                }
                generators.push(gen);
                provenance.push(prov);
            }
        }
        KernelBasis {
            modulus: g.modulus(),
            generators,
            provenance,
        }
    }
}

/// Analyzes every component, in parallel under [`Strategy::Parallel`].
pub fn analyze(g: &LabeledGraph, strategy: Strategy) -> Result<GraphAnalysis> {
    let decomposition = components_and_parity(g);
    let components = map_range(strategy, decomposition.len(), |c| analyze_component(g, &decomposition, c))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(GraphAnalysis {
        decomposition,
        components,
    })
}

/// Generators of `ker A_G (mod d)` for the whole graph.
pub fn kernel_basis(g: &LabeledGraph) -> Result<KernelBasis> {
    Ok(analyze(g, Strategy::default())?.global_kernel(g))
}

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::SnfResult;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::traversal::{find_odd_cycle_in, ComponentDecomposition};

/// What the Smith form of a connected component's incidence matrix says.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceSnfSummary {
    /// The `n`-th diagonal slot of `S`: 2 if the component has an odd
    /// cycle, 0 if it is bipartite (including trees, whose diagonal stops
    /// at `n - 1`).
    pub alpha: u8,
    pub rank: usize,
}

impl IncidenceSnfSummary {
    pub fn is_bipartite(&self) -> bool {
        self.alpha == 0
    }
}

/// Reads `alpha` off the Smith form of component `c` and cross-checks it
/// against the BFS bipartiteness test.
pub fn incidence_snf_summary(
    g: &LabeledGraph,
    comp: &ComponentDecomposition,
    c: usize,
    res: &SnfResult,
) -> Result<IncidenceSnfSummary> {
    let n = comp.components[c].len();
    if res.s.rows() != n || res.s.cols() != comp.component_edges[c].len() {
        return Err(Error::DimensionMismatch(format!(
            "Smith form is {}x{}, component has {} vertices and {} edges",
            res.s.rows(),
            res.s.cols(),
            n,
            comp.component_edges[c].len()
        )));
    }
    let rank = res.rank();
    if let Some(i) = res.invariant_factors.iter().take(n.saturating_sub(1)).position(|x| *x != BigInt::from(1)) {
        return Err(Error::InternalInconsistency(format!(
            "invariant factor {} of an incidence matrix is {}",
            i + 1,
            res.invariant_factors[i]
        )));
    }
    let alpha = match res.invariant_factors.get(n.wrapping_sub(1)) {
        Some(x) if n > 0 => x.to_u8().filter(|&a| a == 2).ok_or_else(|| {
            Error::InternalInconsistency(format!("last invariant factor of an incidence matrix is {x}"))
        })?,
        _ => 0,
    };
    let odd = find_odd_cycle_in(g, comp, c).is_some();
    if odd != (alpha == 2) {
        return Err(Error::InternalInconsistency(format!(
            "alpha = {alpha} but the component is {}bipartite",
            if odd { "not " } else { "" }
        )));
    }
    Ok(IncidenceSnfSummary { alpha, rank })
}

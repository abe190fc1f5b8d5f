//! Multiplicative version over the complex d-th roots of unity.
//!
//! A root `e^{2πik/d}` is stored as its exponent `k`; all comparisons are
//! exact residue comparisons. Edge labels of the input graph are read as
//! exponents of `y_e`, vertex values as exponents of `x_v`, and the problem
//! is `y_e = x_u x_v` on every edge.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::analysis::analyze;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::graph::{LabeledGraph, VLabeling};
use crate::labeling::{self, AdditivityVerdict, Violation};
use crate::linalg::gcd_maximal_minors;
use crate::modular::Modulus;

/// An element of the cyclic group of d-th roots of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    order: Modulus,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(order: Modulus, exponent: u64) -> Self {
        RootOfUnity {
            order,
            exponent: order.reduce(exponent),
        }
    }

    pub fn one(order: Modulus) -> Self {
        RootOfUnity { order, exponent: 0 }
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn pow(self, k: u64) -> RootOfUnity {
        RootOfUnity {
            order: self.order,
            exponent: self.order.mul(self.exponent, k),
        }
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, other: RootOfUnity) -> RootOfUnity {
        debug_assert_eq!(self.order, other.order);
        RootOfUnity {
            order: self.order,
            exponent: self.order.add(self.exponent, other.exponent),
        }
    }
}

/// Exponents of the `x_v` (per vertex) and `y_e` (per edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootAssignment {
    pub order: Modulus,
    pub vertex_exponents: Vec<u64>,
    pub edge_exponents: Vec<u64>,
}

impl RootAssignment {
    pub fn vertex(&self, v: usize) -> RootOfUnity {
        RootOfUnity::new(self.order, self.vertex_exponents[v])
    }

    pub fn edge(&self, e: usize) -> RootOfUnity {
        RootOfUnity::new(self.order, self.edge_exponents[e])
    }

    /// `y_e = x_u x_v` on every edge.
    pub fn satisfies(&self, g: &LabeledGraph) -> bool {
        g.edges()
            .iter()
            .enumerate()
            .all(|(i, e)| self.edge(i) == self.vertex(e.u) * self.vertex(e.v))
    }

    fn from_labeling(g: &LabeledGraph, f: &VLabeling) -> Result<Self> {
        Ok(RootAssignment {
            order: g.modulus(),
            vertex_exponents: f.to_values(g.vertex_count()).ok_or_else(|| {
                Error::InternalInconsistency("labeling does not cover every vertex".into())
            })?,
            edge_exponents: g.labels()?,
        })
    }
}

fn edge_roots(g: &LabeledGraph) -> Result<Vec<RootOfUnity>> {
    Ok(g.labels()?.into_iter().map(|k| RootOfUnity::new(g.modulus(), k)).collect())
}

/// `y^u = prod_e y_e^{u_e}`.
pub fn monomial(y: &[RootOfUnity], u: &[u64], order: Modulus) -> RootOfUnity {
    y.iter()
        .zip(u)
        .fold(RootOfUnity::one(order), |acc, (&ye, &ue)| acc * ye.pow(ue))
}

/// Solvable iff `y^u = 1` for every generator `u` of `ker A_G (mod d)`.
pub fn multiplicative_check(g: &LabeledGraph) -> Result<AdditivityVerdict> {
    let y = edge_roots(g)?;
    let d = g.modulus();
    let analysis = analyze(g, Strategy::default())?;
    let mut violations = Vec::new();
    for ca in &analysis.components {
        let edges = &analysis.decomposition.component_edges[ca.component];
        let local_y: Vec<RootOfUnity> = edges.iter().map(|&e| y[e]).collect();
        for (gen, provenance) in ca.kernel.iter() {
            let value = monomial(&local_y, gen, d);
            if !value.is_one() {
                let mut generator = vec![0u64; g.edge_count()];
                for (j, &e) in edges.iter().enumerate() {
                    generator[e] = gen[j];
                }
                violations.push(Violation {
                    component: ca.component,
                    generator,
                    provenance,
                    pairing: value.exponent(),
                });
            }
        }
    }
    Ok(AdditivityVerdict {
        additive: violations.is_empty(),
        violations,
    })
}

/// Per-component solution counts in the group of d-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricCount {
    /// gcd of the maximal minors of each component's incidence matrix, read
    /// off its Smith form.
    pub minor_gcd: Vec<BigInt>,
    pub per_component: Vec<u64>,
    pub total: BigUint,
}

/// `d` solutions per bipartite component, 2 per non-bipartite one when `d`
/// is even, 1 otherwise; `None` when unsolvable.
pub fn toric_count(g: &LabeledGraph) -> Result<Option<ToricCount>> {
    if !multiplicative_check(g)?.additive {
        return Ok(None);
    }
    let d = g.modulus();
    let analysis = analyze(g, Strategy::default())?;
    let mut minor_gcd = Vec::new();
    let mut per_component = Vec::new();
    for ca in &analysis.components {
        let gcd = ca.snf.maximal_minor_gcd();
        let n = ca.incidence.rows();
        let m = ca.incidence.cols();
        // For m >= n the minor gcd is alpha itself; trees have only
        // (n-1)-minors, whose gcd is 1.
        let consistent = if m >= n {
            gcd.to_u8() == Some(ca.summary.alpha)
        } else {
            gcd.to_u8() == Some(1) && ca.summary.alpha == 0
        };
        // at small sizes, also against direct minor enumeration
        let direct = gcd_maximal_minors(&ca.incidence.to_int_matrix()).ok();
        if !consistent || direct.is_some_and(|x| x != gcd) {
            return Err(Error::InternalInconsistency(format!(
                "component {}: minor gcd {gcd} against alpha {}",
                ca.component, ca.summary.alpha
            )));
        }
        let count = if ca.summary.alpha == 0 {
            d.get()
        } else if d.is_even() {
            2
        } else {
            1
        };
        minor_gcd.push(gcd);
        per_component.push(count);
    }
    let total = per_component.iter().map(|&c| BigUint::from(c)).product();
    Ok(Some(ToricCount {
        minor_gcd,
        per_component,
        total,
    }))
}

/// One solution `x`, or `None`.
pub fn toric_solve(g: &LabeledGraph) -> Result<Option<RootAssignment>> {
    match labeling::solve_one(g)? {
        None => Ok(None),
        Some(f) => {
            let x = RootAssignment::from_labeling(g, &f)?;
            if !x.satisfies(g) {
                return Err(Error::InternalInconsistency("root assignment violates y = x_u x_v".into()));
            }
            Ok(Some(x))
        }
    }
}

/// Solutions in the same order as [`labeling::enumerate`].
pub fn toric_enumerate(g: &LabeledGraph, limit: usize) -> Result<Vec<RootAssignment>> {
    labeling::enumerate(g, limit)?
        .map(|f| RootAssignment::from_labeling(g, &f))
        .collect()
}

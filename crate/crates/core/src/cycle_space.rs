//! Cycle vectors, mod-d kernels of incidence matrices and the label pairing.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::incidence::IncidenceMatrix;
use crate::linalg::{IncidenceSnfSummary, SnfResult};
use crate::modular::Modulus;
use crate::traversal::OddCycleWitness;
use crate::walk::CycleWalk;

/// Integer edge vector of a closed walk.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleVector {
    pub coords: Vec<i128>,
    /// Whether the walk it came from has odd length.
    pub odd: bool,
}

impl CycleVector {
    pub fn reduce(&self, d: Modulus) -> Vec<u64> {
        self.coords.iter().map(|&x| d.reduce_i128(x)).collect()
    }
}

/// Edge vector of a closed walk.
///
/// Even walks put `+1, -1, +1, ...` on consecutive edges starting with the
/// first; odd walks put `d/2` on every edge. Repeated edges accumulate.
pub fn omega_of_cycle(g: &LabeledGraph, walk: &CycleWalk, d: Modulus) -> Result<CycleVector> {
    let odd = walk.is_odd();
    if odd && !d.is_even() {
        return Err(Error::OddWalkOddModulus(d.get()));
    }
    let mut coords = vec![0i128; g.edge_count()];
    for (i, &e) in walk.edges().iter().enumerate() {
        coords[e] += if odd {
            d.half() as i128
        } else if i % 2 == 0 {
            1
        } else {
            -1
        };
    }
    Ok(CycleVector { coords, odd })
}

/// Which of the two expected values a coordinate sum takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumClass {
    /// Exactly zero over the integers (even walks).
    Zero,
    /// Congruent to `d/2` (odd walks, even `d`).
    HalfModulus,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoordinateSum {
    pub total: i128,
    pub residue: u64,
    pub class: SumClass,
}

pub fn coordinate_sum(v: &CycleVector, d: Modulus) -> CoordinateSum {
    let total: i128 = v.coords.iter().sum();
    let residue = d.reduce_i128(total);
    let class = if total == 0 {
        SumClass::Zero
    } else if d.is_even() && residue == d.half() {
        SumClass::HalfModulus
    } else {
        SumClass::Other
    };
    CoordinateSum { total, residue, class }
}

/// Where a kernel generator came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Column `j` (0-based) of `V^-1`.
    VinvColumn(usize),
    /// `d/2` times column `j` (0-based) of `V^-1`.
    HalfModulusTimesColumn(usize),
    /// Cycle vector of an odd closed walk.
    OddCycleVector,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::VinvColumn(j) => write!(f, "column-of-Vinv {}", j + 1),
            Provenance::HalfModulusTimesColumn(j) => write!(f, "half-d-times-nth-column {}", j + 1),
            Provenance::OddCycleVector => write!(f, "odd-cycle-vector"),
        }
    }
}

/// Generators over Z_d of `ker A (mod d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub modulus: Modulus,
    pub generators: Vec<Vec<u64>>,
    pub provenance: Vec<Provenance>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u64], Provenance)> {
        self.generators.iter().map(Vec::as_slice).zip(self.provenance.iter().copied())
    }
}

fn column_mod(res: &SnfResult, j: usize, scale: u64, d: Modulus) -> Vec<u64> {
    let dd = BigInt::from(d.get());
    let scale = BigInt::from(scale);
    (0..res.v_inv.rows())
        .map(|i| {
            (res.v_inv.get(i, j) * &scale)
                .mod_floor(&dd)
                .to_u64()
                .expect("residue below d fits in u64")
        })
        .collect()
}

/// Kernel generators mod `d` for the incidence matrix of one connected
/// component, read off the columns of `V^-1`:
///
/// * bipartite: the last `m - n + 1` columns;
/// * odd cycle, `d` odd: the last `m - n` columns;
/// * odd cycle, `d` even: the last `m - n` columns and `d/2` times column `n`.
pub fn kernel_generators(
    a: &IncidenceMatrix,
    res: &SnfResult,
    summary: &IncidenceSnfSummary,
    d: Modulus,
    odd_witness: Option<&OddCycleWitness>,
) -> Result<KernelBasis> {
    let (n, m) = (a.rows(), a.cols());
    if res.v_inv.rows() != m || res.s.rows() != n {
        return Err(Error::DimensionMismatch("Smith form does not match incidence matrix".into()));
    }
    if odd_witness.is_some() != (summary.alpha == 2) {
        return Err(Error::InternalInconsistency(format!(
            "alpha = {} but odd witness {}",
            summary.alpha,
            if odd_witness.is_some() { "present" } else { "absent" }
        )));
    }
    let mut generators = Vec::new();
    let mut provenance = Vec::new();
    let first = if summary.alpha == 0 { n.saturating_sub(1) } else { n };
    for j in first..m {
        generators.push(column_mod(res, j, 1, d));
        provenance.push(Provenance::VinvColumn(j));
    }
    if summary.alpha == 2 && d.is_even() {
        generators.push(column_mod(res, n - 1, d.half(), d));
        provenance.push(Provenance::HalfModulusTimesColumn(n - 1));
    }
    for (gen, prov) in generators.iter().zip(&provenance) {
        if !a.annihilates_mod(gen, d.get()) {
            return Err(Error::InternalInconsistency(format!("generator {prov} is not in the kernel mod {d}")));
        }
    }
    Ok(KernelBasis {
        modulus: d,
        generators,
        provenance,
    })
}

/// `<omega, f> = sum_e omega_e f(e) mod d`.
pub fn pairing(omega: &[u64], labels: &[Option<u64>], d: Modulus) -> Result<u64> {
    if omega.len() != labels.len() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} against {} labels",
            omega.len(),
            labels.len()
        )));
    }
    let mut acc = 0u64;
    for (e, (&w, &f)) in omega.iter().zip(labels).enumerate() {
        let f = f.ok_or(Error::UnlabeledEdge(e))?;
        acc = d.add(acc, d.mul(d.reduce(w), f));
    }
    Ok(acc)
}

//! Additive edge labelings of graphs over Z_d.
//!
//! An edge labeling `f_E` is *additive* when some vertex labeling `f_V`
//! satisfies `f_E(u, v) ≡ f_V(u) + f_V(v) (mod d)` on every edge. This crate
//! decides additivity in polynomial time through the Smith Normal Form of
//! the incidence matrix, constructs, counts and enumerates all valid vertex
//! labelings, completes partial edge labelings, and offers the same
//! questions in multiplicative form over the d-th roots of unity.
//!
//! ```
//! use zd_labeling::{parse_graph, labeling};
//!
//! let g = parse_graph("d 4\nedge a b 1\nedge b c 3\nedge c a 2\n").unwrap();
//! let f = labeling::solve_one(&g).unwrap().expect("additive");
//! assert!(f.is_valid_for(&g));
//! assert_eq!(labeling::count(&g).unwrap().unwrap().per_component, vec![2]);
//! ```

pub mod analysis;
pub mod cycle_space;
pub mod error;
pub mod exec;
pub mod graph;
pub mod incidence;
pub mod labeling;
pub mod linalg;
pub mod modular;
pub mod oracle;
pub mod toric;
pub mod traversal;
pub mod walk;

pub use error::{Error, Result};
pub use exec::Strategy;
pub use graph::{parse_graph, Edge, GraphBuilder, LabeledGraph, VLabeling};
pub use modular::Modulus;

//! Exact integer linear algebra.

mod matrix;
pub mod minors;
pub mod snf;
mod summary;

pub use matrix::IntMatrix;
pub use minors::{determinant, gcd_maximal_minors, gcd_minors};
pub use snf::{snf, SnfResult};
pub use summary::{incidence_snf_summary, IncidenceSnfSummary};

//! Exact linear algebra over `Q` and over cyclotomic fields.

pub mod cyclotomic;
pub mod elimination;
pub mod matrix;
pub mod modular;

pub use cyclotomic::{cycle_kernel_report, root_of_unity_vector, CycleKernelReport, CyclotomicNumber, CyclotomicPoly};
pub use elimination::{are_independent, in_span, rank, rank_and_nullspace, span_rank, NullspaceBasis};
pub use matrix::{edge_vertex_incidence, vertex_edge_incidence, RationalMatrix};
pub use modular::rank_modular_oracle;

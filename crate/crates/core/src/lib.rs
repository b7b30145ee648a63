//! Exact incidence-matrix toolkit for hypergraphs.
//!
//! Hypergraphs, their edge-vertex and vertex-edge incidence matrices over
//! `Q`, null-space certificates built from equal and ratio partitions,
//! units and unit contraction, and weighted adjacency eigenpairs that are
//! verified by exact arithmetic.

pub mod error;
pub mod fixtures;
pub mod format;
pub mod hypergraph;
pub mod iso;
pub mod kernel;
pub mod label;
pub mod linalg;
pub mod random;
pub mod spectra;
pub mod units;
pub mod vector;

pub use error::{Error, Result};
pub use format::{parse_hypergraph, parse_json, parse_text, parse_weights, to_json, to_text};
pub use hypergraph::{uniform_cycle, Dual, Hypergraph, Induced, Star};
pub use iso::{are_isomorphic, IsoConfig};
pub use label::Label;
pub use linalg::{
    edge_vertex_incidence, rank, rank_and_nullspace, rank_modular_oracle, vertex_edge_incidence, CyclotomicNumber,
    CyclotomicPoly, NullspaceBasis, RationalMatrix,
};
pub use random::{random_hypergraph, RandomSpec};
pub use spectra::{
    aggregate_eigenvalues, class_partition, column_inner_product, is_finer, matrix_equivalence,
    predict_class_eigenpairs, predict_unit_eigenpairs, weighted_adjacency, EdgeWeighting, EigenvalueBound,
    MatrixEquivalence, PredictedEigenpair, WeightedAdjacency, WeightingKind,
};
pub use units::{compute_units, unit_contraction, Contraction, Unit, UnitPartition};
pub use vector::{integer, rational, EdgeVector, LabeledVector, Rational, Scalar, VertexVector};

//! Exact computation of skew-partition functions of edge-coloring models,
//! the circuit partition polynomial and connection-matrix ranks.
//!
//! Every numeric routine is generic over [`Scalar`]. The aliases at the
//! crate root fix the default exact type, [`Rational`].

pub mod catalog;
pub mod connection;
pub mod error;
pub mod graph;
pub mod limits;
pub mod martin;
pub mod matchdir;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod report;
pub mod scalar;
pub mod skew;

pub use connection::{
    build_g_u_pi, canonical_fragment_tensor, catalan_rank, connection_submatrix,
    eulerian_fragments, falling_factorial, fragment_tensor, glue, hook_length_dimension,
    matching_matrix, signed_cycle_count_sum, verify_fragment_gram, verify_skew_relation, Fragment,
};
pub use error::{Error, Result};
pub use graph::{
    all_compatible_local_orders, all_eulerian_orientations, circuit_decomposition,
    compatible_local_order, eulerian_orientation, CircuitDecomposition, Dart, LocalOrder,
    Multigraph, Orientation,
};
pub use limits::Limits;
pub use martin::{circuit_partition_polynomial, eval_negative_even, eval_positive, IntPolynomial};
pub use matchdir::DirectedMatching;
pub use matrix::{Matrix, RankCertificate};
pub use partition::{
    partition_function, skew_partition, skew_partition_digraph, skew_partition_direct,
    skew_partition_fixed_phi, verify_invariance, InvarianceOptions, LocallyOrderedDigraph,
};
pub use report::CheckReport;
pub use scalar::Scalar;
pub use skew::{
    bilinear_form, build_double_factorial_model, build_martin_model, dual_vector, tau_matching,
    SkewTensor, SparseTensor, SymModel,
};

/// Arbitrary-precision rationals: the default scalar.
pub type Rational = num_rational::BigRational;

pub type SkewTensorQ = SkewTensor<Rational>;
pub type SparseTensorQ = SparseTensor<Rational>;
pub type SymModelQ = SymModel<Rational>;
pub type RationalMatrix = Matrix<Rational>;

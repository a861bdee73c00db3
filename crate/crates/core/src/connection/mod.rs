//! Fragments, gluing, fragment tensors and the connection-matrix checks.

mod family;
mod fragment;
mod matrices;
mod relation;
mod tensor;

pub use family::eulerian_fragments;
pub use fragment::{
    fragment_local_order, fragment_orientation, fragment_walks, glue, Fragment, FragmentWalks,
};
pub use matrices::{
    catalan_rank, connection_submatrix, falling_factorial, hook_length_dimension, matching_matrix,
    matching_union_cycles, signed_cycle_count_sum,
};
pub use relation::{build_g_u_pi, relation_sum, verify_skew_relation};
pub use tensor::{canonical_fragment_tensor, fragment_tensor, verify_fragment_gram, walk_matching};

//! Recognition of k-partite k-uniform hypergraphs that arise from covering a
//! point set in `Z^d` by axis-aligned affine subspaces, together with
//! construction and verification of such representations.
//!
//! The modules follow the pipeline: [`hypergraph`] holds the data model,
//! [`separability`] computes the per-axis component graphs and separability
//! certificates, [`representation`] builds and checks point/subspace
//! assignments, [`reduction`] builds matching instances from simple graphs,
//! [`projection`] maps line representations to planar instances, and [`svg`]
//! renders planar instances.

pub mod error;
pub mod hypergraph;
pub mod labeling;
pub mod projection;
pub mod reduction;
pub mod representation;
pub mod separability;
pub mod svg;
pub mod union_find;

pub use error::{Error, Result};
pub use hypergraph::{
    edges_of, parse_hypergraph, parse_hypergraph_with, path_exists, EdgeRef, ParseOptions,
    PartitionedHypergraph, VertexRef,
};
pub use labeling::PartLabeling;
pub use projection::{project_to_plane, verify_planar_instance, PlanarInstance, PlanarLine, Projection};
pub use reduction::{
    brute_force_max_independent_set, brute_force_max_matching, build_matching_instance, matching_target,
    verify_gadget_instance, GadgetInstance, SimpleGraph,
};
pub use representation::{
    construct_representation, fixed_labeling, hypergraph_from_points, recognize, verify_representation, AxisSubspace,
    Construction, LabelingMode, Recognition, Representation,
};
pub use svg::emit_svg;
pub use separability::{
    build_component_partition, edge_separable, is_edge_separable, is_vertex_separable, vertex_separable,
    ComponentPartition, SeparabilityWitness, Verdict,
};

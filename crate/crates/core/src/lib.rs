//! Cuts of finite graphs, the pocsets they form, the median graphs dual to
//! those pocsets, and canonical spanning trees of median graphs.
//!
//! The usual chain is
//! [`enumerate_cuts`] → [`build_dual`] → [`check_median`] →
//! [`hyperplanes`] → [`greedy_colouring`] → [`canonical_spanning_tree`].
//! The [`ends`] module supplies truncations of infinite graphs to feed it.

pub mod corpus;
pub mod cuts;
pub mod dual;
pub mod ends;
pub mod error;
pub mod export;
pub mod geometry;
pub mod graph;
pub mod pocset;
pub mod treeify;
pub mod union_find;
pub mod vertex_set;

pub use cuts::{
    blocks_of, connectedize, density_criterion, enumerate_cuts, enumerate_cuts_with, h_blocks, non_nested_neighbors,
    separation_profile, successors, BlockPartition, CutOptions, CutStrategy, DensityReport, SeparationProfile,
};
pub use dual::{
    build_dual, build_dual_with, decode_antichain, dual_distance, dual_median, minimal_elements, orientation_neighbors,
    principal_orientation, DualMedianGraph, Orientation,
};
pub use ends::{
    end_estimate, pullback_cut, quasi_tree_cut_family, ray_prefix, shrink, truncate, truncate_with, BallTruncation,
    Generator, QuasiMap,
};
pub use error::{Error, ErrorClass, Result};
pub use geometry::{
    check_median, check_median_by_intervals, convex_halfspaces, helly_witness, hyperplanes, median, non_nested_witness,
    project, project_in_order, roundtrip, separating_halfspaces, Hyperplane, MedianCertificate, NestingVerdict,
};
pub use graph::{parse_graph, Boundary, BoundaryKind, FiniteGraph};
pub use pocset::{empty_corner, is_nested, validate_family, HalfSpace, Pocset, Violation};
pub use treeify::{
    canonical_spanning_tree, greedy_colouring, greedy_colouring_in_order, hyperplane_intersection_graph,
    verify_spanning_tree, ColourClasses, IntersectionGraph, SpanningTree, TreeViolation,
};
pub use vertex_set::VertexSet;

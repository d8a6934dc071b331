//! Exact solvers and a machine-checked harness for the gadget reduction
//! from CLIQUE to 2-CLUB.
//!
//! * [`graph`]: bitset-backed simple graphs, BFS distances, diameter,
//!   induced subgraphs, s-club tests, components.
//! * [`io`]: DIMACS and edge-list formats.
//! * [`reduction`]: the gadget, its target size and both solution maps.
//! * [`solvers`]: branch-and-bound maximum clique and maximum s-club, with
//!   exhaustive oracles.
//! * [`cluster`]: s-club cluster graphs and deletion certificates.
//! * [`sweep`] and [`report`]: the equivalence sweep and JSON reports.

pub mod bitset;
pub mod cluster;
mod error;
pub mod graph;
pub mod io;
pub mod reduction;
pub mod report;
pub mod solvers;
pub mod sweep;

pub use bitset::VertexSet;
pub use cluster::{
    is_s_club_cluster, min_deletion_to_s_club_cluster, verify_deletion, DeletionCertificate,
};
pub use error::{Error, Result};
pub use graph::{
    bfs_distances, connected_components, diameter, induced_subgraph, is_s_club, Distance, Graph,
    InducedSubgraph,
};
pub use io::{emit_graph, parse_graph, parse_graph_auto, GraphFormat};
pub use reduction::{
    extract_clique, forward_map, reduce, target_size, validate_gadget, GadgetLayout,
    GadgetViolation, ReducedInstance, Role,
};
pub use solvers::{
    brute_force_max_clique, brute_force_max_s_club, has_s_club_of_size, max_clique, max_s_club,
    SolveResult,
};

//! Conversion toolkit between the Set Splitting Problem and the directed
//! Hamiltonian Cycle Problem.
//!
//! An SSP instance asks whether a universe `{1, ..., u}` can be divided
//! into two non-empty sides so that none of the given subsets lies wholly
//! on one side. This crate simplifies such instances, converts them into
//! directed graphs of `4u + 5s + 6c + 2` vertices and `7u + s + 18c + 2`
//! arcs that are Hamiltonian exactly when the instance is solvable, solves
//! both formulations exactly, and translates witnesses in both directions:
//! a solution partition traces out a concrete Hamiltonian cycle, and any
//! Hamiltonian cycle of a converted graph reads back as a solution.

pub mod graph;
pub mod io;
pub mod reduction;
pub mod solver;
pub mod ssp;
pub mod witness;

pub use graph::{DiGraph, GraphError, VertexId};
pub use reduction::{
    build_graph, expected_counts, occurrence_tables, ConstructionError, LabelError, Layout,
    OccurrenceTables, ReductionArtifact, VertexLabel,
};
pub use solver::{
    find_hamiltonian_cycle, verify_cycle, Cycle, SolveConfig, SolveError, SolveOutcome, SolveStats,
    DEFAULT_NODE_BUDGET,
};
pub use ssp::{
    brute_force_ssp, check_partition, generate_random_instance, simplify, ElementId, GenError,
    InstanceError, NoReason, NotSimpleForm, OracleError, Partition, PartitionMismatch, Side,
    SimpleForm, SimplificationResult, SplitReport, SspInstance, YesReason,
    BRUTE_FORCE_MAX_UNIVERSE,
};
pub use witness::{
    cycle_from_partition, extract_partition, extract_partition_original, ExtractError, TraceDetail,
    TraceFailure,
};

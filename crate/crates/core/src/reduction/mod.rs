//! Conversion of simple-form SSP instances into directed graphs whose
//! Hamiltonian cycles encode solutions.

mod build;
mod labels;
mod occurrence;

pub use build::{build_graph, expected_counts, ConstructionError, ReductionArtifact};
pub use labels::{LabelError, Layout, VertexLabel};
pub use occurrence::{occurrence_tables, OccurrenceTables};

//! Parsers and serializers for every on-disk format: SSP instances (text
//! and JSON), graph edge lists, label-map sidecars, DOT renderings, and
//! partition and cycle files. Writers are deterministic; readers reject
//! malformed input rather than repairing it.

mod cycle_file;
mod dot;
mod edge_list;
mod partition_file;
mod ssp_format;

pub use cycle_file::{read_cycle, write_cycle, CycleFileError};
pub use dot::{write_dot, DotError, RenderOptions};
pub use edge_list::{read_edge_list, write_edge_list, write_edge_list_graph, EdgeListError};
pub use partition_file::{read_partition, write_partition, PartitionFileError};
pub use ssp_format::{
    parse_ssp, parse_ssp_json, parse_ssp_text, write_ssp_json, write_ssp_text, ParseSspError,
};

use crate::reduction::ReductionArtifact;

/// Label-map sidecar: one line `<flat-id> U <i> <j>` / `S <i> <j>` /
/// `C <j>` per vertex, in flat-id order.
pub fn write_label_map(art: &ReductionArtifact) -> String {
    let mut out = String::new();
    for id in 1..=art.graph().vertex_count() {
        let label = art.label_of(id).expect("id in range");
        out.push_str(&format!("{id} {label}\n"));
    }
    out
}

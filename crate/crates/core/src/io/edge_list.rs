//! Edge-list graph format: a header `p hcp <n> <m>` followed by `m` lines
//! `a <from> <to>` with 1-based ids. `c` lines are comments.

use thiserror::Error;

use crate::graph::{DiGraph, GraphError};
use crate::reduction::ReductionArtifact;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing header line \"p hcp <n> <m>\"")]
    MissingHeader,
    #[error("line {line}: malformed header")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected an arc line \"a <from> <to>\"")]
    MalformedArc { line: usize },
    #[error("header promises {expected} arcs, found {found}")]
    ArcCountMismatch { expected: u64, found: u64 },
    #[error("line {line}: unexpected content")]
    TrailingContent { line: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Serializes the converted graph with arcs in construction order.
pub fn write_edge_list(art: &ReductionArtifact) -> String {
    render(
        art.graph().vertex_count(),
        art.graph().edge_count(),
        art.arcs().iter().copied(),
    )
}

/// Serializes an arbitrary graph with arcs in ascending order.
pub fn write_edge_list_graph(g: &DiGraph) -> String {
    render(g.vertex_count(), g.edge_count(), g.arcs())
}

fn render(n: u32, m: u64, arcs: impl Iterator<Item = (u32, u32)>) -> String {
    let mut out = format!("p hcp {n} {m}\n");
    for (a, b) in arcs {
        out.push_str(&format!("a {a} {b}\n"));
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<DiGraph, EdgeListError> {
    let mut n = 0u32;
    let mut m = 0u64;
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    let mut saw_header = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if !saw_header {
            let mut tok = line.split_whitespace();
            if tok.next() != Some("p") || tok.next() != Some("hcp") {
                return Err(EdgeListError::MalformedHeader { line: line_no });
            }
            n = tok
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(EdgeListError::MalformedHeader { line: line_no })?;
            m = tok
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(EdgeListError::MalformedHeader { line: line_no })?;
            if tok.next().is_some() {
                return Err(EdgeListError::MalformedHeader { line: line_no });
            }
            saw_header = true;
            continue;
        }
        if arcs.len() as u64 == m {
            return Err(EdgeListError::TrailingContent { line: line_no });
        }
        let mut tok = line.split_whitespace();
        if tok.next() != Some("a") {
            return Err(EdgeListError::MalformedArc { line: line_no });
        }
        let from: u32 = tok
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::MalformedArc { line: line_no })?;
        let to: u32 = tok
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::MalformedArc { line: line_no })?;
        if tok.next().is_some() {
            return Err(EdgeListError::MalformedArc { line: line_no });
        }
        arcs.push((from, to));
    }
    if !saw_header {
        return Err(EdgeListError::MissingHeader);
    }
    if arcs.len() as u64 != m {
        return Err(EdgeListError::ArcCountMismatch {
            expected: m,
            found: arcs.len() as u64,
        });
    }
    Ok(DiGraph::from_arcs(n, &arcs)?)
}

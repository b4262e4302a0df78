//! Graphviz DOT rendering of converted graphs.
//!
//! Mutually directed arc pairs collapse to a single bold edge drawn with
//! `dir=both`, mirroring the construction's undirected-looking gadget
//! edges. An optional Hamiltonian cycle is highlighted; with
//! `stage_split` its arcs before the first connector vertex are dashed
//! (the partition-choice phase) and the rest dotted (the verification
//! phase). Highlighted arcs are never collapsed.

use std::collections::HashMap;

use thiserror::Error;

use crate::reduction::{ReductionArtifact, VertexLabel};
use crate::solver::{verify_cycle, Cycle};

#[derive(Debug, Clone, Default)]
pub struct RenderOptions {
    pub highlight: Option<Cycle>,
    pub stage_split: bool,
    pub collapse_bidirectional: bool,
}

impl RenderOptions {
    pub fn plain() -> RenderOptions {
        RenderOptions {
            highlight: None,
            stage_split: false,
            collapse_bidirectional: true,
        }
    }

    pub fn highlighted(cycle: Cycle) -> RenderOptions {
        RenderOptions {
            highlight: Some(cycle),
            stage_split: true,
            collapse_bidirectional: true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DotError {
    #[error("highlight cycle is not Hamiltonian for this graph")]
    InvalidHighlight,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Stage {
    Choice,
    Verify,
    Whole,
}

pub fn write_dot(art: &ReductionArtifact, opts: &RenderOptions) -> Result<String, DotError> {
    let g = art.graph();
    let mut cycle_arcs: HashMap<(u32, u32), Stage> = HashMap::new();
    if let Some(cycle) = &opts.highlight {
        if !verify_cycle(g, cycle) {
            return Err(DotError::InvalidHighlight);
        }
        let order = cycle.order();
        let n = order.len();
        let boundary = if opts.stage_split {
            let c1 = art
                .flat_id(VertexLabel::C { slot: 1 })
                .expect("connector exists");
            order
                .iter()
                .position(|&v| v == c1)
                .expect("cycle covers the connector")
        } else {
            usize::MAX
        };
        for t in 0..n {
            let from = order[t];
            let to = order[(t + 1) % n];
            let stage = if !opts.stage_split {
                Stage::Whole
            } else if t < boundary {
                Stage::Choice
            } else {
                Stage::Verify
            };
            cycle_arcs.insert((from, to), stage);
        }
    }

    let mut out = String::from("digraph converted {\n");
    for id in 1..=g.vertex_count() {
        let label = match art.label_of(id).expect("id in range") {
            VertexLabel::U { element, slot } => format!("U{element}:{slot}"),
            VertexLabel::S { subset, slot } => format!("S{subset}:{slot}"),
            VertexLabel::C { slot } => format!("C{slot}"),
        };
        out.push_str(&format!("  n{id} [label=\"{label}\"];\n"));
    }
    let mut emitted_pair = std::collections::HashSet::new();
    for &(a, b) in art.arcs() {
        if let Some(stage) = cycle_arcs.get(&(a, b)) {
            let style = match stage {
                Stage::Choice => "dashed",
                Stage::Verify => "dotted",
                Stage::Whole => "bold",
            };
            out.push_str(&format!("  n{a} -> n{b} [style={style}];\n"));
            continue;
        }
        let reverse_plain = g.has_arc(b, a) && !cycle_arcs.contains_key(&(b, a));
        if opts.collapse_bidirectional && reverse_plain {
            let key = (a.min(b), a.max(b));
            if !emitted_pair.insert(key) {
                continue;
            }
            out.push_str(&format!("  n{a} -> n{b} [dir=both, style=bold];\n"));
            continue;
        }
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

//! Construction of the directed graph encoding an SSP instance.
//!
//! The graph is assembled in three steps. Step 1 gives every universe
//! element a four-vertex block whose only free choice is the visiting
//! order of slots 2 and 3 (the partition choice). Step 2 gives every
//! subset of size `k` a block of `5 + 6k` vertices: entry slot 1, exit
//! slot 2, a middle triple 3-4-5 that any Hamiltonian cycle must thread
//! exactly once, and two parallel banks of `k` triples. The triple at
//! slots `(3+3j, 4+3j, 5+3j)` stands for "the j-th entry is on side one";
//! the copy shifted by `3k` stands for side two. Step 3 wires the blocks
//! into a single cycle skeleton and adds, per element, two parallel paths
//! (one per side) that sweep through the opposite-side triples of every
//! subset containing the element.
//!
//! The per-element sweep enters a block at the top of a triple (the `c`
//! slot, reached as `2 + d` or `2 + e` below), walks it downward, and
//! leaves from the `a` slot. With occurrence tables F and R the offsets
//! are `d = 3 + 3R` into the unshifted bank and `e = 3 + 3|S| + 3R` into
//! the shifted one.
//!
//! Vertex and edge totals admit closed forms, checked after every build:
//! `4u + 5s + 6c + 2` vertices and `7u + s + 18c + 2` arcs.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{DiGraph, GraphError, VertexId};
use crate::ssp::SimpleForm;

use super::labels::{LabelError, Layout, VertexLabel};
use super::occurrence::{occurrence_tables, OccurrenceTables};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("conversion requires at least one subset")]
    EmptyFamily,
    #[error("conversion requires universe size >= 2 (got {0})")]
    UniverseTooSmall(u32),
    #[error("subset {subset} has fewer than two entries; simplification must remove it first")]
    SubsetTooSmall { subset: u32 },
    #[error("element {0} occurs in no subset; not in simple form")]
    UncoveredElement(u32),
    #[error("internal: duplicate arc {0} -> {1} emitted by the construction")]
    DuplicateArc(VertexId, VertexId),
    #[error("internal: built {built} {what}, closed form predicts {expected}")]
    CountMismatch {
        what: &'static str,
        built: u64,
        expected: u64,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Closed-form vertex and edge counts for a conversion with universe size
/// `u`, `s` subsets, and `c` total subset entries.
pub fn expected_counts(u: u64, s: u64, c: u64) -> (u64, u64) {
    (4 * u + 5 * s + 6 * c + 2, 7 * u + s + 18 * c + 2)
}

/// The converted graph, its arc list in emission order, the flat-id
/// layout, the occurrence tables, and the simple form it encodes.
#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    graph: DiGraph,
    arcs: Vec<(VertexId, VertexId)>,
    layout: Layout,
    occ: OccurrenceTables,
    source: SimpleForm,
}

impl ReductionArtifact {
    pub fn graph(&self) -> &DiGraph {
        &self.graph
    }

    /// Arcs in the order the construction emits them (deterministic).
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn occurrences(&self) -> &OccurrenceTables {
        &self.occ
    }

    pub fn source(&self) -> &SimpleForm {
        &self.source
    }

    pub fn flat_id(&self, label: VertexLabel) -> Result<VertexId, LabelError> {
        self.layout.flat_id(label)
    }

    pub fn label_of(&self, id: VertexId) -> Result<VertexLabel, LabelError> {
        self.layout.label_of(id)
    }
}

struct ArcSink {
    arcs: Vec<(VertexId, VertexId)>,
    seen: HashSet<(VertexId, VertexId)>,
}

impl ArcSink {
    fn new(capacity: usize) -> ArcSink {
        ArcSink {
            arcs: Vec::with_capacity(capacity),
            seen: HashSet::with_capacity(capacity),
        }
    }

    fn add(&mut self, from: VertexId, to: VertexId) -> Result<(), ConstructionError> {
        if !self.seen.insert((from, to)) {
            return Err(ConstructionError::DuplicateArc(from, to));
        }
        self.arcs.push((from, to));
        Ok(())
    }
}

pub fn build_graph(simple: &SimpleForm) -> Result<ReductionArtifact, ConstructionError> {
    let inst = simple.instance();
    let u = inst.universe_size();
    let s = inst.subset_count() as u32;
    if s == 0 {
        return Err(ConstructionError::EmptyFamily);
    }
    if u < 2 {
        return Err(ConstructionError::UniverseTooSmall(u));
    }
    for (i, subset) in inst.subsets().iter().enumerate() {
        if subset.len() < 2 {
            return Err(ConstructionError::SubsetTooSmall {
                subset: i as u32 + 1,
            });
        }
    }
    let sizes: Vec<u32> = inst.subsets().iter().map(|s| s.len() as u32).collect();
    let c: u64 = sizes.iter().map(|&k| k as u64).sum();
    let layout = Layout::new(u, sizes.clone());
    let occ = occurrence_tables(simple)?;
    let (expected_v, expected_e) = expected_counts(u as u64, s as u64, c);
    if layout.vertex_count() as u64 != expected_v {
        return Err(ConstructionError::CountMismatch {
            what: "vertices",
            built: layout.vertex_count() as u64,
            expected: expected_v,
        });
    }

    let uv = |i: u32, j: u32| {
        layout
            .flat_id(VertexLabel::U {
                element: i,
                slot: j,
            })
            .expect("element slot in range")
    };
    let sv = |i: u32, j: u32| {
        layout
            .flat_id(VertexLabel::S { subset: i, slot: j })
            .expect("subset slot in range")
    };
    let c1 = layout.flat_id(VertexLabel::C { slot: 1 }).unwrap();
    let c2 = layout.flat_id(VertexLabel::C { slot: 2 }).unwrap();

    let mut sink = ArcSink::new(expected_e as usize);

    // Step 1: the choice diamond of every element block.
    for i in 1..=u {
        sink.add(uv(i, 1), uv(i, 2))?;
        sink.add(uv(i, 1), uv(i, 3))?;
        sink.add(uv(i, 2), uv(i, 3))?;
        sink.add(uv(i, 3), uv(i, 2))?;
    }

    // Step 2: one block per subset.
    for i in 1..=s {
        let k = sizes[(i - 1) as usize];
        // Group I: entry fan-out, exit fan-in, middle triple.
        sink.add(sv(i, 1), sv(i, 6))?;
        sink.add(sv(i, 1), sv(i, 6 + 3 * k))?;
        sink.add(sv(i, 5 + 3 * k), sv(i, 2))?;
        sink.add(sv(i, 5 + 6 * k), sv(i, 2))?;
        sink.add(sv(i, 3), sv(i, 4))?;
        sink.add(sv(i, 4), sv(i, 3))?;
        sink.add(sv(i, 4), sv(i, 5))?;
        sink.add(sv(i, 5), sv(i, 4))?;
        // Group II: the two banks of entry triples, linked internally.
        for j in 1..=k {
            let (a, b, cc) = (3 + 3 * j, 4 + 3 * j, 5 + 3 * j);
            sink.add(sv(i, a), sv(i, b))?;
            sink.add(sv(i, b), sv(i, a))?;
            sink.add(sv(i, b), sv(i, cc))?;
            sink.add(sv(i, cc), sv(i, b))?;
            sink.add(sv(i, a + 3 * k), sv(i, b + 3 * k))?;
            sink.add(sv(i, b + 3 * k), sv(i, a + 3 * k))?;
            sink.add(sv(i, b + 3 * k), sv(i, cc + 3 * k))?;
            sink.add(sv(i, cc + 3 * k), sv(i, b + 3 * k))?;
        }
        // Group III: triple-to-triple steps, same bank or across, plus the
        // detours through the middle triple.
        for j in 1..=(k - 1) {
            let cc = 5 + 3 * j;
            sink.add(sv(i, cc), sv(i, cc + 1))?;
            sink.add(sv(i, cc), sv(i, cc + 1 + 3 * k))?;
            sink.add(sv(i, cc + 3 * k), sv(i, cc + 1))?;
            sink.add(sv(i, cc + 3 * k), sv(i, cc + 1 + 3 * k))?;
            sink.add(sv(i, cc), sv(i, 3))?;
            sink.add(sv(i, 3), sv(i, cc + 1))?;
            sink.add(sv(i, cc + 3 * k), sv(i, 5))?;
            sink.add(sv(i, 5), sv(i, cc + 3 * k + 1))?;
        }
    }

    // Step 3: connectors. Subset blocks chain onward from their exit slot
    // 2 (both final triple tops already point into it), the way the
    // verification phase walks them.
    sink.add(uv(u, 4), c1)?;
    sink.add(c1, sv(1, 1))?;
    sink.add(sv(s, 2), c2)?;
    sink.add(c2, uv(1, 1))?;
    for i in 1..u {
        sink.add(uv(i, 4), uv(i + 1, 1))?;
    }
    for j in 1..s {
        sink.add(sv(j, 2), sv(j + 1, 1))?;
    }
    // Per-element sweep paths through the opposite-side triples.
    for e in 1..=u {
        let blocks = occ.subsets_containing(e);
        let poss = occ.positions(e);
        let f = blocks.len();
        let d = |t: usize| 3 + 3 * poss[t];
        let ee = |t: usize| 3 + 3 * sizes[(blocks[t] - 1) as usize] + 3 * poss[t];
        sink.add(uv(e, 2), sv(blocks[0], 2 + ee(0)))?;
        sink.add(sv(blocks[f - 1], ee(f - 1)), uv(e, 4))?;
        sink.add(uv(e, 3), sv(blocks[0], 2 + d(0)))?;
        sink.add(sv(blocks[f - 1], d(f - 1)), uv(e, 4))?;
        for t in 0..f - 1 {
            sink.add(sv(blocks[t], ee(t)), sv(blocks[t + 1], 2 + ee(t + 1)))?;
            sink.add(sv(blocks[t], d(t)), sv(blocks[t + 1], 2 + d(t + 1)))?;
        }
    }

    let arcs = sink.arcs;
    if arcs.len() as u64 != expected_e {
        return Err(ConstructionError::CountMismatch {
            what: "edges",
            built: arcs.len() as u64,
            expected: expected_e,
        });
    }
    let graph = DiGraph::from_arcs(layout.vertex_count(), &arcs)?;
    Ok(ReductionArtifact {
        graph,
        arcs,
        layout,
        occ,
        source: simple.clone(),
    })
}
